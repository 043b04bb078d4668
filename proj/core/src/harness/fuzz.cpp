#include <algorithm>
#include <array>
#include <atomic>
#include <string_view>
#include <thread>
#include <vector>

#include "sixpoint/error.hpp"
#include "sixpoint/harness/commands.hpp"
#include "sixpoint/harness/oracle.hpp"
#include "sixpoint/harness/sampler.hpp"

namespace sixpoint::harness {

namespace {

enum class Check {
  ceva,
  menelaus,
  sixpoint_concurrence,
  sixpoint_collinearity,
  solve_concurrence,
  solve_collinearity,
  routh_cevian,
  routh_menelaus,
  sixpoint_edges,
  sixpoint_vertices,
  closed_form_edges,
  closed_form_vertices,
  reduction,
  affine,
};

struct CheckInfo {
  Check check;
  std::string_view name;
  std::string_view scope;
};

constexpr std::array<CheckInfo, 14> kChecks = {{
    {Check::ceva, "ceva", "classical"},
    {Check::menelaus, "menelaus", "classical"},
    {Check::sixpoint_concurrence, "sixpoint-concurrence", "sixpoint"},
    {Check::sixpoint_collinearity, "sixpoint-collinearity", "sixpoint"},
    {Check::solve_concurrence, "solve-concurrence", "solve"},
    {Check::solve_collinearity, "solve-collinearity", "solve"},
    {Check::routh_cevian, "routh-cevian", "areas"},
    {Check::routh_menelaus, "routh-menelaus", "areas"},
    {Check::sixpoint_edges, "sixpoint-edges", "areas"},
    {Check::sixpoint_vertices, "sixpoint-vertices", "areas"},
    {Check::closed_form_edges, "closed-form-edges", "areas"},
    {Check::closed_form_vertices, "closed-form-vertices", "areas"},
    {Check::reduction, "reduction", "reduction"},
    {Check::affine, "affine", "affine"},
}};

constexpr std::array<std::string_view, 7> kScopes = {"all",   "classical", "sixpoint", "solve",
                                                     "areas", "reduction", "affine"};

enum class Verdict { agree, disagree, degenerate, expected_degenerate };

struct Outcome {
  Verdict verdict = Verdict::agree;
  std::string detail;
};

struct TrialResult {
  std::array<std::optional<Outcome>, kChecks.size()> outcomes;
  bool multi_infinite = false;
};

std::string describe(const CevianRatios& r) {
  return "d=" + r.d.to_string() + ",e=" + r.e.to_string() + ",f=" + r.f.to_string();
}

std::string describe(const SixRatios& r) {
  std::string out;
  for (SixRatioId id : kSixRatioIds) {
    if (!out.empty()) out += ',';
    out += std::string(key(id)) + "=" + get(r, id).to_string();
  }
  return out;
}

template <typename Ratios>
Outcome outcome(Agreement a, const Ratios& r, const std::string& detail) {
  switch (a) {
    case Agreement::agree: return {Verdict::agree, {}};
    case Agreement::degenerate: return {Verdict::degenerate, {}};
    case Agreement::disagree:
      // With two or more infinite ratios several constructed points can
      // collapse onto vertices; such mismatches are tallied, not failed.
      return {infinite_count(r) >= 2 ? Verdict::expected_degenerate : Verdict::disagree,
              "ratios=" + describe(r) + " " + detail};
  }
  return {};
}

std::string show(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "degenerate"; }
std::string show(const std::optional<AreaRatio>& v) { return v ? v->to_string() : "degenerate"; }

// Everything a trial needs, drawn in a fixed order so that every scope sees
// the same values for a given (seed, trial).
struct Draw {
  Triangle triangle;
  CevianRatios cevian;
  SixRatios six;
  AffineMap map;
  SixRatios finite_six;
  std::size_t missing_concurrence;
  std::size_t missing_collinearity;
  std::array<ProjRatio, 4> probes;

  Draw(Sampler& s, long m)
      : triangle(s.triangle(m)),
        cevian(s.cevian_ratios(m)),
        six(s.six_ratios(m)),
        map(s.affine_map(m)),
        finite_six(s.six_ratios(m, RatioDraw::finite)),
        missing_concurrence(s.below(6)),
        missing_collinearity(s.below(6)),
        probes{s.ratio(m, RatioDraw::finite), s.ratio(m, RatioDraw::finite),
               s.ratio(m, RatioDraw::finite), s.ratio(m, RatioDraw::finite)} {}
};

Outcome solve_check(const Draw& d, SolveMode mode, std::size_t missing) {
  PartialSixRatios five;
  for (SixRatioId id : kSixRatioIds) five[static_cast<std::size_t>(id)] = get(d.finite_six, id);
  five[missing].reset();
  SolveResult result = solve_sixth_ratio(five, mode);

  auto predicate = [mode](const SixRatios& r) {
    return mode == SolveMode::concurrence ? sixpoint_concurrence_holds(r)
                                          : sixpoint_collinearity_holds(r);
  };
  auto oracle = [mode, &d](const SixRatios& r) {
    return mode == SolveMode::concurrence ? oracle_sixpoint_concurrence(d.triangle, r)
                                          : oracle_sixpoint_collinearity(d.triangle, r);
  };
  SixRatios filled = d.finite_six;
  ProjRatio& slot = get(filled, kSixRatioIds[missing]);
  std::string where = "missing=" + std::string(key(kSixRatioIds[missing]));

  if (result.kind == SolveResult::Kind::none) {
    for (const ProjRatio& x : d.probes) {
      slot = x;
      if (predicate(filled)) {
        return outcome(Agreement::disagree, filled, where + " solver=none but probe satisfies");
      }
    }
    return {Verdict::agree, {}};
  }

  slot = result.kind == SolveResult::Kind::unique ? *result.value : d.probes[0];
  if (!predicate(filled)) {
    return outcome(Agreement::disagree, filled, where + " solution does not satisfy predicate");
  }
  auto geometric = oracle(filled);
  if (!geometric) return {Verdict::degenerate, {}};
  return outcome(*geometric ? Agreement::agree : Agreement::disagree, filled,
                 where + " oracle rejects solved configuration");
}

template <typename ByMeets, typename ClosedForm>
Outcome closed_form_check(const Draw& d, ByMeets by_meets, ClosedForm closed_form) {
  auto v = by_meets(d.triangle, d.six);
  if (!v) return {Verdict::degenerate, {}};
  try {
    if (*v == closed_form(d.triangle, d.six)) return {Verdict::agree, {}};
  } catch (const Error&) {
  }
  return outcome(Agreement::disagree, d.six, "intersection and closed-form vertices differ");
}

Outcome reduction_check(const Draw& d) {
  const CevianRatios& r = d.cevian;
  SixRatios six = classical_embedding(r);
  std::string failures;
  if (ceva_holds(r) != sixpoint_concurrence_holds(six)) failures += " concurrence";
  if (menelaus_holds(r) != sixpoint_collinearity_holds(six)) failures += " collinearity";
  if (routh_cevian_triangle_ratio(r) != sixpoint_edge_triangle_ratio(six)) failures += " edges";
  if (routh_menelaus_triangle_ratio(r) != sixpoint_vertex_triangle_ratio(six)) failures += " vertices";
  if (failures.empty()) return {Verdict::agree, {}};
  // Reductions are polynomial identities; infinite ratios are no excuse.
  return {Verdict::disagree, "ratios=" + describe(r) + " failed:" + failures};
}

Outcome affine_check(const Draw& d) {
  const Triangle& t = d.triangle;
  Triangle moved = d.map(t);
  std::string failures;
  auto expect = [&failures](bool ok, const char* what) {
    if (!ok) failures += std::string(" ") + what;
  };
  expect(oracle_ceva(t, d.cevian) == oracle_ceva(moved, d.cevian), "ceva");
  expect(oracle_menelaus(t, d.cevian) == oracle_menelaus(moved, d.cevian), "menelaus");
  expect(oracle_sixpoint_concurrence(t, d.six) == oracle_sixpoint_concurrence(moved, d.six),
         "concurrence");
  expect(oracle_sixpoint_collinearity(t, d.six) == oracle_sixpoint_collinearity(moved, d.six),
         "collinearity");
  expect(oracle_cevian_area(t, d.cevian) == oracle_cevian_area(moved, d.cevian), "cevian-area");
  expect(oracle_menelaus_area(t, d.cevian) == oracle_menelaus_area(moved, d.cevian),
         "menelaus-area");
  expect(oracle_edge_area(t, d.six) == oracle_edge_area(moved, d.six), "edge-area");
  expect(oracle_vertex_area(t, d.six) == oracle_vertex_area(moved, d.six), "vertex-area");

  SixPoints before = construct_six_points(t, d.six);
  SixPoints after = construct_six_points(moved, d.six);
  expect(d.map(before.a_plus) == after.a_plus && d.map(before.a_minus) == after.a_minus &&
             d.map(before.b_plus) == after.b_plus && d.map(before.b_minus) == after.b_minus &&
             d.map(before.c_plus) == after.c_plus && d.map(before.c_minus) == after.c_minus,
         "equivariance");
  expect(ratio_of_section(moved.b(), moved.c(), after.a_plus) == d.six.a_plus &&
             ratio_of_section(moved.a(), moved.b(), after.c_plus) == d.six.c_plus,
         "section-ratio");
  expect(signed_area(moved.a(), moved.b(), moved.c()) ==
             d.map.determinant() * signed_area(t.a(), t.b(), t.c()),
         "area-scaling");

  if (failures.empty()) return {Verdict::agree, {}};
  return {Verdict::disagree, "map=" + d.map.to_string() + " ratios=" + describe(d.six) +
                                 " failed:" + failures};
}

TrialResult run_trial(const FuzzOptions& options, std::uint64_t index,
                      const std::array<bool, kChecks.size()>& enabled) {
  Sampler sampler(options.seed, index);
  Draw d(sampler, options.max_magnitude);
  const Triangle& t = d.triangle;

  TrialResult result;
  result.multi_infinite = infinite_count(d.cevian) >= 2 || infinite_count(d.six) >= 2;
  auto run = [&](Check c, auto&& body) {
    auto i = static_cast<std::size_t>(c);
    if (!enabled[i]) return;
    try {
      result.outcomes[i] = body();
    } catch (const std::exception& e) {
      result.outcomes[i] = Outcome{Verdict::disagree, std::string("exception: ") + e.what()};
    }
  };

  run(Check::ceva, [&] {
    auto o = oracle_ceva(t, d.cevian);
    bool p = ceva_holds(d.cevian);
    return outcome(compare(p, o), d.cevian, "predicate=" + show(p) + " oracle=" + show(o));
  });
  run(Check::menelaus, [&] {
    auto o = oracle_menelaus(t, d.cevian);
    bool p = menelaus_holds(d.cevian);
    return outcome(compare(p, o), d.cevian, "predicate=" + show(p) + " oracle=" + show(o));
  });
  run(Check::sixpoint_concurrence, [&] {
    auto o = oracle_sixpoint_concurrence(t, d.six);
    bool p = sixpoint_concurrence_holds(d.six);
    return outcome(compare(p, o), d.six, "predicate=" + show(p) + " oracle=" + show(o));
  });
  run(Check::sixpoint_collinearity, [&] {
    auto o = oracle_sixpoint_collinearity(t, d.six);
    bool p = sixpoint_collinearity_holds(d.six);
    return outcome(compare(p, o), d.six, "predicate=" + show(p) + " oracle=" + show(o));
  });
  run(Check::solve_concurrence,
      [&] { return solve_check(d, SolveMode::concurrence, d.missing_concurrence); });
  run(Check::solve_collinearity,
      [&] { return solve_check(d, SolveMode::collinearity, d.missing_collinearity); });

  auto area = [&](const auto& r, const AreaRatio& f, const std::optional<AreaRatio>& o) {
    return outcome(compare(f, o), r, "formula=" + f.to_string() + " oracle=" + show(o));
  };
  run(Check::routh_cevian, [&] {
    return area(d.cevian, routh_cevian_triangle_ratio(d.cevian), oracle_cevian_area(t, d.cevian));
  });
  run(Check::routh_menelaus, [&] {
    return area(d.cevian, routh_menelaus_triangle_ratio(d.cevian),
                oracle_menelaus_area(t, d.cevian));
  });
  run(Check::sixpoint_edges, [&] {
    return area(d.six, sixpoint_edge_triangle_ratio(d.six), oracle_edge_area(t, d.six));
  });
  run(Check::sixpoint_vertices, [&] {
    return area(d.six, sixpoint_vertex_triangle_ratio(d.six), oracle_vertex_area(t, d.six));
  });
  run(Check::closed_form_edges, [&] {
    return closed_form_check(d, edge_vertices_by_meets, edge_triangle_vertices_closed_form);
  });
  run(Check::closed_form_vertices, [&] {
    return closed_form_check(d, hat_points_by_meets, vertex_triangle_vertices_closed_form);
  });
  run(Check::reduction, [&] { return reduction_check(d); });
  run(Check::affine, [&] { return affine_check(d); });
  return result;
}

}  // namespace

Report run_fuzz(const FuzzOptions& options) {
  if (options.trials < 1) throw Error(Errc::usage, "trials: must be at least 1");
  if (options.max_magnitude < 1) throw Error(Errc::usage, "max-magnitude: must be at least 1");
  if (std::find(kScopes.begin(), kScopes.end(), options.scope) == kScopes.end()) {
    throw Error(Errc::usage, "mode: unknown fuzz scope '" + options.scope + "'");
  }

  std::array<bool, kChecks.size()> enabled{};
  for (std::size_t i = 0; i < kChecks.size(); ++i) {
    enabled[i] = options.scope == "all" || kChecks[i].scope == options.scope;
  }

  // Trials are independent; results are stored by index so aggregation does
  // not depend on scheduling.
  std::vector<TrialResult> results(options.trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < options.trials;) {
      results[i] = run_trial(options, options.first_trial + i, enabled);
    }
  };
  unsigned jobs = std::clamp<unsigned>(options.jobs, 1, 256);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  struct Tally {
    std::uint64_t checked = 0, agreed = 0, degenerate = 0, expected_degenerate = 0, disagreed = 0;
  };
  std::array<Tally, kChecks.size()> tallies{};
  std::vector<std::string> disagreements;
  std::uint64_t multi_infinite = 0;
  for (std::uint64_t i = 0; i < options.trials; ++i) {
    const TrialResult& r = results[i];
    multi_infinite += r.multi_infinite ? 1 : 0;
    for (std::size_t c = 0; c < kChecks.size(); ++c) {
      if (!r.outcomes[c]) continue;
      Tally& tally = tallies[c];
      ++tally.checked;
      switch (r.outcomes[c]->verdict) {
        case Verdict::agree: ++tally.agreed; break;
        case Verdict::degenerate: ++tally.degenerate; break;
        case Verdict::expected_degenerate: ++tally.expected_degenerate; break;
        case Verdict::disagree:
          ++tally.disagreed;
          disagreements.push_back("trial=" + std::to_string(options.first_trial + i) +
                                  " check=" + std::string(kChecks[c].name) + " " +
                                  r.outcomes[c]->detail);
          break;
      }
    }
  }

  Report report;
  report.add("command", "fuzz");
  report.add("seed", std::to_string(options.seed));
  report.add("first_trial", std::to_string(options.first_trial));
  report.add("trials", std::to_string(options.trials));
  report.add("max_magnitude", std::to_string(options.max_magnitude));
  report.add("scope", options.scope);
  report.add("draws.multi_infinite", std::to_string(multi_infinite));
  for (std::size_t c = 0; c < kChecks.size(); ++c) {
    if (!enabled[c]) continue;
    std::string prefix = "check." + std::string(kChecks[c].name) + ".";
    const Tally& t = tallies[c];
    report.add(prefix + "checked", std::to_string(t.checked));
    report.add(prefix + "agreed", std::to_string(t.agreed));
    report.add(prefix + "degenerate", std::to_string(t.degenerate));
    report.add(prefix + "expected_degenerate", std::to_string(t.expected_degenerate));
    report.add(prefix + "disagreed", std::to_string(t.disagreed));
  }
  report.add("disagreements", std::to_string(disagreements.size()));
  if (!disagreements.empty()) report.mark_disagreement();
  for (std::size_t i = 0; i < disagreements.size(); ++i) {
    report.add("disagreement." + std::to_string(i + 1), disagreements[i]);
  }
  report.add("agreement", disagreements.empty());
  return report;
}

}  // namespace sixpoint::harness
