#include "sixpoint/harness/commands.hpp"

#include <functional>

#include "sixpoint/error.hpp"
#include "sixpoint/harness/oracle.hpp"
#include "sixpoint/routh.hpp"

namespace sixpoint::harness {

namespace {

[[noreturn]] void usage(const std::string& field, const std::string& message) {
  throw Error(Errc::usage, field + ": " + message);
}

const RatioFamily& require_ratios(const ConfigDoc& config) {
  if (!config.ratios) usage("ratios", "missing");
  return *config.ratios;
}

void echo_inputs(Report& report, const char* command, const ConfigDoc& config,
                 const std::string& mode) {
  report.add("command", command);
  report.add("mode", mode);
  if (config.ratios) {
    if (const auto* c = std::get_if<CevianRatios>(&*config.ratios)) {
      report.add("ratios.d", c->d.to_string());
      report.add("ratios.e", c->e.to_string());
      report.add("ratios.f", c->f.to_string());
    } else {
      const auto& s = std::get<SixRatios>(*config.ratios);
      for (SixRatioId id : kSixRatioIds) {
        report.add("ratios." + std::string(key(id)), get(s, id).to_string());
      }
    }
  }
  if (config.triangle) report.add("triangle", format_triangle(*config.triangle));
}

// Validates `mode` against the names valid for the configured family and
// returns the selected subset (all of them for "" or "all").
std::vector<std::string> select_modes(const std::string& mode, bool cevian,
                                      const std::vector<std::string>& cevian_modes,
                                      const std::vector<std::string>& six_modes) {
  const auto& valid = cevian ? cevian_modes : six_modes;
  const auto& other = cevian ? six_modes : cevian_modes;
  if (mode.empty() || mode == "all") return valid;
  for (const auto& m : valid) {
    if (m == mode) return {m};
  }
  for (const auto& m : other) {
    if (m == mode) {
      usage("mode", "'" + mode + "' needs " + (cevian ? "six-point ratios" : "d, e, f ratios"));
    }
  }
  usage("mode", "unknown mode '" + mode + "'");
}

std::string mode_label(const std::string& mode) { return mode.empty() ? "all" : mode; }

void finish(Report& report, bool oracle_ran) {
  if (oracle_ran) report.add("agreement", !report.has_disagreement());
}

}  // namespace

Report run_check(const ConfigDoc& config) {
  const RatioFamily& ratios = require_ratios(config);
  bool cevian = std::holds_alternative<CevianRatios>(ratios);
  auto modes = select_modes(config.mode, cevian, {"ceva", "menelaus"},
                            {"concurrence", "collinearity"});

  Report report;
  echo_inputs(report, "check", config, mode_label(config.mode));
  for (const auto& mode : modes) {
    bool holds = false;
    std::optional<bool> oracle;
    const char* yes = "concurrent";
    const char* no = "not-concurrent";
    if (mode == "ceva" || mode == "menelaus") {
      const auto& r = std::get<CevianRatios>(ratios);
      bool ceva = mode == "ceva";
      holds = ceva ? ceva_holds(r) : menelaus_holds(r);
      if (config.triangle) {
        oracle = ceva ? oracle_ceva(*config.triangle, r) : oracle_menelaus(*config.triangle, r);
      }
      if (!ceva) {
        yes = "collinear";
        no = "not-collinear";
      }
    } else {
      const auto& r = std::get<SixRatios>(ratios);
      bool conc = mode == "concurrence";
      holds = conc ? sixpoint_concurrence_holds(r) : sixpoint_collinearity_holds(r);
      if (config.triangle) {
        oracle = conc ? oracle_sixpoint_concurrence(*config.triangle, r)
                      : oracle_sixpoint_collinearity(*config.triangle, r);
      }
      if (!conc) {
        yes = "collinear";
        no = "not-collinear";
      }
    }
    report.add(mode + ".holds", holds);
    if (config.triangle) {
      report.add(mode + ".oracle", oracle ? (*oracle ? yes : no) : "degenerate");
      report.add_agreement(mode + ".agreement", compare(holds, oracle));
    }
  }
  finish(report, config.triangle.has_value());
  return report;
}

Report run_area(const ConfigDoc& config) {
  const RatioFamily& ratios = require_ratios(config);
  bool cevian = std::holds_alternative<CevianRatios>(ratios);
  auto modes = select_modes(config.mode, cevian, {"cevian", "menelaus-triangle"},
                            {"sixpoint-edges", "sixpoint-vertices"});

  Report report;
  echo_inputs(report, "area", config, mode_label(config.mode));
  for (const auto& mode : modes) {
    AreaRatio formula = AreaRatio::indeterminate();
    std::optional<AreaRatio> oracle;
    const Triangle* t = config.triangle ? &*config.triangle : nullptr;
    if (cevian) {
      const auto& r = std::get<CevianRatios>(ratios);
      if (mode == "cevian") {
        formula = routh_cevian_triangle_ratio(r);
        if (t) oracle = oracle_cevian_area(*t, r);
      } else {
        formula = routh_menelaus_triangle_ratio(r);
        if (t) oracle = oracle_menelaus_area(*t, r);
      }
    } else {
      const auto& r = std::get<SixRatios>(ratios);
      if (mode == "sixpoint-edges") {
        formula = sixpoint_edge_triangle_ratio(r);
        if (t) oracle = oracle_edge_area(*t, r);
      } else {
        formula = sixpoint_vertex_triangle_ratio(r);
        if (t) oracle = oracle_vertex_area(*t, r);
      }
    }
    report.add(mode + ".value", formula.value() ? formula.to_string() : "none");
    report.add(mode + ".class", to_string(formula.kind()));
    if (t) {
      report.add(mode + ".oracle", oracle ? oracle->to_string() : "degenerate");
      report.add_agreement(mode + ".agreement", compare(formula, oracle));
    }
  }
  finish(report, config.triangle.has_value());
  return report;
}

namespace {

// Renders one construction step, reporting degeneracy in place of a value.
template <typename F>
std::string item(F&& f) {
  try {
    return f().to_string();
  } catch (const Error& e) {
    return std::string("degenerate (") + e.what() + ")";
  }
}

}  // namespace

Report run_construct(const ConfigDoc& config) {
  const RatioFamily& ratios = require_ratios(config);
  ConfigDoc effective = config;
  if (!effective.triangle) effective.triangle = Triangle::canonical();
  const Triangle& t = *effective.triangle;

  Report report;
  echo_inputs(report, "construct", effective, mode_label(config.mode));
  const ProjPoint &a = t.a(), &b = t.b(), &c = t.c();

  if (const auto* r = std::get_if<CevianRatios>(&ratios)) {
    CevianPoints p = construct_cevian_points(t, *r);
    report.add("point.D", p.d.to_string());
    report.add("point.E", p.e.to_string());
    report.add("point.F", p.f.to_string());
    auto ad = [&] { return join(a, p.d); };
    auto be = [&] { return join(b, p.e); };
    auto cf = [&] { return join(c, p.f); };
    report.add("line.AD", item(ad));
    report.add("line.BE", item(be));
    report.add("line.CF", item(cf));
    report.add("cevian_triangle.V_A", item([&] { return meet(cf(), ad()); }));
    report.add("cevian_triangle.V_B", item([&] { return meet(ad(), be()); }));
    report.add("cevian_triangle.V_C", item([&] { return meet(be(), cf()); }));
    return report;
  }

  const auto& r = std::get<SixRatios>(ratios);
  SixPoints p = construct_six_points(t, r);
  report.add("point.A+", p.a_plus.to_string());
  report.add("point.A-", p.a_minus.to_string());
  report.add("point.B+", p.b_plus.to_string());
  report.add("point.B-", p.b_minus.to_string());
  report.add("point.C+", p.c_plus.to_string());
  report.add("point.C-", p.c_minus.to_string());

  auto l1 = [&] { return join(p.b_plus, p.c_minus); };
  auto l2 = [&] { return join(p.c_plus, p.a_minus); };
  auto l3 = [&] { return join(p.a_plus, p.b_minus); };
  report.add("line.B+C-", item(l1));
  report.add("line.C+A-", item(l2));
  report.add("line.A+B-", item(l3));
  report.add("edge_triangle.V_A", item([&] { return meet(l2(), l3()); }));
  report.add("edge_triangle.V_B", item([&] { return meet(l3(), l1()); }));
  report.add("edge_triangle.V_C", item([&] { return meet(l1(), l2()); }));

  report.add("hat_point.W_A", item([&] { return meet(join(b, p.b_minus), join(c, p.c_plus)); }));
  report.add("hat_point.W_B", item([&] { return meet(join(c, p.c_minus), join(a, p.a_plus)); }));
  report.add("hat_point.W_C", item([&] { return meet(join(a, p.a_minus), join(b, p.b_plus)); }));

  // Intersection and barycentric routes must give the same vertices.
  auto closed_form_check = [&](auto by_meets, auto closed_form) {
    auto v = by_meets(t, r);
    if (!v) return Agreement::degenerate;
    try {
      return *v == closed_form(t, r) ? Agreement::agree : Agreement::disagree;
    } catch (const Error&) {
      return Agreement::disagree;
    }
  };
  report.add_agreement("edge_triangle.closed_form",
                       closed_form_check(edge_vertices_by_meets, edge_triangle_vertices_closed_form));
  report.add_agreement("hat_point.closed_form",
                       closed_form_check(hat_points_by_meets, vertex_triangle_vertices_closed_form));
  return report;
}

Report run_embed(const ConfigDoc& config) {
  const RatioFamily& ratios = require_ratios(config);
  const auto* r = std::get_if<CevianRatios>(&ratios);
  if (!r) usage("ratios", "embed takes d, e, f");
  SixRatios six = classical_embedding(*r);

  Report report;
  echo_inputs(report, "embed", config, mode_label(config.mode));
  for (SixRatioId id : kSixRatioIds) {
    report.add("embedded." + std::string(key(id)), get(six, id).to_string());
  }

  auto same = [](const auto& x, const auto& y) {
    return x == y ? Agreement::agree : Agreement::disagree;
  };
  bool ceva = ceva_holds(*r), conc = sixpoint_concurrence_holds(six);
  report.add("ceva.holds", ceva);
  report.add("sixpoint_concurrence.holds", conc);
  report.add_agreement("reduction.concurrence", same(ceva, conc));

  bool men = menelaus_holds(*r), coll = sixpoint_collinearity_holds(six);
  report.add("menelaus.holds", men);
  report.add("sixpoint_collinearity.holds", coll);
  report.add_agreement("reduction.collinearity", same(men, coll));

  AreaRatio cev = routh_cevian_triangle_ratio(*r), edges = sixpoint_edge_triangle_ratio(six);
  report.add("cevian.value", cev.to_string());
  report.add("sixpoint_edges.value", edges.to_string());
  report.add_agreement("reduction.edges", same(cev, edges));

  AreaRatio mt = routh_menelaus_triangle_ratio(*r), verts = sixpoint_vertex_triangle_ratio(six);
  report.add("menelaus_triangle.value", mt.to_string());
  report.add("sixpoint_vertices.value", verts.to_string());
  report.add_agreement("reduction.vertices", same(mt, verts));

  finish(report, true);
  return report;
}

}  // namespace sixpoint::harness
