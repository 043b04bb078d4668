#include <gtest/gtest.h>

#include <map>

#include "sixpoint/error.hpp"
#include "sixpoint/harness/commands.hpp"
#include "sixpoint/harness/config.hpp"
#include "sixpoint/harness/report.hpp"
#include "sixpoint/harness/sampler.hpp"
#include "test_support.hpp"

namespace sixpoint::harness {
namespace {

using testing::cevian;
using testing::P;
using testing::six_all;

std::string lookup(const Report& r, std::string_view key) {
  for (const auto& [k, v] : r.entries())
    if (k == key) return v;
  ADD_FAILURE() << "missing key " << key;
  return {};
}

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::usage;
}

ConfigDoc config(std::string_view ratios, std::string mode, bool canonical = false) {
  ConfigDoc c;
  c.ratios = parse_ratio_list(ratios);
  c.mode = std::move(mode);
  if (canonical) c.triangle = Triangle::canonical();
  return c;
}

TEST(RatioList, Forms) {
  EXPECT_EQ(std::get<CevianRatios>(parse_ratio_list("1,2,1/3")), cevian("1", "2", "1/3"));
  EXPECT_EQ(std::get<CevianRatios>(parse_ratio_list("f=1/3, d=1, e=2")), cevian("1", "2", "1/3"));
  EXPECT_EQ(std::get<SixRatios>(parse_ratio_list("a+=1/2,a-=1/2,b+=1/2,b-=1/2,c+=1/2,c-=1/2")),
            six_all("1/2"));
}

TEST(RatioList, Errors) {
  EXPECT_EQ(error_code([] { parse_ratio_list("0/0,1,1"); }), Errc::invalid_ratio);
  EXPECT_EQ(error_code([] { parse_ratio_list("1,2"); }), Errc::usage);
  EXPECT_EQ(error_code([] { parse_ratio_list("d=1,e=2,a+=1"); }), Errc::usage);
  EXPECT_EQ(error_code([] { parse_ratio_list("d=1,d=2,e=1"); }), Errc::usage);
  EXPECT_EQ(error_code([] { parse_ratio_list("d=x,e=1,f=1"); }), Errc::parse);
  try {
    parse_ratio_list("d=1,e=1,f=1/");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("ratios.f"), std::string::npos) << e.what();
  }
}

TEST(Triangle, ParseAndFormat) {
  Triangle t = parse_triangle("0,0; 1,0; 0,1");
  EXPECT_EQ(t, Triangle::canonical());
  EXPECT_EQ(format_triangle(parse_triangle("1/2,-3; 4,5;0,7/3")), "1/2,-3; 4,5; 0,7/3");
  EXPECT_EQ(error_code([] { parse_triangle("0,0; 1,1; 2,2"); }), Errc::usage);
  EXPECT_EQ(error_code([] { parse_triangle("0,0; 1,0"); }), Errc::usage);
}

TEST(Config, File) {
  ConfigDoc c = parse_config(
      "# trisection points\n"
      "mode = concurrence\n"
      "triangle = 0,0; 1,0; 0,1\n"
      "a+ = 1/2\na- = 1/2\nb+ = 1/2\nb- = 1/2\nc+ = 1/2\nc- = 1/2\n");
  EXPECT_EQ(c.mode, "concurrence");
  EXPECT_EQ(c.triangle, Triangle::canonical());
  EXPECT_EQ(std::get<SixRatios>(*c.ratios), six_all("1/2"));

  EXPECT_EQ(error_code([] { parse_config("d = 1\na+ = 1\n"); }), Errc::usage);
  EXPECT_EQ(error_code([] { parse_config("colour = red\n"); }), Errc::usage);
  EXPECT_EQ(error_code([] { parse_config("d 1\n"); }), Errc::usage);
}

TEST(Format, Parse) {
  EXPECT_EQ(parse_format("text"), ReportFormat::text);
  EXPECT_EQ(parse_format("structured"), ReportFormat::structured);
  EXPECT_EQ(error_code([] { parse_format("json"); }), Errc::usage);
}

TEST(Report, RenderIsStableAndTracksDisagreement) {
  Report r;
  r.add("a", "1");
  r.add("long.key", true);
  EXPECT_EQ(r.render(ReportFormat::structured), "a = 1\nlong.key = true\n");
  EXPECT_FALSE(r.has_disagreement());
  r.add_agreement("x", Agreement::degenerate);
  EXPECT_FALSE(r.has_disagreement());
  r.add_agreement("y", Agreement::disagree);
  EXPECT_TRUE(r.has_disagreement());
  EXPECT_EQ(lookup(r, "x"), "degenerate");
}

TEST(RunCheck, Examples) {
  Report ceva = run_check(config("1,1,1", "ceva"));
  EXPECT_EQ(lookup(ceva, "ceva.holds"), "true");

  Report conc = run_check(config("a+=1/2,a-=1/2,b+=1/2,b-=1/2,c+=1/2,c-=1/2", "concurrence", true));
  EXPECT_EQ(lookup(conc, "concurrence.holds"), "true");
  EXPECT_EQ(lookup(conc, "concurrence.oracle"), "concurrent");
  EXPECT_EQ(lookup(conc, "agreement"), "true");
  EXPECT_FALSE(conc.has_disagreement());

  EXPECT_EQ(error_code([] { run_check(config("1,1,1", "concurrence")); }), Errc::usage);
  EXPECT_EQ(error_code([] { run_check(ConfigDoc{}); }), Errc::usage);
}

TEST(RunArea, Examples) {
  EXPECT_EQ(lookup(run_area(config("2,2,2", "cevian")), "cevian.value"), "1/7");
  EXPECT_EQ(lookup(run_area(config("1,1,1", "menelaus-triangle")), "menelaus-triangle.value"), "1/4");
  Report edges = run_area(config("a+=1/2,a-=1/2,b+=1/2,b-=1/2,c+=1/2,c-=1/2", "sixpoint-edges", true));
  EXPECT_EQ(lookup(edges, "sixpoint-edges.value"), "0");
  EXPECT_EQ(lookup(edges, "sixpoint-edges.class"), "finite");
  EXPECT_EQ(lookup(edges, "sixpoint-edges.agreement"), "true");
  Report open = run_area(config("1,-2,1", "cevian", true));
  EXPECT_EQ(lookup(open, "cevian.value"), "unbounded");
  EXPECT_EQ(lookup(open, "cevian.oracle"), "unbounded");
}

TEST(RunConstruct, Examples) {
  Report mid = run_construct(config("a+=1,a-=1,b+=1,b-=1,c+=1,c-=1", "all"));
  EXPECT_EQ(lookup(mid, "point.A+"), "(1/2, 1/2)");
  EXPECT_EQ(lookup(mid, "point.C-"), "(1/2, 0)");
  EXPECT_EQ(lookup(mid, "hat_point.W_A"), "(1/3, 1/3)");
  EXPECT_EQ(lookup(mid, "hat_point.W_C"), "(1/3, 1/3)");

  Report inf = run_construct(config("a+=-1,a-=1,b+=1,b-=1,c+=1,c-=1", "all"));
  EXPECT_EQ(lookup(inf, "point.A+"), "(1 : -1 : 0)");
  EXPECT_EQ(lookup(inf, "edge_triangle.V_B").rfind("degenerate", 0), 0u);

  Report thirds = run_construct(config("a+=1/2,a-=1/2,b+=1/2,b-=1/2,c+=1/2,c-=1/2", "all"));
  EXPECT_EQ(lookup(thirds, "point.A+"), "(2/3, 1/3)");
  EXPECT_EQ(lookup(thirds, "edge_triangle.V_A"), "(1/3, 1/3)");
  EXPECT_EQ(lookup(thirds, "hat_point.W_A"), "(1/4, 1/4)");
  EXPECT_EQ(lookup(thirds, "hat_point.W_B"), "(1/2, 1/4)");
  EXPECT_EQ(lookup(thirds, "hat_point.W_C"), "(1/4, 1/2)");
}

TEST(RunEmbed, Example) {
  Report r = run_embed(config("2,2,2", "all"));
  EXPECT_EQ(lookup(r, "embedded.a-"), "0");
  EXPECT_EQ(lookup(r, "sixpoint_edges.value"), "1/7");
  EXPECT_EQ(lookup(r, "reduction.edges"), "true");
  EXPECT_EQ(lookup(r, "reduction.vertices"), "true");
  EXPECT_EQ(error_code([] { run_embed(config("a+=1,a-=1,b+=1,b-=1,c+=1,c-=1", "all")); }), Errc::usage);
}

TEST(Sampler, Deterministic) {
  Sampler a(99, 5), b(99, 5), c(99, 6);
  EXPECT_EQ(a.six_ratios(10), b.six_ratios(10));
  EXPECT_EQ(a.triangle(10), b.triangle(10));
  SixRatios x = Sampler(99, 5).six_ratios(10);
  EXPECT_NE(c.six_ratios(10), x);
  for (int i = 0; i < 1000; ++i) {
    Rational q = a.rational(4);
    EXPECT_LE(abs(q.num()), 4);
    EXPECT_LE(q.den(), 4);
    EXPECT_FALSE(a.ratio(4, RatioDraw::finite).is_infinite());
  }
}

TEST(Fuzz, SeedSevenAgrees) {
  Report r = run_fuzz({.trials = 1000, .seed = 7});
  EXPECT_FALSE(r.has_disagreement());
  EXPECT_EQ(lookup(r, "disagreements"), "0");
  EXPECT_EQ(lookup(r, "agreement"), "true");
}

TEST(Fuzz, MultiInfiniteDrawIsCountedNotFailed) {
  Report r = run_fuzz({.trials = 1, .seed = 251});
  EXPECT_EQ(lookup(r, "draws.multi_infinite"), "1");
  EXPECT_FALSE(r.has_disagreement());
}

TEST(Fuzz, ReportIndependentOfThreads) {
  std::string one = run_fuzz({.trials = 200, .seed = 3}).render(ReportFormat::structured);
  EXPECT_EQ(run_fuzz({.trials = 200, .seed = 3}).render(ReportFormat::structured), one);
  EXPECT_EQ(run_fuzz({.trials = 200, .seed = 3, .jobs = 4}).render(ReportFormat::structured), one);
}

TEST(Fuzz, TrialsReplayIndividually) {
  std::map<std::string, long> batch, summed;
  auto counts = [](const Report& r, std::map<std::string, long>& into) {
    for (const auto& [k, v] : r.entries())
      if (k.rfind("check.", 0) == 0) into[k] += std::stol(v);
  };
  counts(run_fuzz({.trials = 20, .seed = 11, .first_trial = 5}), batch);
  for (std::uint64_t i = 5; i < 25; ++i) counts(run_fuzz({.trials = 1, .seed = 11, .first_trial = i}), summed);
  EXPECT_EQ(batch, summed);
}

TEST(Fuzz, ScopeLimitsChecks) {
  Report r = run_fuzz({.trials = 10, .seed = 1, .scope = "classical"});
  EXPECT_EQ(lookup(r, "check.ceva.checked"), "10");
  for (const auto& [k, v] : r.entries()) EXPECT_EQ(k.find("routh"), std::string::npos);
  EXPECT_EQ(error_code([] { run_fuzz({.trials = 1, .scope = "bogus"}); }), Errc::usage);
  EXPECT_EQ(error_code([] { run_fuzz({.trials = 0}); }), Errc::usage);
}

}  // namespace
}  // namespace sixpoint::harness
