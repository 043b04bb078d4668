// sixpoint: exact Ceva/Menelaus/Routh checks and differential fuzzing.
//
//   sixpoint check --ratios 2,3,1/6 --triangle "0,0; 1,0; 0,1"
//   sixpoint area --ratios "a+=1,a-=1,b+=1,b-=1,c+=1,c-=1" --mode sixpoint-edges
//   sixpoint fuzz --trials 1000 --seed 7
//
// Exit status: 0 success, 1 usage error, 2 formula/oracle disagreement.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sixpoint/error.hpp"
#include "sixpoint/harness/commands.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct CommonArgs {
  std::string ratios;
  std::string triangle;
  std::string mode;
  std::string config;
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool ratio_flags) {
  if (ratio_flags) {
    cmd->add_option("--ratios", args.ratios,
                    "d,e,f or named ratios, e.g. \"a+=1/2,a-=1/2,b+=1/2,b-=1/2,c+=1/2,c-=1/2\"");
    cmd->add_option("--triangle", args.triangle, "vertices as \"x,y; x,y; x,y\"");
    cmd->add_option("--config", args.config, "key = value configuration file");
  }
  cmd->add_option("--mode", args.mode, "operation selector");
  cmd->add_option("--format", args.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--output", args.output, "write the report to a file instead of stdout");
}

sixpoint::harness::ConfigDoc load_config(const CommonArgs& args) {
  using namespace sixpoint::harness;
  ConfigDoc doc;
  if (!args.config.empty()) {
    std::ifstream in(args.config);
    if (!in) throw sixpoint::Error(sixpoint::Errc::usage, "config: cannot read '" + args.config + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    doc = parse_config(buffer.str());
  }
  if (!args.ratios.empty()) doc.ratios = parse_ratio_list(args.ratios);
  if (!args.triangle.empty()) doc.triangle = parse_triangle(args.triangle);
  if (!args.mode.empty()) doc.mode = args.mode;
  return doc;
}

int emit(const sixpoint::harness::Report& report, const CommonArgs& args) {
  std::string text = report.render(sixpoint::harness::parse_format(args.format));
  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw sixpoint::Error(sixpoint::Errc::usage, "output: cannot write '" + args.output + "'");
    out << text;
  }
  return report.has_disagreement() ? kExitDisagreement : 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sixpoint::harness;

  CLI::App app{"Exact six-point Ceva-Menelaus and Routh calculator"};
  app.require_subcommand(1);

  CommonArgs check_args, area_args, construct_args, embed_args, fuzz_args;
  auto* check = app.add_subcommand("check", "concurrence/collinearity predicates");
  add_common(check, check_args, true);
  auto* area = app.add_subcommand("area", "Routh-type area ratios");
  add_common(area, area_args, true);
  auto* construct = app.add_subcommand("construct", "exact coordinates of the construction");
  add_common(construct, construct_args, true);
  auto* embed = app.add_subcommand("embed", "classical embedding of d, e, f");
  add_common(embed, embed_args, true);

  auto* fuzz = app.add_subcommand("fuzz", "differential verification against the oracle");
  add_common(fuzz, fuzz_args, false);
  FuzzOptions fuzz_options;
  fuzz->add_option("--trials", fuzz_options.trials, "number of trials")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fuzz_options.seed, "random seed");
  fuzz->add_option("--max-magnitude", fuzz_options.max_magnitude,
                   "bound on generated numerators and denominators")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--first-trial", fuzz_options.first_trial, "index of the first trial");
  fuzz->add_option("--jobs", fuzz_options.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return emit(run_check(load_config(check_args)), check_args);
    if (area->parsed()) return emit(run_area(load_config(area_args)), area_args);
    if (construct->parsed()) return emit(run_construct(load_config(construct_args)), construct_args);
    if (embed->parsed()) return emit(run_embed(load_config(embed_args)), embed_args);
    if (!fuzz_args.mode.empty()) fuzz_options.scope = fuzz_args.mode;
    return emit(run_fuzz(fuzz_options), fuzz_args);
  } catch (const sixpoint::Error& e) {
    std::cerr << "error (" << sixpoint::to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
}
