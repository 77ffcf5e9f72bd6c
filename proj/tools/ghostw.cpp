// ghostw: build osp(1|2n), compute centers and the finite W-algebra, and run
// the verification suites.
//
//   ghostw build --n 2
//   ghostw compute ghost --n 1
//   ghostw verify theorem-a --n 2 --max-degree 4 --out report.json

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ghostw/runner.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ghost center and finite W-algebra engine for osp(1|2n)"};
  app.require_subcommand(1);

  ghostw::RunConfig config;
  int max_degree = 0;
  std::string out_path;
  bool json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "rank n of osp(1|2n)")->default_val(1);
    sub->add_option("--max-degree", max_degree, "filtration degree bound (default max(4, 2n+1))");
    sub->add_option("--out", out_path, "write the JSON report to this path");
    sub->add_option("--seed", config.seed, "seed for sampled checks")->default_val(1);
    sub->add_flag("--json", json, "print the JSON report instead of the summary");
  };

  CLI::App* build = app.add_subcommand("build", "construct osp(1|2n) and print its basis");
  add_common(build);
  CLI::App* compute = app.add_subcommand("compute", "compute a basis or distinguished element");
  compute->add_option("target", config.target, "center | anticenter | ghost | casimir | finite-w")->required();
  add_common(compute);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("target", config.target, "grading | pbw | hc | pinczon | theorem-a | modules | all")
      ->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  config.command = sub->get_name();
  if (sub->count("--max-degree") > 0) config.max_degree = max_degree;

  ghostw::RunResult result;
  try {
    ghostw::thread_cap_from_env();
    result = ghostw::run(config);
  } catch (const ghostw::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  const std::string rendered = ghostw::render(result.report);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << rendered)) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
  }
  std::cout << (json ? rendered : result.summary);
  return result.exit_code;
}
