// Command-line front end.
#include "sdg/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact inference with coherent sets of desirable gambles"};
  sdg::CommandOptions opts;
  std::string model;
  std::size_t budget = 0;
  app.add_option("--model", model, "Model document (JSON)");
  app.add_option("--seed", opts.seed, "Seed for sampled refutation checks");
  app.add_option("--budget", budget, "Cap on cells, vertex bases and combinations");
  app.add_flag("--json", opts.json, "Machine-readable report");
  app.footer(
      "Commands: check <set> | member <set> <gamble> | lowprev <set> <gamble> |\n"
      "  condlowprev <set> <X=x,...> <gamble> | irr-check <set> <I> <O> |\n"
      "  indep-check <set> <blocks> | witness-nonmaximal <M1> <M2> |\n"
      "  strong-member <sets...> <gamble> | paper-suite | describe [set]\n"
      "Options go before the command; everything after it is passed through verbatim.");
  // Gambles such as "[1,-1]" must reach the command untouched.
  app.prefix_command();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sdg::kError;
  }
  const std::vector<std::string> command = app.remaining();
  if (command.empty()) {
    std::cerr << app.help();
    return sdg::kError;
  }
  if (!model.empty()) opts.model_path = model;
  if (budget > 0) opts.budget = budget;
  const sdg::CommandResult r = sdg::run_command(command, opts);
  (r.exit_code == sdg::kError ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
