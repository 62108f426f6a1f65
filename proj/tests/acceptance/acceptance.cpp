// Acceptance suite: prints one PASS/FAIL line per criterion (1..7), with the
// individual checks underneath any failing criterion. Exit status is 0 only
// if every selected criterion passes.
//
//   acceptance                 run all criteria
//   acceptance --criterion 4   run one criterion
//   acceptance --verbose       print every individual check

#include "cogrowth/repro.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  CLI::App app{"Acceptance criteria 1-7"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "Run a single criterion")
      ->check(CLI::Range(cogrowth::acceptance::kFirstCriterion,
                         cogrowth::acceptance::kLastCriterion));
  app.add_flag("--verbose", verbose, "Print every individual check");
  CLI11_PARSE(app, argc, argv);

  auto report = [&](const cogrowth::CriterionResult &r) {
    std::cout << cogrowth::summary_line(r) << std::endl;
    if (verbose || !r.passed)
      for (const auto &d : r.details)
        std::cout << "    " << d << '\n';
  };

  bool all = true;
  if (only != 0) {
    const auto r = cogrowth::run_criterion(only);
    report(r);
    all = r.passed;
  } else {
    for (const auto &r : cogrowth::run_acceptance(report))
      all = all && r.passed;
  }
  return all ? 0 : 1;
}
