// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--reduced] [--verbose] [--criterion K]...
#include <CLI11.hpp>
#include <iostream>
#include <vector>

#include "ncpart/verify/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ncpart acceptance suite"};
  bool reduced = false;
  bool verbose = false;
  std::vector<int> ids;
  app.add_flag("--reduced", reduced, "run at reduced scale");
  app.add_flag("-v,--verbose", verbose, "print every check");
  app.add_option("-c,--criterion", ids, "criteria to run (default: all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  using ncpart::verify::Scale;
  const Scale scale = reduced ? Scale::Reduced : Scale::Full;
  if (ids.empty()) {
    return ncpart::verify::run_all(std::cout, scale, verbose) ? 0 : 1;
  }
  bool ok = true;
  for (int id : ids) {
    const auto r = ncpart::verify::run_criterion(id, scale);
    ncpart::verify::print_result(std::cout, r, verbose);
    ok = ok && r.pass();
  }
  return ok ? 0 : 1;
}
