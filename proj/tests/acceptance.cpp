// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
#include <iostream>

#include "orbitduality/suites.hpp"

using namespace orbitduality;

int main(int argc, char** argv) {
  SuiteOptions o;
  if (argc > 1) o.max_rank = std::stoi(argv[1]);
  bool ok = true;
  for (int id = 1; id <= 8; ++id) {
    const SuiteResult r = run_suite(id, o);
    std::cout << "criterion " << id << ": " << (r.pass() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checks
              << " checks, " << r.seconds << " s)" << std::endl;
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    ok = ok && r.pass();
  }
  return ok ? 0 : 1;
}
