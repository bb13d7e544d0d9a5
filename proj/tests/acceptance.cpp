// Acceptance criteria 1-8: one PASS/FAIL line per criterion, default
// configuration (seed 42, 100 samples). Exit status 1 if any criterion fails.

#include <iostream>
#include <string>
#include <vector>

#include "relloc/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "algebra: Poincare brackets of the ten generators", {"algebra"}},
      {2, "equivariance: momenta of Phi_g vs co-adjoint transform", {"equivariance"}},
      {3, "nw-theorem: canonical, commuting, rotation and T-invariant X", {"nw-theorem"}},
      {4, "centre-of-spin: NW residual zero, CE/CI generically not", {"centre-of-spin"}},
      {5, "moller: SSC positions fill the disc of radius S/(mc)", {"moller"}},
      {6, "covariance: CE/CI/NW covariant, frozen f not", {"covariance"}},
      {7, "hodge/exp: Hodge relation, exponentials, boost", {"hodge", "exponentials"}},
      {8, "bracket-engine: antisymmetry, Leibniz, Jacobi, derivatives", {"bracket-engine"}},
  };
  const relloc::RunConfig cfg;
  bool all = true;
  for (const auto& c : criteria) {
    bool ok = true;
    std::vector<std::string> failures;
    for (const auto& s : c.suites) {
      const relloc::Report r = relloc::run_suite(s, cfg);
      for (const auto& check : r.checks)
        if (!check.passed()) {
          ok = false;
          failures.push_back(s + ": " + check.name + " = " + std::to_string(check.value));
        }
    }
    all = all && ok;
    std::cout << "criterion " << c.number << " " << (ok ? "PASS" : "FAIL") << "  " << c.title << "\n";
    for (const auto& f : failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
