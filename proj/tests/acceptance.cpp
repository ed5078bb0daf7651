// Acceptance harness: runs the named construction checks grouped into the
// twelve acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 exactly when every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "segre/verify.hpp"

namespace {

struct CheckRef {
  const char* name;
  int m;
};

struct Criterion {
  int number;
  const char* description;
  double budget_seconds;  // 0 = no runtime bound
  std::vector<CheckRef> checks;
};

const std::vector<Criterion> kCriteria = {
    {1,
     "m=3 cardinalities: 255 points, 27 Segre points, 135 quadric points, 85 spread lines",
     1.0,
     {{"cardinalities", 3}}},
    {2,
     "m=3 point orbits: sizes 12 54 108 54 27, Segre orbit last, quadric = middle union",
     5.0,
     {{"orbit-census-points", 3}}},
    {3,
     "m=3 spread-line orbits: sizes 4 18 36 27 and orbit labels match class labels",
     5.0,
     {{"spread-orbit-census", 3}, {"classify-vs-bfs", 3}}},
    {4,
     "m=3 spread partition: the 85 lines tile all 255 real points",
     0.0,
     {{"spread-partition", 3}}},
    {5,
     "line dichotomy: even classes are quadric generators, odd classes real-free bisecants",
     0.0,
     {{"dichotomy", 3}}},
    {6,
     "Hermitian substructure: 45 points split 18+27, 27 lines, 5 per line, 3 per point",
     0.0,
     {{"hermitian-substructure", 3}}},
    {7,
     "m=2 example: orbits 6 and 9, Segre equals quadric, 9 tangents as real joins",
     0.0,
     {{"orbit-census-points", 2}, {"tangent-congruence", 2}}},
    {8,
     "polarization identity and vanishing of Q on decomposables, m = 2, 3, 4",
     0.0,
     {{"polarization", 2},
      {"polarization", 3},
      {"polarization", 4},
      {"q-on-decomposables", 2},
      {"q-on-decomposables", 3},
      {"q-on-decomposables", 4}}},
    {9,
     "generator invariance of Q, the symplectic form, the basis and the index action",
     0.0,
     {{"generator-invariance", 3}, {"generator-invariance", 4}}},
    {10,
     "invariant frame: spans, base-line orbit and tangent sections up to m=4, spot m=5",
     60.0,
     {{"invariant-frame", 2},
      {"invariant-frame", 3},
      {"invariant-frame", 4},
      {"tangent-spot", 5},
      {"point-orbit-bfs", 4}}},
    {11,
     "distinguished tangent closed form agrees with the avoidance oracle, m = 2, 3, 4",
     0.0,
     {{"tangent-modes", 2}, {"tangent-modes", 3}, {"tangent-modes", 4}}},
    {12,
     "Hermitian basis Gram matrix is the identity, m = 1, 2, 3, 4",
     0.0,
     {{"hermitian-self-polar", 1},
      {"hermitian-self-polar", 2},
      {"hermitian-self-polar", 3},
      {"hermitian-self-polar", 4}}},
};

}  // namespace

int main() {
  int passed = 0;
  for (const Criterion& criterion : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<std::string> failures;
    for (const CheckRef& ref : criterion.checks) {
      segre::CheckResult result;
      try {
        result = segre::run_check(ref.name, ref.m);
      } catch (const std::exception& e) {
        result = {ref.name, ref.m, false, e.what()};
      }
      if (!result.pass) {
        ok = false;
        failures.push_back(std::string(ref.name) + " (m=" + std::to_string(ref.m) +
                           "): " + result.detail);
      }
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (criterion.budget_seconds > 0.0 && elapsed.count() >= criterion.budget_seconds) {
      ok = false;
      failures.push_back("runtime " + std::to_string(elapsed.count()) +
                         "s exceeds the " + std::to_string(criterion.budget_seconds) +
                         "s budget");
    }
    std::printf("criterion %2d: %s (%.2fs) %s\n", criterion.number,
                ok ? "PASS" : "FAIL", elapsed.count(), criterion.description);
    for (const std::string& failure : failures)
      std::printf("              - %s\n", failure.c_str());
    if (ok) ++passed;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, kCriteria.size());
  return passed == static_cast<int>(kCriteria.size()) ? 0 : 1;
}
