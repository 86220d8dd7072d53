// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "senslab/senslab.hpp"

using namespace senslab;
using verify::CheckResult;

namespace {

constexpr std::uint64_t kSeed = 20240601;

CheckResult combine(const std::string& name, const std::vector<CheckResult>& parts) {
  CheckResult out{name, true, {}, {}};
  for (const auto& p : parts) {
    if (!p.passed) out.fail(p.name + ": " + p.failure);
    for (const auto& [k, v] : p.metrics) out.metric(p.name + "." + k, v);
  }
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<CheckResult()> run;
};

std::vector<TruthTable> corpus_tables(unsigned lo, unsigned hi) {
  std::vector<TruthTable> out;
  for (unsigned n = lo; n <= hi; ++n)
    for (auto& [name, f] : standard_corpus(n, kSeed)) out.push_back(std::move(f));
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "majority extension from radius 2s(f), all n=4 functions and centers",
       [] { return verify::check_ball_recovery(4, 0, kSeed); }},
      {2, "brute-force r^Maj = min(2s, n): exhaustive n<=4, 1000 tables at n=5,6",
       [] {
         std::vector<CheckResult> parts;
         for (unsigned n = 1; n <= 4; ++n) parts.push_back(verify::check_r_maj(n, 0, kSeed));
         for (unsigned n : {5u, 6u}) parts.push_back(verify::check_r_maj(n, 1000, derive_seed(kSeed, n)));
         return combine("r-maj", parts);
       }},
      {3, "brute-force r^Par = deg, all centers and origin, exhaustive n<=4",
       [] {
         std::vector<CheckResult> parts;
         for (unsigned n = 1; n <= 4; ++n) parts.push_back(verify::check_r_par(n, 0, kSeed));
         return combine("r-par", parts);
       }},
      {4, "Bottom-Up, Top-Down and truth table agree, 50 trees per s in {1,2,3}, n in {8,12}",
       [] {
         std::vector<CheckResult> parts;
         for (unsigned n : {8u, 12u})
           for (unsigned s : {1u, 2u, 3u}) parts.push_back(verify::check_evaluators(n, s, 50, derive_seed(kSeed, n * 10 + s)).agreement);
         return combine("evaluators", parts);
       }},
      {5, "Top-Down visits per weight within C(d-k+2s, d-k)",
       [] {
         std::vector<CheckResult> parts;
         for (unsigned n : {8u, 12u})
           for (unsigned s : {1u, 2u, 3u}) parts.push_back(verify::check_evaluators(n, s, 50, derive_seed(kSeed, n * 10 + s)).revlex);
         return combine("revlex", parts);
       }},
      {6, "parallel_eval per-point error <= 1/20 + 3 sigma, 2000 trials, 10 functions at n=16, s<=2",
       [] { return verify::check_parallel(16, 2, 10, 2000, 1, kSeed); }},
      {7, "pointwise NS_delta < 2 delta s on the corpus, n<=10",
       [] {
         std::vector<CheckResult> parts;
         for (unsigned n = 2; n <= 10; ++n) parts.push_back(verify::check_noise_stability(n, kSeed));
         return combine("noise-stability", parts);
       }},
      {8, "downward mismatch <= st/(d-t) on the corpus, n<=10",
       [] {
         std::vector<CheckResult> parts;
         for (unsigned n = 2; n <= 10; ++n) parts.push_back(verify::check_downward(n, kSeed));
         return combine("downward", parts);
       }},
      {9, "small-set expansion, 200 sets at n=12, delta=1/20, theta in {2/5, 1/10}",
       [] { return verify::check_small_set_expansion(12, 200, Rational(1, 20), {Rational(2, 5), Rational(1, 10)}, kSeed); }},
      {10, "global correction recovers f with containment, 20 trees at n=12, s in {1,2}",
       [] {
         const auto g = verify::check_global_correction(12, {1, 2}, 10, kSeed);
         return combine("global", {g.recovery, g.containment});
       }},
      {11, "local correction: clean failure, adversarial recovery, c^k queries (n=12, k=5, eps=1/20)",
       [] {
         const auto l = verify::check_local_correction(12, 5, Rational(1, 20), 1000, kSeed);
         return combine("local", {l.clean, l.adversarial, l.queries});
       }},
      {12, "census counts within the lower and upper bounds, n<=4",
       [] { return verify::check_counting(4); }},
      {13, "s <= 4 deg^2 and |relevant| <= s 4^s on the n=4 census and corpus",
       [] {
         std::vector<TruthTable> tables;
         tables.reserve(65536);
         for (std::uint64_t bits = 0; bits < 65536; ++bits) tables.emplace_back(4, bits);
         auto corpus = corpus_tables(2, 12);
         tables.insert(tables.end(), corpus.begin(), corpus.end());
         return verify::check_cross_measures(tables);
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (r.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.1fs]", secs);
    line << buf;
    for (const auto& [k, v] : r.metrics) line << ' ' << k << '=' << v;
    if (!r.passed) line << "\n    first failure: " << r.failure;
    std::cout << line.str() << std::endl;
    failures += !r.passed;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
