#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "senslab/families.hpp"
#include "senslab/measures.hpp"
#include "senslab/rng.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

struct NamedTable {
  std::string name;
  TruthTable table;
};

/// Fixed mix of structured and seeded functions on n variables, used by the property batteries.
inline std::vector<NamedTable> standard_corpus(unsigned n, std::uint64_t seed) {
  namespace fam = families;
  std::vector<NamedTable> out;
  out.push_back({"constant-0", fam::constant(n, false)});
  out.push_back({"constant-1", fam::constant(n, true)});
  out.push_back({"dictator-1", fam::dictator(n, 1)});
  out.push_back({"dictator-n", fam::dictator(n, n)});
  out.push_back({"or", fam::or_fn(n)});
  out.push_back({"and", fam::and_fn(n)});
  out.push_back({"parity", fam::parity(n)});
  if (n % 2 == 1) out.push_back({"majority", fam::majority(n)});
  for (unsigned s = 2; s <= 3; ++s)
    if (n % s == 0 && n > s) out.push_back({"tribes-" + std::to_string(s), fam::tribes(s, n)});
  for (unsigned s = 2; s <= 3 && s <= n; ++s) out.push_back({"addressing-" + std::to_string(s), fam::addressing(s, n)});
  for (unsigned depth = 1; depth <= 3 && depth <= n; ++depth) {
    for (unsigned j = 0; j < 2; ++j) {
      const auto sd = derive_seed(seed, "corpus-dt-" + std::to_string(depth) + "-" + std::to_string(j));
      out.push_back({"random-dt-" + std::to_string(depth) + "-" + std::to_string(j), fam::random_dt(depth, n, sd)});
    }
  }
  if (n >= 3) out.push_back({"junta-3", fam::junta_lift(fam::random_table(3, derive_seed(seed, "corpus-junta")), n)});
  out.push_back({"random", fam::random_table(n, derive_seed(seed, "corpus-random"))});
  return out;
}

/// Seeded functions on n variables with s(f) <= max_s, alternating structured and random-tree members.
inline std::vector<NamedTable> low_sensitivity_corpus(unsigned n, unsigned max_s, std::size_t count, std::uint64_t seed) {
  namespace fam = families;
  std::vector<NamedTable> pool;
  pool.push_back({"dictator-1", fam::dictator(n, 1)});
  pool.push_back({"dictator-n", fam::dictator(n, n)});
  pool.push_back({"not-dictator-2", ~fam::dictator(n, std::min(2u, n))});
  if (n >= 3) pool.push_back({"addressing-2", fam::addressing(2, n)});
  if (n >= 2) pool.push_back({"and-2", fam::junta_lift(fam::and_fn(2), n)});
  for (unsigned j = 0; pool.size() < 4 * count + 8; ++j) {
    const unsigned depth = 1 + j % std::max(1u, max_s);
    if (depth > n) break;
    const auto sd = derive_seed(seed, "low-s-dt-" + std::to_string(j));
    pool.push_back({"random-dt-" + std::to_string(depth) + "-" + std::to_string(j), fam::random_dt(depth, n, sd)});
  }
  std::vector<NamedTable> out;
  for (auto& f : pool) {
    if (out.size() == count) break;
    if (sensitivity(f.table).s <= max_s) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace senslab
