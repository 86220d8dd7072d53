#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "senslab/errors.hpp"
#include "senslab/rng.hpp"
#include "senslab/truth_table.hpp"

namespace senslab::families {

inline TruthTable constant(unsigned n, bool value) { return TruthTable::constant(n, value); }

/// x_i, 1-based.
inline TruthTable dictator(unsigned n, unsigned i) {
  if (i < 1 || i > n) throw ParameterError("dictator: variable index must be in [1, n]");
  return TruthTable::from_function(n, [&](std::uint32_t x) { return (x >> (i - 1)) & 1u; });
}

inline TruthTable or_fn(unsigned n) {
  return TruthTable::from_function(n, [](std::uint32_t x) { return x != 0; });
}

inline TruthTable and_fn(unsigned n) {
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return TruthTable::from_function(n, [&](std::uint32_t x) { return x == all; });
}

inline TruthTable parity(unsigned n) {
  return TruthTable::from_function(n, [](std::uint32_t x) { return std::popcount(x) & 1; });
}

inline TruthTable majority(unsigned n) {
  if (n % 2 == 0) throw ParameterError("majority: n must be odd");
  return TruthTable::from_function(n, [&](std::uint32_t x) { return 2u * std::popcount(x) > n; });
}

/// OR over n/s disjoint blocks of ANDs of s consecutive variables.
inline TruthTable tribes(unsigned s, unsigned n) {
  if (s == 0 || n % s != 0) throw ParameterError("tribes: s must divide n");
  const std::uint32_t block = static_cast<std::uint32_t>((std::uint64_t{1} << s) - 1);
  return TruthTable::from_function(n, [&](std::uint32_t x) {
    for (unsigned j = 0; j < n / s; ++j)
      if (((x >> (j * s)) & block) == block) return true;
    return false;
  });
}

/// Decision tree reading s-1 address variables (x_1..x_{s-1}) and then one of the n-s+1
/// output variables (x_s..x_n). Leaf a reads output variable a mod (n-s+1) unless a seed
/// is given, in which case leaf labels are uniform.
inline TruthTable addressing(unsigned s, unsigned n, std::optional<std::uint64_t> seed = std::nullopt) {
  if (s < 1 || s > n) throw ParameterError("addressing: need 1 <= s <= n");
  const unsigned address_bits = s - 1;
  const unsigned outputs = n - s + 1;
  std::vector<unsigned> label(std::size_t{1} << address_bits);
  SplitMix64 rng(derive_seed(seed.value_or(0), "addressing"));
  for (std::size_t a = 0; a < label.size(); ++a)
    label[a] = seed ? static_cast<unsigned>(uniform_below(rng, outputs)) : static_cast<unsigned>(a % outputs);
  const std::uint32_t address_mask = (std::uint32_t{1} << address_bits) - 1;
  return TruthTable::from_function(n, [&](std::uint32_t x) {
    return (x >> (address_bits + label[x & address_mask])) & 1u;
  });
}

/// g on the first base.n() coordinates, ignoring the rest.
inline TruthTable junta_lift(const TruthTable& base, unsigned n) {
  if (n < base.n()) throw ParameterError("junta-lift: n must be at least the base dimension");
  const std::uint32_t mask = static_cast<std::uint32_t>(base.size() - 1);
  return TruthTable::from_function(n, [&](std::uint32_t x) { return base[x & mask]; });
}

/// Complete depth-`depth` decision tree: every internal node queries a uniformly chosen
/// variable not already on its path; leaves are uniform bits. s(f) <= depth.
inline TruthTable random_dt(unsigned depth, unsigned n, std::uint64_t seed) {
  if (depth > n) throw ParameterError("random-dt: depth exceeds n");
  struct Node {
    int var = -1;  // -1 marks a leaf
    bool leaf_value = false;
    std::uint32_t child[2] = {0, 0};
  };
  std::vector<Node> nodes;
  SplitMix64 rng(derive_seed(seed, "random-dt"));
  auto build = [&](auto&& self, unsigned left, std::uint32_t used) -> std::uint32_t {
    const auto id = static_cast<std::uint32_t>(nodes.size());
    nodes.emplace_back();
    if (left == 0) {
      nodes[id].leaf_value = rng() & 1u;
      return id;
    }
    const auto pick = static_cast<std::uint32_t>(uniform_below(rng, n - static_cast<unsigned>(std::popcount(used))));
    const int var = std::countr_zero(deposit_bits(std::uint32_t{1} << pick, ~used & ((std::uint32_t{1} << n) - 1u)));
    nodes[id].var = var;
    const std::uint32_t c0 = self(self, left - 1, used | (std::uint32_t{1} << var));
    const std::uint32_t c1 = self(self, left - 1, used | (std::uint32_t{1} << var));
    nodes[id].child[0] = c0;
    nodes[id].child[1] = c1;
    return id;
  };
  build(build, depth, 0);
  return TruthTable::from_function(n, [&](std::uint32_t x) {
    std::uint32_t at = 0;
    while (nodes[at].var >= 0) at = nodes[at].child[(x >> nodes[at].var) & 1u];
    return nodes[at].leaf_value;
  });
}

inline TruthTable random_table(unsigned n, std::uint64_t seed) {
  TruthTable t(n);
  SplitMix64 rng(derive_seed(seed, "random"));
  for (auto& w : t.mutable_words()) w = rng();
  t.mutable_words().back() &= t.tail_mask();
  return t;
}

enum class Kind { Constant, Dictator, Or, And, Parity, Majority, Tribes, Addressing, JuntaLift, RandomDt, Random };

inline Kind parse_kind(std::string_view name) {
  if (name == "constant") return Kind::Constant;
  if (name == "dictator") return Kind::Dictator;
  if (name == "or") return Kind::Or;
  if (name == "and") return Kind::And;
  if (name == "parity") return Kind::Parity;
  if (name == "majority") return Kind::Majority;
  if (name == "tribes") return Kind::Tribes;
  if (name == "addressing") return Kind::Addressing;
  if (name == "junta-lift") return Kind::JuntaLift;
  if (name == "random-dt") return Kind::RandomDt;
  if (name == "random") return Kind::Random;
  throw ParameterError("unknown family '" + std::string(name) + "'");
}

struct FamilySpec {
  Kind kind = Kind::Constant;
  unsigned n = 1;
  unsigned s = 0;      ///< tribes block size / addressing sensitivity
  unsigned depth = 0;  ///< random-dt
  unsigned var = 1;    ///< dictator
  bool value = false;  ///< constant
  std::optional<std::uint64_t> seed;
  std::optional<TruthTable> base;  ///< junta-lift
};

inline TruthTable gen_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::Constant: return constant(spec.n, spec.value);
    case Kind::Dictator: return dictator(spec.n, spec.var);
    case Kind::Or: return or_fn(spec.n);
    case Kind::And: return and_fn(spec.n);
    case Kind::Parity: return parity(spec.n);
    case Kind::Majority: return majority(spec.n);
    case Kind::Tribes: return tribes(spec.s, spec.n);
    case Kind::Addressing: return addressing(spec.s, spec.n, spec.seed);
    case Kind::JuntaLift:
      if (!spec.base) throw ParameterError("junta-lift needs a base table");
      return junta_lift(*spec.base, spec.n);
    case Kind::RandomDt: return random_dt(spec.depth, spec.n, spec.seed.value_or(0));
    case Kind::Random: return random_table(spec.n, spec.seed.value_or(0));
  }
  throw ParameterError("unhandled family");
}

}  // namespace senslab::families
