#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelscope/gamma.hpp"
#include "abelscope/serialize.hpp"

namespace abelscope {

struct CheckTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

/// Two members of the printed (literal) filtration level m whose product
/// leaves it, while all three lie in the degree-graded level m.
struct LiteralFiltrationCounterexample {
  long m = 1;
  GammaElt a;
  GammaElt b;
  GammaElt product;
  bool literal_a = false, literal_b = false, literal_product = false;
  bool corrected_a = false, corrected_b = false, corrected_product = false;

  /// The literal reading fails closure and the corrected one holds.
  bool demonstrates() const {
    return literal_a && literal_b && !literal_product && corrected_a && corrected_b && corrected_product;
  }
};

/// a = x23(p^-m), b = x34(p^-m). Requires m >= 1.
LiteralFiltrationCounterexample literal_filtration_counterexample(const GroupParams& params, long m = 1);

struct SelftestReport {
  long p = 2;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckTally> checks;
  std::optional<Json> first_counterexample;
  LiteralFiltrationCounterexample literal;

  bool pass() const;
  std::size_t total_violations() const;
};

/// Randomized invariant suite over the group: group laws, normality of
/// M, M_Z, Upsilon, Lambda, closure of the filtration levels m = 0, 1, 2,
/// the Z^2 projection, coset canonical forms, nilpotency of Xi_m and the
/// order-p witness law. Trial t draws from its own stream seeded by
/// (seed, t), so results do not depend on evaluation order.
SelftestReport group_selftest(const GroupParams& params, std::size_t trials, std::uint64_t seed);

Json selftest_to_json(const SelftestReport& r);

}  // namespace abelscope
