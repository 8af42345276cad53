#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qbailey/wp_pairs.hpp"

namespace qbailey {

/// One specialization of an identity's free parameters: exact monomial
/// values (rational constants, roots of unity, or q-powers fixed by the
/// identity itself), plus the chosen WP-pair for cases with a pair slot.
struct Specialization {
  std::map<std::string, Monomial> values;
  std::string pair;  // pair id, empty when the case has no pair slot
  std::uint64_t seed = 0;

  const Monomial& at(const std::string& name) const;
  PairParams pair_params(const Monomial& a, const Monomial& k,
                         const Monomial& base = Monomial::q(1)) const;
};

/// One verifiable identity: a list of expression builders that must all
/// agree as truncated series.  Builders receive the target order N (in the
/// working variable) and a working width W >= N for internal precision.
struct IdentityCase {
  using Expr = std::function<LaurentSeries(const Specialization&, Exp N, Exp W)>;

  std::string id;
  std::string eqTag;  // short formula tag used by --list and reports
  std::vector<std::string> freeParams;
  std::vector<std::string> pairSlots;  // admissible pair ids, empty = no slot
  /// 1 normally; 2 when the identity is verified in t with q = t^2 (the
  /// half-integer-exponent cases).
  int substExp = 1;
  Exp extraPad = 0;
  /// First violated admissibility predicate, or nullopt.
  std::function<std::optional<std::string>(const Specialization&)> admissible;
  std::vector<Expr> exprs;
};

/// All identity cases shipped with the engine, in report order.
const std::vector<IdentityCase>& bank();
const IdentityCase& case_by_id(const std::string& id);

}  // namespace qbailey
