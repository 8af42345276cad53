#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbailey/pochhammer.hpp"

namespace qbailey {

/// Specialized parameters for one WP-pair instance.  a and k are exact
/// monomials (rational constants or q-powers); base is the symbol base,
/// normally q, but q^2 or -q when a pair is re-instantiated under a base
/// substitution.  rho1/rho2 are the extra parameters of Singh's pair.
struct PairParams {
  Monomial a, k;
  Monomial base = Monomial::q(1);
  std::optional<Monomial> rho1, rho2;
};

/// Incremental evaluator for one (alpha_n, beta_n) instance.  Queries must
/// use nondecreasing indices; alpha(0) = beta(0) = 1 by convention.
class PairEval {
 public:
  virtual ~PairEval() = default;
  virtual LaurentSeries alpha(long n) = 0;
  virtual LaurentSeries beta(long n) = 0;
  /// Exact valuation lower bounds (kExactOrder when the value is zero).
  virtual Exp alpha_floor(long n) const = 0;
  virtual Exp beta_floor(long n) const = 0;
};

struct WpPair {
  std::string id;
  std::string description;
  /// First violated admissibility constraint, or nullopt.  maxIndex bounds
  /// the symbol lengths that will be requested.
  std::optional<std::string> (*constraints)(const PairParams&, long maxIndex);
  std::unique_ptr<PairEval> (*make)(const PairParams&, Exp width);
};

/// The five pairs printed in the paper plus the (a,k)=(1,-1) limit of
/// Singh's pair: ids "trivial", "unit", "pr4", "mz01", "singh",
/// "singh-limit".
const std::vector<WpPair>& all_pairs();
const WpPair& pair_by_id(const std::string& id);

/// Residuals beta_n - sum_{j=0}^n (k/a;q)_{n-j}(k;q)_{n+j} /
/// ((q;q)_{n-j}(aq;q)_{n+j}) alpha_j for n = 1..nMax, to order N.  All must
/// be zero for a genuine WP-pair.
std::vector<LaurentSeries> wp_check(const WpPair& pair, const PairParams& p,
                                    long nMax, Exp N);

}  // namespace qbailey
