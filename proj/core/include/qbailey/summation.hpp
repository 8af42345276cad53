#pragma once

#include <functional>
#include <stdexcept>

#include "qbailey/laurent.hpp"

namespace qbailey {

/// Lower bound on the q-adic valuation of the n-th term of an infinite sum
/// or product.  Must be nondecreasing, unbounded, and a true lower bound;
/// the summation routines assert the last property at runtime.
using ValuationBound = std::function<Exp(long)>;

struct ValuationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sums term(n) for n = start, start+1, ... until bound(n) > N; the result is
/// exact to order N.  Each computed term's actual valuation is checked
/// against bound(n); a violation signals a wrong bound or a transcription
/// bug in the term.
LaurentSeries sum_terms(const std::function<LaurentSeries(long)>& term,
                        const ValuationBound& bound, Exp N, long start = 1);

/// Multiplies factor(j) for j = start, ..., stopping once bound(j) > N.
/// Every factor must be 1 + (tail of valuation >= max(1, bound(j))); a factor
/// with constant term != 1 is rejected.
LaurentSeries product_terms(const std::function<LaurentSeries(long)>& factor,
                            const ValuationBound& bound, Exp N, long start = 0);

/// Exact value of sum_{n>=1} ratio^n * unit(n) when the coefficients of
/// unit(n) stabilize for n > stableFrom (true for Pochhammer-type units once
/// every factor beyond the order cutoff is congruent to 1).  The stabilized
/// tail is summed in closed form as a geometric series, which requires
/// ratio != 1; stabilization is verified at runtime by comparing two
/// successive units.
LaurentSeries sum_eventually_geometric(
    const std::function<LaurentSeries(long)>& unit, const Cyc& ratio,
    long stableFrom, Exp N);

}  // namespace qbailey
