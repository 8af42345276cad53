#include "qbailey/summation.hpp"

#include <string>

namespace qbailey {

namespace {
constexpr long kIterationCap = 2'000'000;

[[noreturn]] void bound_stalled(const char* what, long n) {
  throw ValuationError(std::string(what) +
                       ": valuation bound failed to pass the cutoff by n=" +
                       std::to_string(n) + " (bound not unbounded?)");
}
}  // namespace

LaurentSeries sum_terms(const std::function<LaurentSeries(long)>& term,
                        const ValuationBound& bound, Exp N, long start) {
  LaurentSeries acc = LaurentSeries::zero(N);
  Exp prev = bound(start);
  for (long n = start;; ++n) {
    Exp b = bound(n);
    if (b < prev)
      throw ValuationError("sum_terms: valuation bound decreased at n=" +
                           std::to_string(n));
    prev = b;
    if (b > N) break;
    if (n - start > kIterationCap) bound_stalled("sum_terms", n);
    LaurentSeries t = term(n);
    if (t.order() < N)
      throw ValuationError("sum_terms: term at n=" + std::to_string(n) +
                           " known only to order " + std::to_string(t.order()) +
                           " < " + std::to_string(N));
    if (!t.is_zero() && t.val_lower() < b)
      throw ValuationError(
          "sum_terms: term valuation " + std::to_string(t.val_lower()) +
          " below declared bound " + std::to_string(b) +
          " at n=" + std::to_string(n));
    t.truncate_to(N);
    acc += t;
  }
  return acc;
}

LaurentSeries product_terms(const std::function<LaurentSeries(long)>& factor,
                            const ValuationBound& bound, Exp N, long start) {
  LaurentSeries acc = LaurentSeries::one();
  acc.truncate_to(N);
  Exp prev = bound(start);
  for (long j = start;; ++j) {
    Exp b = bound(j);
    if (b < prev)
      throw ValuationError("product_terms: valuation bound decreased at j=" +
                           std::to_string(j));
    prev = b;
    if (b > N) break;
    if (j - start > kIterationCap) bound_stalled("product_terms", j);
    LaurentSeries f = factor(j);
    if (!f.coeff(0).is_one())
      throw ValuationError("product_terms: factor at j=" + std::to_string(j) +
                           " has constant term != 1");
    LaurentSeries tail = f - LaurentSeries::one();
    if (!tail.is_zero() && tail.val_lower() < std::max<Exp>(1, b))
      throw ValuationError("product_terms: factor tail valuation below bound at j=" +
                           std::to_string(j));
    acc *= f;
    acc.truncate_to(N);
  }
  return acc;
}

LaurentSeries sum_eventually_geometric(
    const std::function<LaurentSeries(long)>& unit, const Cyc& ratio,
    long stableFrom, Exp N) {
  if (ratio.is_one())
    throw std::domain_error("sum_eventually_geometric: ratio must differ from 1");
  LaurentSeries acc = LaurentSeries::zero(N);
  Cyc rn(1);
  for (long n = 1; n <= stableFrom; ++n) {
    rn = rn * ratio;
    LaurentSeries t = unit(n);
    t.truncate_to(N);
    t.scale(rn);
    acc += t;
  }
  LaurentSeries tail = unit(stableFrom + 1).truncated(N);
  LaurentSeries probe = unit(stableFrom + 2).truncated(N);
  if (first_mismatch(tail, probe, N))
    throw ValuationError(
        "sum_eventually_geometric: unit not stabilized past n=" +
        std::to_string(stableFrom));
  // sum_{n > stableFrom} ratio^n = ratio^{stableFrom+1} / (1 - ratio)
  Cyc geo = (rn * ratio) * (Cyc(1) - ratio).inverse();
  tail.scale(geo);
  acc += tail;
  return acc;
}

}  // namespace qbailey
