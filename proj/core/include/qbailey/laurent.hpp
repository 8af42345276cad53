#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbailey/cyclotomic.hpp"

namespace qbailey {

using Exp = std::int64_t;

/// Sentinel order for series whose coefficients are known at every exponent
/// (finite Laurent polynomials built from exact data).
inline constexpr Exp kExactOrder = Exp{1} << 60;

inline Exp sat_add(Exp a, Exp b) {
  if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
  Exp s = a + b;
  return s >= kExactOrder ? kExactOrder : s;
}

/// Truncated formal Laurent series in one variable q over Q(zeta_12).
///
/// Coefficients are known exactly for every exponent <= order(); the stored
/// window [begin, begin+size) is trimmed so its first and last entries are
/// nonzero, and exponents outside the window but <= order() are exactly zero.
/// Every operation computes the correct guaranteed order of its result, so
/// precision loss is always explicit, never silent.
class LaurentSeries {
 public:
  LaurentSeries() : order_(kExactOrder) {}  // exact zero

  static LaurentSeries zero(Exp order = kExactOrder);
  static LaurentSeries constant(Cyc c);
  static LaurentSeries monomial(Cyc c, Exp e);
  static LaurentSeries one() { return constant(Cyc(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  Exp order() const { return order_; }
  bool is_exact() const { return order_ >= kExactOrder; }

  /// Smallest exponent that can carry a nonzero coefficient; for the zero
  /// series this is order()+1 (everything known is zero).
  Exp val_lower() const { return coeffs_.empty() ? sat_add(order_, 1) : begin_; }

  /// Coefficient at exponent e.  Throws if e is beyond the known order.
  Cyc coeff(Exp e) const;
  bool known_at(Exp e) const { return e <= order_; }

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator+=(const LaurentSeries& o) { *this = *this + o; return *this; }
  LaurentSeries& operator-=(const LaurentSeries& o) { *this = *this - o; return *this; }
  LaurentSeries& operator*=(const LaurentSeries& o) { *this = *this * o; return *this; }

  void scale(const Cyc& c);
  void shift(Exp e);  // multiply by q^e
  void scale_monomial(const Cyc& c, Exp e) { scale(c); shift(e); }

  /// In-place multiply by the exact linear factor (1 - c q^e).
  void mul_linear(const Cyc& c, Exp e);
  /// In-place divide by (1 - c q^e), producing coefficients up to `target`.
  /// For e == 0 this is scalar division by 1-c (requires c != 1).
  void div_linear(const Cyc& c, Exp e, Exp target);

  /// Multiplicative inverse computed to order `target` (capped further by
  /// what the operand's own order supports).  The leading stored coefficient
  /// must be nonzero; throws std::domain_error on the zero series.
  LaurentSeries inverse(Exp target) const;

  /// Substitute q -> c q^m (m >= 1, c != 0).
  LaurentSeries subst_monomial(const Cyc& c, Exp m) const;

  LaurentSeries pow_u(unsigned e, Exp target) const;

  void truncate_to(Exp n);
  LaurentSeries truncated(Exp n) const;
  /// Keep a window of `width` exponents above the valuation.  Used by the
  /// incremental term streams so precision follows the rising valuation.
  void window_truncate(Exp width);

  friend bool identical(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string(int maxTerms = 12) const;

 private:
  void normalize();

  Exp begin_ = 0;           // exponent of coeffs_[0]
  Exp order_ = kExactOrder; // coefficients known exactly for exponents <= order_
  std::vector<Cyc> coeffs_;
};

/// Exponent range on which two series can be compared: everything up to the
/// smaller known order.
Exp joint_order(const LaurentSeries& a, const LaurentSeries& b);

struct Mismatch {
  Exp exponent;
  Cyc lhs, rhs;
};

/// First exponent <= cap where the two series differ, scanning from the lower
/// end of the jointly known range.  Empty when they agree everywhere there.
std::optional<Mismatch> first_mismatch(const LaurentSeries& a,
                                       const LaurentSeries& b, Exp cap);

}  // namespace qbailey
