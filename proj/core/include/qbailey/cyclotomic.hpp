#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qbailey {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (mpq_class canonicalizes on every operation).
using Rational = mpq_class;

Rational rational_of(long num, long den = 1);
std::string rational_to_string(const Rational& r);

/// Element of Q(zeta_12), stored as c0 + c1 z + c2 z^2 + c3 z^3 with
/// z = zeta_12 and the reduction z^4 = z^2 - 1.  This field contains
/// i = z^3 and omega = z^2 - 1 (a primitive cube root of unity), which
/// covers every constant the identity bank needs.
class Cyc {
 public:
  Cyc() = default;
  Cyc(long v) : c_{Rational(v), Rational(), Rational(), Rational()} {}
  explicit Cyc(Rational v) : c_{std::move(v), Rational(), Rational(), Rational()} {}
  Cyc(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Cyc of(long num, long den) { return Cyc(rational_of(num, den)); }
  static Cyc i();       // z^3
  static Cyc omega();   // z^2 - 1, satisfies w^2 + w + 1 = 0
  static Cyc omega2();  // omega^2
  static Cyc zeta();    // z itself

  bool is_zero() const;
  bool is_one() const;
  /// True when the z, z^2, z^3 components all vanish.
  bool is_rational() const;
  const Rational& rat() const { return c_[0]; }  // valid when is_rational()
  const Rational& comp(int idx) const { return c_[idx]; }

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { a += b; return a; }
  friend Cyc operator-(Cyc a, const Cyc& b) { a -= b; return a; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Multiplicative inverse.  Throws std::domain_error on zero.
  Cyc inverse() const;
  /// Integer power, negative exponents allowed for nonzero values.
  Cyc pow(std::int64_t e) const;

  /// Renders over the basis {1, omega, i, i*omega}, e.g. "-4/3+2ω".
  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

inline Cyc operator*(const Cyc& a, long b) { return a * Cyc(b); }
inline Cyc operator*(long a, const Cyc& b) { return Cyc(a) * b; }

}  // namespace qbailey
