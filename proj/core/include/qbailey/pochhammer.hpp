#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qbailey/laurent.hpp"
#include "qbailey/summation.hpp"

namespace qbailey {

/// Exact monomial c * q^e.  Parameter specializations (a, k, z, rho, the
/// Pochhammer bases) are always monomials, which keeps valuations computable
/// in closed form.
struct Monomial {
  Cyc c = Cyc(1);
  Exp e = 0;

  static Monomial q(Exp e = 1) { return {Cyc(1), e}; }
  static Monomial of(Cyc v, Exp e = 0) { return {std::move(v), e}; }
  static Monomial one() { return {Cyc(1), 0}; }

  bool is_one() const { return e == 0 && c.is_one(); }
  Monomial inverse() const { return {c.inverse(), -e}; }
  Monomial pow(std::int64_t n) const { return {c.pow(n), e * n}; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.c * b.c, a.e + b.e};
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.c * b.c.inverse(), a.e - b.e};
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e && a.c == b.c;
  }
  LaurentSeries series() const { return LaurentSeries::monomial(c, e); }
  /// Series for 1 - c q^e.
  LaurentSeries one_minus() const {
    return LaurentSeries::one() - series();
  }
  std::string to_string() const;
};

/// q-Pochhammer symbol (head; base)_n = prod_{j=0}^{n-1} (1 - head * base^j),
/// truncated to order N.  base must be a genuine q-power (base.e >= 1).
LaurentSeries poch(const Monomial& head, const Monomial& base, long n, Exp N);

/// Infinite symbol (head; base)_inf to order N.  Leading factors with
/// non-positive q-exponent are multiplied explicitly; the unit-factor tail is
/// delegated to product_terms.  If some factor is exactly zero (head a
/// nonnegative power of 1/base with matching coefficient) the product is
/// exactly zero.
LaurentSeries poch_inf(const Monomial& head, const Monomial& base, Exp N);

/// Exact valuation of (head; base)_n for monomial data:
/// sum_{j=0}^{n-1} min(0, head.e + j*base.e).
Exp poch_valuation(Exp headE, Exp baseE, long n);

/// True if (1 - head * base^j) vanishes identically for some j in [0, n).
/// Pass n < 0 to scan the infinite symbol.
bool poch_hits_zero(const Monomial& head, const Monomial& base, long n = -1);

/// Quotient of infinite Pochhammer symbols times a monomial prefactor:
///   prefactor * prod num_i (head;base)_inf / prod den_i (head;base)_inf.
struct ProductQuotient {
  Monomial prefactor = Monomial::one();
  std::vector<std::pair<Monomial, Monomial>> num, den;  // (head, base)

  ProductQuotient& mul(Monomial head, Monomial base) {
    num.emplace_back(std::move(head), std::move(base));
    return *this;
  }
  ProductQuotient& div(Monomial head, Monomial base) {
    den.emplace_back(std::move(head), std::move(base));
    return *this;
  }
  /// First denominator factor that vanishes identically, if any.
  std::optional<Monomial> vanishing_denominator() const;
  LaurentSeries evaluate(Exp N) const;
};

/// Incrementally evaluated product of Pochhammer runs, linear per-term
/// factors, and a power, queried at nondecreasing indices.  This is the
/// workhorse behind every series in the identity bank: advancing from n-1 to
/// n costs one linear-factor update per symbol instead of a fresh build.
///
/// value(n) = scale * power(n) * prod runs (head;base)_{step*n+offset}^{+-1}
///                  * prod per-term (1 - head*stepBase^n)^{+-1}
class TermStream {
 public:
  /// width: how many exponents above the current valuation stay exact.
  explicit TermStream(Exp width, long startIndex = 0);

  TermStream& num(Monomial head, Monomial base, long step = 1, long offset = 0);
  TermStream& den(Monomial head, Monomial base, long step = 1, long offset = 0);
  TermStream& power(const Monomial& ratio);          // multiplies value by ratio^n
  TermStream& power_fn(std::function<Monomial(long)> f);  // absolute power
  TermStream& term_num(Monomial head, Monomial stepBase);
  TermStream& term_den(Monomial head, Monomial stepBase);
  TermStream& scale(const Cyc& s);

  /// Evaluated at nondecreasing indices only (asserted).
  LaurentSeries value(long n);
  /// Exact valuation lower bound of value(n); equals the true valuation
  /// unless some numerator factor vanishes identically.
  Exp val_floor(long n) const;
  /// First denominator factor (run or per-term at index n>=startIndex) that
  /// would vanish identically, rendering the stream inadmissible.
  std::optional<Monomial> vanishing_denominator(long maxIndex) const;

 private:
  struct Run {
    Monomial head, base;
    long step = 1, offset = 0;
    bool numerator = true;
    long builtLen = 0;
  };
  struct PerTerm {
    Monomial head, stepBase;
    bool numerator;
  };
  TermStream& add_run(Monomial head, Monomial base, long step, long offset,
                      bool numerator);
  void apply_linear(const Monomial& f, bool numerator, LaurentSeries& s) const;
  void advance_to(long n);

  Exp width_;
  long current_;
  LaurentSeries acc_;
  std::vector<Run> runs_;
  std::vector<PerTerm> perTerm_;
  Monomial ratio_ = Monomial::one();
  bool hasRatio_ = false;
  std::function<Monomial(long)> powerFn_;
};

}  // namespace qbailey
