#include "qbailey/pochhammer.hpp"

#include <cassert>
#include <stdexcept>

namespace qbailey {

std::string Monomial::to_string() const {
  if (e == 0) return c.to_string();
  std::string s = c.is_one() ? "" : (c == Cyc(-1) ? "-" : c.to_string() + "*");
  s += "q";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

LaurentSeries poch(const Monomial& head, const Monomial& base, long n, Exp N) {
  if (base.e < 1) throw std::domain_error("poch: base must have exponent >= 1");
  if (n < 0) throw std::domain_error("poch: negative length");
  LaurentSeries r = LaurentSeries::one();
  r.truncate_to(N);
  for (long j = 0; j < n; ++j) {
    Monomial f = head * base.pow(j);
    if (f.e > N) break;  // remaining factors are 1 mod q^{N+1}
    r.mul_linear(f.c, f.e);
    r.truncate_to(N);
  }
  return r;
}

Exp poch_valuation(Exp headE, Exp baseE, long n) {
  // sum_{j=0}^{n-1} min(0, headE + j*baseE) with baseE >= 1
  if (n <= 0 || headE >= 0) return 0;
  long jstar = static_cast<long>((-headE + baseE - 1) / baseE);
  long m = std::min<long>(n, jstar);
  return headE * m + baseE * (m * (m - 1) / 2);
}

bool poch_hits_zero(const Monomial& head, const Monomial& base, long n) {
  if (head.c.is_zero()) return false;
  if (base.e < 1) throw std::domain_error("poch_hits_zero: bad base");
  if (head.e > 0) return false;  // every factor is 1 - (positive q-power)
  if ((-head.e) % base.e != 0) return false;
  long j = -head.e / base.e;  // the only factor with q-exponent zero
  if (n >= 0 && j >= n) return false;
  return (head.c * base.c.pow(j)).is_one();
}

LaurentSeries poch_inf(const Monomial& head, const Monomial& base, Exp N) {
  if (base.e < 1)
    throw std::domain_error("poch_inf: base must have exponent >= 1");
  if (head.c.is_zero()) {
    LaurentSeries r = LaurentSeries::one();
    r.truncate_to(N);
    return r;
  }
  if (poch_hits_zero(head, base)) return LaurentSeries();  // exactly zero
  // Peel the finitely many factors that are not 1 + O(q); the rest is a
  // unit-factor product handled by product_terms.
  LaurentSeries lead = LaurentSeries::one();
  long j0 = 0;
  for (Monomial f = head; f.e <= 0; f = f * base) {
    lead.mul_linear(f.c, f.e);
    ++j0;
  }
  Exp tailN = sat_add(N, -std::min<Exp>(lead.val_lower(), 0));
  LaurentSeries tail = product_terms(
      [&](long j) {
        return (head * base.pow(j)).one_minus().truncated(tailN);
      },
      [&](long j) { return head.e + base.e * j; }, tailN, j0);
  LaurentSeries r = lead * tail;
  r.truncate_to(N);
  return r;
}

std::optional<Monomial> ProductQuotient::vanishing_denominator() const {
  for (const auto& [h, b] : den)
    if (poch_hits_zero(h, b)) return h;
  return std::nullopt;
}

LaurentSeries ProductQuotient::evaluate(Exp N) const {
  if (auto bad = vanishing_denominator())
    throw std::domain_error("ProductQuotient: denominator symbol vanishes: (" +
                            bad->to_string() + "; ...)_inf");
  // Slack absorbs the Laurent heads each symbol can contribute.
  Exp slack = 2;
  auto headSlack = [](const Monomial& h, const Monomial& b) {
    return -poch_valuation(h.e, b.e, 1 - h.e);  // all negative-exponent factors
  };
  for (const auto& [h, b] : num) slack += headSlack(h, b);
  for (const auto& [h, b] : den) slack += headSlack(h, b);
  Exp W = sat_add(N, slack);
  LaurentSeries r = prefactor.series();
  r.truncate_to(W);
  for (const auto& [h, b] : num) {
    r = r * poch_inf(h, b, W);
    if (r.is_zero() && r.is_exact()) return r;
  }
  for (const auto& [h, b] : den) {
    LaurentSeries d = poch_inf(h, b, W);
    r = r * d.inverse(W);
  }
  r.truncate_to(N);
  return r;
}

TermStream::TermStream(Exp width, long startIndex)
    : width_(width), current_(startIndex), acc_(LaurentSeries::one()) {
  acc_.truncate_to(width_);
}

void TermStream::apply_linear(const Monomial& f, bool numerator, LaurentSeries& s) const {
  if (numerator) {
    s.mul_linear(f.c, f.e);
  } else {
    s.div_linear(f.c, f.e, s.val_lower() - std::min<Exp>(0, f.e) + width_);
  }
}

TermStream& TermStream::add_run(Monomial head, Monomial base, long step,
                                long offset, bool numerator) {
  if (base.e < 1)
    throw std::domain_error("TermStream: base must have exponent >= 1");
  Run r;
  r.head = std::move(head);
  r.base = std::move(base);
  r.step = step;
  r.offset = offset;
  r.numerator = numerator;
  r.builtLen = std::max<long>(0, step * current_ + offset);
  for (long j = 0; j < r.builtLen; ++j)
    apply_linear(r.head * r.base.pow(j), numerator, acc_);
  acc_.window_truncate(width_);
  runs_.push_back(std::move(r));
  return *this;
}

TermStream& TermStream::num(Monomial head, Monomial base, long step, long offset) {
  return add_run(std::move(head), std::move(base), step, offset, true);
}

TermStream& TermStream::den(Monomial head, Monomial base, long step, long offset) {
  return add_run(std::move(head), std::move(base), step, offset, false);
}

TermStream& TermStream::power(const Monomial& ratio) {
  if (hasRatio_) {
    ratio_ = ratio_ * ratio;
  } else {
    ratio_ = ratio;
    hasRatio_ = true;
  }
  if (current_ != 0) {
    Monomial p = ratio.pow(current_);
    acc_.scale_monomial(p.c, p.e);
  }
  return *this;
}

TermStream& TermStream::power_fn(std::function<Monomial(long)> f) {
  powerFn_ = std::move(f);
  return *this;
}

TermStream& TermStream::term_num(Monomial head, Monomial stepBase) {
  perTerm_.push_back(PerTerm{std::move(head), std::move(stepBase), true});
  return *this;
}

TermStream& TermStream::term_den(Monomial head, Monomial stepBase) {
  perTerm_.push_back(PerTerm{std::move(head), std::move(stepBase), false});
  return *this;
}

TermStream& TermStream::scale(const Cyc& s) {
  acc_.scale(s);
  return *this;
}

void TermStream::advance_to(long n) {
  assert(n >= current_);
  if (n == current_) return;
  if (hasRatio_) {
    Monomial p = ratio_.pow(n - current_);
    acc_.scale_monomial(p.c, p.e);
  }
  for (auto& r : runs_) {
    long target = std::max<long>(0, r.step * n + r.offset);
    for (long j = r.builtLen; j < target; ++j)
      apply_linear(r.head * r.base.pow(j), r.numerator, acc_);
    r.builtLen = std::max(r.builtLen, target);
  }
  acc_.window_truncate(width_);
  current_ = n;
}

LaurentSeries TermStream::value(long n) {
  advance_to(n);
  LaurentSeries v = acc_;
  for (const auto& pt : perTerm_)
    apply_linear(pt.head * pt.stepBase.pow(n), pt.numerator, v);
  if (powerFn_) {
    Monomial p = powerFn_(n);
    v.scale_monomial(p.c, p.e);
  }
  return v;
}

Exp TermStream::val_floor(long n) const {
  Exp v = 0;
  for (const auto& r : runs_) {
    long len = std::max<long>(0, r.step * n + r.offset);
    Exp pv = poch_valuation(r.head.e, r.base.e, len);
    v += r.numerator ? pv : -pv;
  }
  for (const auto& pt : perTerm_) {
    Exp fv = std::min<Exp>(0, pt.head.e + pt.stepBase.e * n);
    v += pt.numerator ? fv : -fv;
  }
  if (hasRatio_) v += ratio_.e * n;
  if (powerFn_) v += powerFn_(n).e;
  return v;
}

std::optional<Monomial> TermStream::vanishing_denominator(long maxIndex) const {
  for (const auto& r : runs_) {
    if (r.numerator) continue;
    long len = std::max<long>(0, r.step * maxIndex + r.offset);
    if (poch_hits_zero(r.head, r.base, len)) return r.head;
  }
  for (const auto& pt : perTerm_) {
    if (pt.numerator) continue;
    for (long n = current_; n <= maxIndex; ++n) {
      Monomial f = pt.head * pt.stepBase.pow(n);
      if (f.e == 0 && f.c.is_one()) return pt.head;
      if (pt.stepBase.e > 0 && f.e > 0) break;  // exponents only grow
    }
  }
  return std::nullopt;
}

}  // namespace qbailey
