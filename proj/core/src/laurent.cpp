#include "qbailey/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbailey {

LaurentSeries LaurentSeries::zero(Exp order) {
  LaurentSeries s;
  s.order_ = order;
  return s;
}

LaurentSeries LaurentSeries::constant(Cyc c) { return monomial(std::move(c), 0); }

LaurentSeries LaurentSeries::monomial(Cyc c, Exp e) {
  LaurentSeries s;
  if (!c.is_zero()) {
    s.begin_ = e;
    s.coeffs_.push_back(std::move(c));
  }
  return s;
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    begin_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1].is_zero()) --tail;
  if (lead > 0) {
    begin_ += static_cast<Exp>(lead);
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  }
  coeffs_.resize(tail - lead);
}

Cyc LaurentSeries::coeff(Exp e) const {
  if (e > order_)
    throw std::logic_error("LaurentSeries::coeff: exponent beyond known order");
  if (coeffs_.empty() || e < begin_ ||
      e >= begin_ + static_cast<Exp>(coeffs_.size()))
    return Cyc();
  return coeffs_[static_cast<std::size_t>(e - begin_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  r.order_ = std::min(a.order_, b.order_);
  if (a.coeffs_.empty() && b.coeffs_.empty()) return r;
  Exp lo = std::min(a.coeffs_.empty() ? b.begin_ : a.begin_,
                    b.coeffs_.empty() ? a.begin_ : b.begin_);
  Exp hiA = a.coeffs_.empty() ? lo - 1 : a.begin_ + static_cast<Exp>(a.coeffs_.size()) - 1;
  Exp hiB = b.coeffs_.empty() ? lo - 1 : b.begin_ + static_cast<Exp>(b.coeffs_.size()) - 1;
  Exp hi = std::min(std::max(hiA, hiB), r.order_);
  if (hi < lo) return r;
  r.begin_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Cyc());
  for (Exp e = lo; e <= hi; ++e) {
    Cyc v;
    if (!a.coeffs_.empty() && e >= a.begin_ && e <= hiA)
      v += a.coeffs_[static_cast<std::size_t>(e - a.begin_)];
    if (!b.coeffs_.empty() && e >= b.begin_ && e <= hiB)
      v += b.coeffs_[static_cast<std::size_t>(e - b.begin_)];
    r.coeffs_[static_cast<std::size_t>(e - lo)] = std::move(v);
  }
  r.normalize();
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  r.order_ = std::min(sat_add(a.order_, b.val_lower()),
                      sat_add(b.order_, a.val_lower()));
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  Exp lo = a.begin_ + b.begin_;
  Exp hi = std::min(r.order_, lo + static_cast<Exp>(a.coeffs_.size()) +
                                  static_cast<Exp>(b.coeffs_.size()) - 2);
  if (hi < lo) return r;
  r.begin_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Cyc());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    Exp ea = a.begin_ + static_cast<Exp>(i);
    if (ea + b.begin_ > hi) break;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      Exp e = ea + b.begin_ + static_cast<Exp>(j);
      if (e > hi) break;
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

void LaurentSeries::scale(const Cyc& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    begin_ = 0;
    return;
  }
  if (c.is_one()) return;
  for (auto& x : coeffs_) x = x * c;
}

void LaurentSeries::shift(Exp e) {
  begin_ += e;
  order_ = sat_add(order_, e);
}

void LaurentSeries::mul_linear(const Cyc& c, Exp e) {
  if (c.is_zero() || coeffs_.empty()) return;
  // (1 - c q^e) x = x - c q^e x
  LaurentSeries shifted = *this;
  shifted.shift(e);
  shifted.scale(-c);
  *this = *this + shifted;
}

void LaurentSeries::div_linear(const Cyc& c, Exp e, Exp target) {
  if (c.is_zero()) return;
  if (e == 0) {
    if (c.is_one())
      throw std::domain_error("div_linear: factor 1-c vanishes (c=1)");
    scale((Cyc(1) - c).inverse());
    return;
  }
  if (e < 0) {
    // 1 - c q^e = -c q^e (1 - c^{-1} q^{-e})
    Cyc ci = c.inverse();
    scale(-ci);
    shift(-e);
    div_linear(ci, -e, target);
    return;
  }
  order_ = std::min(order_, sat_add(target, 0));
  if (coeffs_.empty()) return;
  Exp hi = order_;
  if (hi < begin_) { truncate_to(hi); return; }
  coeffs_.resize(static_cast<std::size_t>(hi - begin_ + 1), Cyc());
  // out[i] = x[i] + c * out[i-e], ascending
  for (Exp i = begin_ + e; i <= hi; ++i) {
    const Cyc& prev = coeffs_[static_cast<std::size_t>(i - e - begin_)];
    if (!prev.is_zero())
      coeffs_[static_cast<std::size_t>(i - begin_)] += c * prev;
  }
  normalize();
}

LaurentSeries LaurentSeries::inverse(Exp target) const {
  if (coeffs_.empty())
    throw std::domain_error("LaurentSeries::inverse: zero series");
  Exp v = begin_;
  Exp resultOrder = std::min(target, sat_add(order_, -2 * v));
  Cyc lead = coeffs_[0].inverse();
  // Invert the unit part 1 + u, u = lead * (coeffs shifted), to order M.
  Exp M = resultOrder + v;  // order of the unit-part inverse
  LaurentSeries r;
  r.order_ = resultOrder;
  r.begin_ = -v;
  if (M < 0) return r;
  r.coeffs_.assign(static_cast<std::size_t>(M) + 1, Cyc());
  r.coeffs_[0] = Cyc(1);
  for (Exp m = 1; m <= M; ++m) {
    Cyc s;
    Exp jmax = std::min<Exp>(m, static_cast<Exp>(coeffs_.size()) - 1);
    for (Exp j = 1; j <= jmax; ++j) {
      if (coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
      const Cyc& b = r.coeffs_[static_cast<std::size_t>(m - j)];
      if (b.is_zero()) continue;
      s += coeffs_[static_cast<std::size_t>(j)] * b;
    }
    if (!s.is_zero()) r.coeffs_[static_cast<std::size_t>(m)] = -(lead * s);
  }
  for (auto& x : r.coeffs_) x = x * lead;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::subst_monomial(const Cyc& c, Exp m) const {
  if (m < 1) throw std::domain_error("subst_monomial: m must be >= 1");
  if (c.is_zero()) throw std::domain_error("subst_monomial: c must be nonzero");
  LaurentSeries r;
  r.order_ = is_exact() ? kExactOrder : m * order_ + (m - 1);
  if (coeffs_.empty()) return r;
  r.begin_ = m * begin_;
  r.coeffs_.assign(static_cast<std::size_t>(m) * (coeffs_.size() - 1) + 1, Cyc());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    Exp e = begin_ + static_cast<Exp>(j);
    r.coeffs_[static_cast<std::size_t>(m) * j] = coeffs_[j] * c.pow(e);
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::pow_u(unsigned e, Exp target) const {
  LaurentSeries acc = LaurentSeries::one();
  acc.truncate_to(target >= kExactOrder ? kExactOrder : target);
  LaurentSeries base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

void LaurentSeries::truncate_to(Exp n) {
  if (n < order_) order_ = n;
  if (coeffs_.empty()) return;
  Exp hi = begin_ + static_cast<Exp>(coeffs_.size()) - 1;
  if (hi > order_) {
    if (order_ < begin_) {
      coeffs_.clear();
      begin_ = 0;
    } else {
      coeffs_.resize(static_cast<std::size_t>(order_ - begin_ + 1));
    }
    normalize();
  }
}

LaurentSeries LaurentSeries::truncated(Exp n) const {
  LaurentSeries r = *this;
  r.truncate_to(n);
  return r;
}

void LaurentSeries::window_truncate(Exp width) {
  if (coeffs_.empty()) return;
  truncate_to(sat_add(begin_, width));
}

bool identical(const LaurentSeries& a, const LaurentSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_ &&
         (a.coeffs_.empty() || a.begin_ == b.begin_);
}

Exp joint_order(const LaurentSeries& a, const LaurentSeries& b) {
  return std::min(a.order(), b.order());
}

std::optional<Mismatch> first_mismatch(const LaurentSeries& a,
                                       const LaurentSeries& b, Exp cap) {
  Exp hi = std::min(cap, joint_order(a, b));
  Exp lo = std::min(a.val_lower(), b.val_lower());
  for (Exp e = lo; e <= hi; ++e) {
    Cyc ca = a.coeff(e);
    Cyc cb = b.coeff(e);
    if (ca != cb) return Mismatch{e, std::move(ca), std::move(cb)};
  }
  return std::nullopt;
}

std::string LaurentSeries::to_string(int maxTerms) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  int shown = 0;
  for (std::size_t j = 0; j < coeffs_.size() && shown < maxTerms; ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (shown) os << " + ";
    os << "(" << coeffs_[j].to_string() << ")q^" << (begin_ + static_cast<Exp>(j));
    ++shown;
  }
  if (shown == maxTerms) os << " + ...";
  if (!is_exact()) os << " [O(q^" << order_ + 1 << ")]";
  return os.str();
}

}  // namespace qbailey
