#include "qbailey/qfunctions.hpp"

#include <cmath>
#include <stdexcept>

namespace qbailey {

LaurentSeries theta_psi(Exp N, const Cyc& c, Exp m) {
  LaurentSeries r = LaurentSeries::zero(N);
  for (long n = 0;; ++n) {
    Exp t = static_cast<Exp>(n) * (n + 1) / 2;
    if (m * t > N) break;
    r += LaurentSeries::monomial(c.pow(t), m * t);
  }
  return r;
}

LaurentSeries theta_psi_product(Exp N) {
  LaurentSeries num = poch_inf(Monomial::q(2), Monomial::q(2), N);
  LaurentSeries den = poch_inf(Monomial::q(1), Monomial::q(2), N);
  return (num * den.inverse(N)).truncated(N);
}

LaurentSeries theta_phi(Exp N) {
  LaurentSeries r = LaurentSeries::zero(N);
  r += LaurentSeries::one().truncated(N);
  for (long n = 1; static_cast<Exp>(n) * n <= N; ++n)
    r += LaurentSeries::monomial(Cyc(2), static_cast<Exp>(n) * n);
  return r;
}

LaurentSeries theta_phi_product(Exp N) {
  Monomial mq{Cyc(-1), 1};
  LaurentSeries f = poch_inf(mq, Monomial::q(2), N);
  LaurentSeries r = f * f * poch_inf(Monomial::q(2), Monomial::q(2), N);
  r.truncate_to(N);
  return r;
}

LaurentSeries a_of_q(Exp N) {
  LaurentSeries r = LaurentSeries::zero(N);
  // m^2 + mn + n^2 = ((2m+n)^2 + 3n^2)/4 >= max(m^2,n^2)/3-ish; a crude
  // enumeration box |m|,|n| <= ceil(2 sqrt(N)) is safely exhaustive.
  long B = static_cast<long>(2 * std::sqrt(static_cast<double>(N))) + 2;
  std::vector<long> counts(static_cast<std::size_t>(N) + 1, 0);
  for (long m = -B; m <= B; ++m) {
    for (long n = -B; n <= B; ++n) {
      long e = m * m + m * n + n * n;
      if (e <= N) ++counts[static_cast<std::size_t>(e)];
    }
  }
  for (Exp e = 0; e <= N; ++e)
    if (counts[static_cast<std::size_t>(e)])
      r += LaurentSeries::monomial(Cyc(counts[static_cast<std::size_t>(e)]), e);
  return r;
}

LaurentSeries m_product(const Cyc& k, Exp N) {
  if (k.is_zero()) throw std::domain_error("m_product: k must be nonzero");
  Cyc k2 = k * k;
  if (k2.is_one())
    throw std::domain_error("m_product: k^2 = 1 degenerates (k^2;q^2)_inf");
  ProductQuotient pq;
  Monomial q2 = Monomial::q(2);
  pq.mul(Monomial{k2, 1}, q2)
      .mul(Monomial{k2.inverse(), 1}, q2)
      .mul(Monomial::q(2), q2)
      .mul(Monomial::q(2), q2)
      .div(Monomial{k2, 0}, q2)
      .div(Monomial{k2.inverse(), 2}, q2)
      .div(Monomial::q(1), q2)
      .div(Monomial::q(1), q2);
  return pq.evaluate(N);
}

LaurentSeries lambert(const Monomial& cNum, Exp mNum, const Monomial& cDen,
                      Exp mDen, Exp N) {
  if (cNum.c.is_zero()) return LaurentSeries::zero(N);
  if (mNum < 1)
    throw std::domain_error("lambert: numerator steps must raise valuation");
  auto term = [&](long n) {
    LaurentSeries t = LaurentSeries::monomial(cNum.c, cNum.e + mNum * n);
    Monomial d{cDen.c, cDen.e + mDen * n};
    t.div_linear(d.c, d.e, t.val_lower() - std::min<Exp>(0, d.e) + N + 4);
    t.truncate_to(sat_add(N, 0));
    if (!t.is_exact() && t.order() < N) t.truncate_to(t.order());
    LaurentSeries out = t;
    out.truncate_to(N);
    return out;
  };
  auto bound = [&](long n) {
    Exp denVal = std::min<Exp>(0, cDen.e + mDen * n);
    return cNum.e + mNum * n - denVal;
  };
  return sum_terms(term, bound, N);
}

LaurentSeries lambert_weighted(const Cyc& x, Exp N) {
  return lambert_weighted_uv(Monomial::of(x), 1, 1, N);
}

LaurentSeries lambert_weighted_uv(const Monomial& x, Exp u, Exp v, Exp N) {
  if (x.c.is_zero()) return LaurentSeries::zero(N);
  auto term = [&](long n) {
    Monomial num = x.pow(n);
    LaurentSeries t = LaurentSeries::monomial(num.c * Cyc(n), num.e + u * n);
    t.div_linear(Cyc(1), v * n, t.val_lower() + N + 4);
    t.truncate_to(N);
    return t;
  };
  auto bound = [&](long n) { return x.e * n + u * n; };
  return sum_terms(term, bound, N);
}

}  // namespace qbailey
