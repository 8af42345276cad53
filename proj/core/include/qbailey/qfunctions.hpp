#pragma once

#include "qbailey/pochhammer.hpp"

namespace qbailey {

/// Ramanujan's theta function psi evaluated at c*q^m:
/// sum_{n>=0} (c q^m)^{n(n+1)/2}, to order N.
LaurentSeries theta_psi(Exp N, const Cyc& c = Cyc(1), Exp m = 1);
/// Product form (q^2;q^2)_inf / (q;q^2)_inf, to order N.
LaurentSeries theta_psi_product(Exp N);

/// phi(q) = sum_{n in Z} q^{n^2}, to order N.
LaurentSeries theta_phi(Exp N);
/// Product form (-q,-q,q^2;q^2)_inf, to order N.
LaurentSeries theta_phi_product(Exp N);

/// Cubic theta series a(q) = sum_{m,n} q^{m^2+mn+n^2}, to order N, by direct
/// lattice enumeration.
LaurentSeries a_of_q(Exp N);

/// M(k,q) = (k^2 q, q/k^2, q^2, q^2; q^2)_inf / (k^2, q^2/k^2, q, q; q^2)_inf
/// for a constant k with k != 0 and k^2 != 1 (otherwise the (k^2;q^2)_inf
/// factor degenerates and the quotient is rejected).
LaurentSeries m_product(const Cyc& k, Exp N);

/// Lambert series sum_{n>=1} cNum q^{mNum n} / (1 - cDen q^{mDen n}) with
/// monomial coefficients, to order N.  Requires the term valuations
/// val(cNum) + mNum*n to be unbounded (mNum >= 1).
LaurentSeries lambert(const Monomial& cNum, Exp mNum, const Monomial& cDen,
                      Exp mDen, Exp N);

/// sum_{n>=1} n x^n q^n / (1 - q^n), to order N.
LaurentSeries lambert_weighted(const Cyc& x, Exp N);

/// Generalized n-weighted Lambert sum: sum_{n>=1} n x^n q^{u n}/(1 - q^{v n}).
LaurentSeries lambert_weighted_uv(const Monomial& x, Exp u, Exp v, Exp N);

/// Principal character modulo 3: 0 if 3 | n, else 1.
inline int chi0_mod3(long n) { return n % 3 == 0 ? 0 : 1; }

}  // namespace qbailey
