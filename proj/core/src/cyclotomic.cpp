#include "qbailey/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace qbailey {

Rational rational_of(long num, long den) {
  if (den == 0) throw std::domain_error("rational_of: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Cyc Cyc::i() { return Cyc(Rational(), Rational(), Rational(), Rational(1)); }
Cyc Cyc::omega() { return Cyc(Rational(-1), Rational(), Rational(1), Rational()); }
Cyc Cyc::omega2() { return omega() * omega(); }
Cyc Cyc::zeta() { return Cyc(Rational(), Rational(1), Rational(), Rational()); }

bool Cyc::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Cyc::is_one() const {
  return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Cyc::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Cyc Cyc::operator-() const { return Cyc(-c_[0], -c_[1], -c_[2], -c_[3]); }

Cyc& Cyc::operator+=(const Cyc& o) {
  for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  // Rational operands are the common case; skip the full convolution there.
  if (a.is_rational()) {
    if (sgn(a.c_[0]) == 0) return Cyc();
    return Cyc(a.c_[0] * b.c_[0], a.c_[0] * b.c_[1], a.c_[0] * b.c_[2],
               a.c_[0] * b.c_[3]);
  }
  if (b.is_rational()) {
    if (sgn(b.c_[0]) == 0) return Cyc();
    return Cyc(a.c_[0] * b.c_[0], a.c_[1] * b.c_[0], a.c_[2] * b.c_[0],
               a.c_[3] * b.c_[0]);
  }
  std::array<Rational, 7> r{};
  for (int i = 0; i < 4; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  // Reduce with z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
  return Cyc(r[0] - r[4] - r[6], r[1] - r[5], r[2] + r[4], r[3] + r[5]);
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc::inverse: division by zero");
  if (is_rational()) return Cyc(1 / c_[0]);
  // Solve M y = e0 where M is the multiplication-by-*this matrix over the
  // power basis.  Column j of M is (*this) * z^j.
  std::array<Cyc, 4> basis = {Cyc(1), Cyc::zeta(), Cyc::zeta() * Cyc::zeta(),
                              Cyc::i()};
  Rational m[4][5];
  for (int j = 0; j < 4; ++j) {
    Cyc col = *this * basis[j];
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  for (int i = 0; i < 4; ++i) m[i][4] = Rational(i == 0 ? 1 : 0);
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (sgn(m[r][col]) != 0) { pivot = r; break; }
    }
    if (pivot < 0) throw std::domain_error("Cyc::inverse: singular element");
    if (pivot != col) {
      for (int c = col; c < 5; ++c) swap(m[pivot][c], m[col][c]);
    }
    Rational inv = 1 / m[col][col];
    for (int c = col; c < 5; ++c) m[col][c] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return Cyc(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyc Cyc::pow(std::int64_t e) const {
  Cyc base = e >= 0 ? *this : inverse();
  std::uint64_t n = e >= 0 ? static_cast<std::uint64_t>(e)
                           : static_cast<std::uint64_t>(-e);
  Cyc acc(1);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::string Cyc::to_string() const {
  // Basis change: with z = -i*omega one gets
  //   c0 + c1 z + c2 z^2 + c3 z^3 = (c0+c2) + c2 w + c3 i - c1 i w.
  Rational u0 = c_[0] + c_[2];
  const Rational& uw = c_[2];
  const Rational& ui = c_[3];
  Rational uiw = -c_[1];
  struct Part { const Rational* v; const char* sym; };
  const Part parts[4] = {{&u0, ""}, {&uw, "ω"}, {&ui, "i"}, {&uiw, "iω"}};
  std::string out;
  for (const auto& p : parts) {
    if (sgn(*p.v) == 0) continue;
    Rational v = *p.v;
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (v == 1 && p.sym[0] != '\0') {
      out += p.sym;
    } else {
      out += rational_to_string(v);
      out += p.sym;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace qbailey
