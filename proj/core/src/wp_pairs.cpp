#include "qbailey/wp_pairs.hpp"

#include <stdexcept>

namespace qbailey {

namespace {

// Shared evaluator: alpha/beta given by TermStream specs or special forms.
class StreamPairEval : public PairEval {
 public:
  enum class Kind { Stream, Delta0, EvenStream };

  StreamPairEval(Exp width) : width_(width) {}

  LaurentSeries alpha(long n) override { return eval(alphaKind_, alphaStream_, n); }
  LaurentSeries beta(long n) override { return eval(betaKind_, betaStream_, n); }

  Exp alpha_floor(long n) const override { return floor_of(alphaKind_, alphaStream_, n); }
  Exp beta_floor(long n) const override { return floor_of(betaKind_, betaStream_, n); }

  Kind alphaKind_ = Kind::Stream;
  Kind betaKind_ = Kind::Stream;
  std::optional<TermStream> alphaStream_, betaStream_;
  Exp width_;

 private:
  LaurentSeries eval(Kind kind, std::optional<TermStream>& s, long n) {
    if (n == 0) return LaurentSeries::one();
    switch (kind) {
      case Kind::Delta0:
        return LaurentSeries();
      case Kind::EvenStream:
        if (n % 2 == 1) return LaurentSeries();
        return s->value(n / 2);
      case Kind::Stream:
        return s->value(n);
    }
    throw std::logic_error("unreachable");
  }
  Exp floor_of(Kind kind, const std::optional<TermStream>& s, long n) const {
    if (n == 0) return 0;
    switch (kind) {
      case Kind::Delta0:
        return kExactOrder;
      case Kind::EvenStream:
        if (n % 2 == 1) return kExactOrder;
        return s->val_floor(n / 2);
      case Kind::Stream:
        return s->val_floor(n);
    }
    throw std::logic_error("unreachable");
  }
};

std::optional<std::string> check_stream_dens(const TermStream& s, long maxIdx,
                                             const char* what) {
  if (auto bad = s.vanishing_denominator(maxIdx))
    return std::string(what) + " denominator symbol (" + bad->to_string() +
           "; ...) vanishes";
  return std::nullopt;
}

// ---- trivial pair: alpha_n = [n=0], beta_n = (k,k/a;q)_n / ((aq,q;q)_n) ----

std::unique_ptr<PairEval> make_trivial(const PairParams& p, Exp width) {
  auto ev = std::make_unique<StreamPairEval>(width);
  ev->alphaKind_ = StreamPairEval::Kind::Delta0;
  const Monomial& B = p.base;
  ev->betaStream_.emplace(width);
  ev->betaStream_->num(p.k, B).num(p.k / p.a, B).den(p.a * B, B).den(B, B);
  return ev;
}

std::optional<std::string> constraints_trivial(const PairParams& p, long maxIdx) {
  if (p.a == p.k) return "trivial pair requires a != k";
  TermStream probe(4);
  probe.den(p.a * p.base, p.base).den(p.base, p.base);
  // lengths grow with the index; scan at the largest requested index
  for (long j = 0; j < maxIdx; ++j) {
    Monomial f = p.a * p.base.pow(j + 1);
    if (f.e == 0 && f.c.is_one()) return "(aq;q)_n denominator vanishes";
  }
  return std::nullopt;
}

// ---- unit pair: beta_n = [n=0],
// alpha_n = (1-a q^{2n})/(1-a) (a,a/k;q)_n / ((q,kq;q)_n) (k/a)^n ----

std::unique_ptr<PairEval> make_unit(const PairParams& p, Exp width) {
  auto ev = std::make_unique<StreamPairEval>(width);
  ev->betaKind_ = StreamPairEval::Kind::Delta0;
  const Monomial& B = p.base;
  ev->alphaStream_.emplace(width);
  ev->alphaStream_->num(p.a, B)
      .num(p.a / p.k, B)
      .den(B, B)
      .den(p.k * B, B)
      .power(p.k / p.a)
      .term_num(p.a, B.pow(2))
      .term_den(p.a, Monomial::one());
  return ev;
}

std::optional<std::string> constraints_unit(const PairParams& p, long maxIdx) {
  if (p.a.e == 0 && p.a.c.is_one()) return "unit pair requires a != 1";
  for (long j = 0; j < maxIdx; ++j) {
    Monomial f = p.k * p.base.pow(j + 1);
    if (f.e == 0 && f.c.is_one()) return "(kq;q)_n denominator vanishes";
  }
  return std::nullopt;
}

// ---- pr4 pair ----
// alpha_{2m} = (1-a q^{4m})/(1-a) (a,a^2/k^2;q^2)_m/((q^2,q^2 k^2/a;q^2)_m)
//              (k/a)^{2m};  alpha odd = 0
// beta_n = (k;q)_n (k^2 q/a;q^2)_n (a/k;q)_n /
//          ((aq;q^2)_n (qk^2/a;q)_n (q;q)_n) (-k/a)^n
// (square-root factors stored in their collapsed integer-power form)

std::unique_ptr<PairEval> make_pr4(const PairParams& p, Exp width) {
  auto ev = std::make_unique<StreamPairEval>(width);
  const Monomial &B = p.base;
  Monomial B2 = B.pow(2);
  Monomial k2 = p.k.pow(2);
  ev->alphaKind_ = StreamPairEval::Kind::EvenStream;
  ev->alphaStream_.emplace(width);
  ev->alphaStream_->num(p.a, B2)
      .num(p.a.pow(2) / k2, B2)
      .den(B2, B2)
      .den(B2 * k2 / p.a, B2)
      .power((p.k / p.a).pow(2))
      .term_num(p.a, B.pow(4))
      .term_den(p.a, Monomial::one());
  ev->betaStream_.emplace(width);
  ev->betaStream_->num(p.k, B)
      .num(k2 * B / p.a, B2)
      .num(p.a / p.k, B)
      .den(p.a * B, B2)
      .den(B * k2 / p.a, B)
      .den(B, B)
      .power(Monomial{Cyc(-1), 0} * (p.k / p.a));
  return ev;
}

std::optional<std::string> constraints_pr4(const PairParams& p, long maxIdx) {
  if (p.a.e == 0 && p.a.c.is_one()) return "pr4 requires a != 1";
  const Monomial& B = p.base;
  Monomial k2 = p.k.pow(2);
  for (long j = 0; j < 2 * maxIdx; ++j) {
    if (auto f = p.a * B.pow(2 * j + 1); f.e == 0 && f.c.is_one())
      return "(aq;q^2)_n denominator vanishes";
    if (auto f = B * k2 / p.a * B.pow(j); f.e == 0 && f.c.is_one())
      return "(qk^2/a;q)_n denominator vanishes";
    if (auto f = B.pow(2) * k2 / p.a * B.pow(2 * j); f.e == 0 && f.c.is_one())
      return "(q^2k^2/a;q^2)_m denominator vanishes";
  }
  return std::nullopt;
}

// ---- mz01 pair ----
// alpha_n = (q a^2/k^2;q)_n/(q;q)_n (k/a)^n
// beta_n  = (qa/k,k;q)_n (k^2/a;q)_{2n} / ((k^2/a,q;q)_n (aq;q)_{2n})
// The paper prints the denominators with commas, "(k^2/a,q,q)_n" and
// "(aq,q)_{2n}"; the single-symbol reading is the one that satisfies the
// defining relation exactly, so that is what we ship.

std::unique_ptr<PairEval> make_mz01(const PairParams& p, Exp width) {
  auto ev = std::make_unique<StreamPairEval>(width);
  const Monomial& B = p.base;
  Monomial k2a = p.k.pow(2) / p.a;
  ev->alphaStream_.emplace(width);
  ev->alphaStream_->num(B * p.a.pow(2) / p.k.pow(2), B).den(B, B).power(p.k / p.a);
  ev->betaStream_.emplace(width);
  ev->betaStream_->num(B * p.a / p.k, B)
      .num(p.k, B)
      .num(k2a, B, 2)
      .den(k2a, B)
      .den(B, B)
      .den(p.a * B, B, 2);
  return ev;
}

std::optional<std::string> constraints_mz01(const PairParams& p, long maxIdx) {
  const Monomial& B = p.base;
  Monomial k2a = p.k.pow(2) / p.a;
  for (long j = 0; j < maxIdx; ++j) {
    if (auto f = k2a * B.pow(j); f.e == 0 && f.c.is_one())
      return "(k^2/a;q)_n denominator vanishes";
  }
  for (long j = 0; j < 2 * maxIdx; ++j) {
    if (auto f = p.a * B.pow(j + 1); f.e == 0 && f.c.is_one())
      return "(aq;q)_{2n} denominator vanishes";
  }
  return std::nullopt;
}

// ---- Singh's pair ----
// alpha_n = (1-aq^{2n})/(1-a)
//           (a,r1,r2,a^2 q/(k r1 r2);q)_n /
//           ((q,aq/r1,aq/r2,k r1 r2/a;q)_n) (k/a)^n
// beta_n  = (k r1/a, k r2/a, k, aq/(r1 r2);q)_n /
//           ((aq/r1, aq/r2, k r1 r2/a, q;q)_n)

std::unique_ptr<PairEval> make_singh(const PairParams& p, Exp width) {
  if (!p.rho1 || !p.rho2)
    throw std::domain_error("singh pair requires rho1, rho2");
  const Monomial &B = p.base, &r1 = *p.rho1, &r2 = *p.rho2;
  auto ev = std::make_unique<StreamPairEval>(width);
  ev->alphaStream_.emplace(width);
  ev->alphaStream_->num(p.a, B)
      .num(r1, B)
      .num(r2, B)
      .num(p.a.pow(2) * B / (p.k * r1 * r2), B)
      .den(B, B)
      .den(p.a * B / r1, B)
      .den(p.a * B / r2, B)
      .den(p.k * r1 * r2 / p.a, B)
      .power(p.k / p.a)
      .term_num(p.a, B.pow(2))
      .term_den(p.a, Monomial::one());
  ev->betaStream_.emplace(width);
  ev->betaStream_->num(p.k * r1 / p.a, B)
      .num(p.k * r2 / p.a, B)
      .num(p.k, B)
      .num(p.a * B / (r1 * r2), B)
      .den(p.a * B / r1, B)
      .den(p.a * B / r2, B)
      .den(p.k * r1 * r2 / p.a, B)
      .den(B, B);
  return ev;
}

std::optional<std::string> constraints_singh(const PairParams& p, long maxIdx) {
  if (!p.rho1 || !p.rho2) return "singh pair requires rho1, rho2";
  if (p.a.e == 0 && p.a.c.is_one()) return "singh pair requires a != 1";
  const Monomial &B = p.base, &r1 = *p.rho1, &r2 = *p.rho2;
  const Monomial heads[] = {p.a * B / r1, p.a * B / r2, p.k * r1 * r2 / p.a};
  for (const auto& h : heads)
    for (long j = 0; j < maxIdx; ++j)
      if (auto f = h * B.pow(j); f.e == 0 && f.c.is_one())
        return "singh denominator symbol vanishes";
  return std::nullopt;
}

// ---- limit of Singh's pair at a=1, k=-1, rho1,rho2 -> infinity ----
// alpha_n = (1+q^n)(-1)^n q^{n(n-1)/2},  beta_n = (-1;q)_n q^{n(n-1)/2}/(q;q)_n

std::unique_ptr<PairEval> make_singh_limit(const PairParams& p, Exp width) {
  const Monomial B = p.base;
  auto ev = std::make_unique<StreamPairEval>(width);
  ev->alphaStream_.emplace(width);
  ev->alphaStream_->term_num(Monomial{Cyc(-1), 0}, B).power_fn([B](long n) {
    Monomial m = B.pow(n * (n - 1) / 2);
    return Monomial{m.c * Cyc(n % 2 == 0 ? 1 : -1), m.e};
  });
  ev->betaStream_.emplace(width);
  ev->betaStream_->num(Monomial{Cyc(-1), 0}, B).den(B, B).power_fn([B](long n) {
    return B.pow(n * (n - 1) / 2);
  });
  return ev;
}

std::optional<std::string> constraints_singh_limit(const PairParams& p, long) {
  if (!(p.a.e == 0 && p.a.c.is_one())) return "singh-limit is pinned to a = 1";
  if (!(p.k.e == 0 && p.k.c == Cyc(-1))) return "singh-limit is pinned to k = -1";
  return std::nullopt;
}

}  // namespace

const std::vector<WpPair>& all_pairs() {
  static const std::vector<WpPair> pairs = {
      {"trivial", "alpha = delta_{n,0}", &constraints_trivial, &make_trivial},
      {"unit", "beta = delta_{n,0}", &constraints_unit, &make_unit},
      {"pr4", "even-alpha pair with collapsed square-root factors",
       &constraints_pr4, &make_pr4},
      {"mz01", "pair with (k^2/a;q)_{2n}/(aq;q)_{2n} quotient",
       &constraints_mz01, &make_mz01},
      {"singh", "Singh's pair with free rho1, rho2", &constraints_singh,
       &make_singh},
      {"singh-limit", "rho -> infinity limit of Singh's pair at (1,-1)",
       &constraints_singh_limit, &make_singh_limit},
  };
  return pairs;
}

const WpPair& pair_by_id(const std::string& id) {
  for (const auto& p : all_pairs())
    if (p.id == id) return p;
  throw std::out_of_range("unknown pair id: " + id);
}

std::vector<LaurentSeries> wp_check(const WpPair& pair, const PairParams& p,
                                    long nMax, Exp N) {
  if (auto bad = pair.constraints(p, 2 * nMax + 2))
    throw std::domain_error("wp_check: " + *bad);
  Exp W = N + 24;
  auto ev = pair.make(p, W);
  std::vector<LaurentSeries> alphas, betas;
  for (long j = 0; j <= nMax; ++j) alphas.push_back(ev->alpha(j));
  for (long n = 0; n <= nMax; ++n) betas.push_back(ev->beta(n));
  const Monomial& B = p.base;
  Monomial ka = p.k / p.a;
  Monomial aB = p.a * B;
  std::vector<LaurentSeries> residuals;
  for (long n = 1; n <= nMax; ++n) {
    LaurentSeries sum = LaurentSeries::zero(N);
    for (long j = 0; j <= n; ++j) {
      if (alphas[j].is_zero()) continue;
      LaurentSeries t = poch(ka, B, n - j, W) * poch(p.k, B, n + j, W);
      t = t * poch(B, B, n - j, W).inverse(W);
      t = t * poch(aB, B, n + j, W).inverse(W);
      t = t * alphas[j];
      t.truncate_to(N);
      sum += t;
    }
    LaurentSeries res = betas[n].truncated(N) - sum;
    res.truncate_to(N);
    residuals.push_back(std::move(res));
  }
  return residuals;
}

}  // namespace qbailey
