#include "sunits.hpp"

#include <numeric>

namespace sunitgcd {

SUnit::SUnit(int sign, std::map<Integer, long> exponents, const PlaceSet& s)
    : sign_(sign) {
  if (sign != 1 && sign != -1)
    throw DomainError("S-unit sign must be +1 or -1");
  for (auto& [p, e] : exponents) {
    if (!s.contains_prime(p))
      throw DomainError("exponent key " + p.get_str() +
                        " is not a prime of " + s.str());
    if (e != 0) exponents_.emplace(p, e);
  }
}

SUnit SUnit::from_rational(const Rational& x, const PlaceSet& s,
                           const FactorConfig& cfg) {
  if (x == 0) throw DomainError("0 is not an S-unit");
  SUnit out;
  out.sign_ = x > 0 ? 1 : -1;
  for (const auto& [p, e] : factor(x.get_num(), cfg)) {
    if (!s.contains_prime(p))
      throw DomainError(p.get_str() + " not in " + s.str());
    out.exponents_[p] += e;
  }
  for (const auto& [p, e] : factor(x.get_den(), cfg)) {
    if (!s.contains_prime(p))
      throw DomainError(p.get_str() + " not in " + s.str());
    out.exponents_[p] -= e;
  }
  for (auto it = out.exponents_.begin(); it != out.exponents_.end();)
    it = (it->second == 0) ? out.exponents_.erase(it) : std::next(it);
  return out;
}

long SUnit::exponent_of(const Integer& p) const {
  auto it = exponents_.find(p);
  return it == exponents_.end() ? 0 : it->second;
}

Rational SUnit::value() const {
  Rational v(sign_);
  for (const auto& [p, e] : exponents_) v *= rational_pow(Rational(p), e);
  return v;
}

std::vector<SUnit> enumerate_sunits(const PlaceSet& s, long bound,
                                    SignMode signs) {
  if (bound < 0) throw DomainError("negative exponent bound");
  const auto& primes = s.primes();
  const std::size_t k = primes.size();
  std::vector<long> e(k, -bound);
  std::vector<SUnit> out;
  bool done = false;
  while (!done) {
    std::map<Integer, long> exps;
    for (std::size_t i = 0; i < k; ++i)
      if (e[i] != 0) exps[primes[i]] = e[i];
    out.emplace_back(1, exps, s);
    if (signs == SignMode::Both) out.emplace_back(-1, exps, s);
    // Odometer: last prime varies fastest, giving lexicographic order.
    done = true;
    for (std::size_t i = k; i-- > 0;) {
      if (e[i] < bound) {
        ++e[i];
        for (std::size_t j = i + 1; j < k; ++j) e[j] = -bound;
        done = false;
        break;
      }
    }
    if (k == 0) break;  // only the units +-1
  }
  return out;
}

MultiplicativeRelation canonical_relation(long p, long q, const Rational& w) {
  SGC_CHECK_MSG(p != 0 || q != 0, "relation direction must be nonzero");
  SGC_CHECK_MSG(std::gcd(p, q) == 1, "relation direction must be primitive");
  if (p < 0 || (p == 0 && q < 0)) {
    if (w == 0) throw DomainError("relation constant must be nonzero");
    return MultiplicativeRelation{-p, -q, 1 / w};
  }
  return MultiplicativeRelation{p, q, w};
}

std::optional<MultiplicativeRelation> dependence(const SUnit& u,
                                                 const SUnit& v) {
  if (u.exponents().empty())  // u = +-1: the pair lies on {U = u}
    return canonical_relation(1, 0, Rational(u.sign()));
  if (v.exponents().empty())
    return canonical_relation(0, 1, Rational(v.sign()));
  // Union of involved primes; find primitive (a,b) with a*e_u + b*e_v = 0.
  std::vector<Integer> primes;
  for (const auto& [p, e] : u.exponents()) primes.push_back(p);
  for (const auto& [p, e] : v.exponents()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  long a = 0, b = 0;
  for (const Integer& p : primes) {
    long eu = u.exponent_of(p), ev = v.exponent_of(p);
    if (eu == 0 && ev == 0) continue;
    long g = std::gcd(ev, eu);
    a = ev / g;
    b = -eu / g;
    break;
  }
  for (const Integer& p : primes)
    if (a * u.exponent_of(p) + b * v.exponent_of(p) != 0) return std::nullopt;
  Rational w(u.sign() == -1 && (a % 2 != 0) ? -1 : 1);
  if (v.sign() == -1 && (b % 2 != 0)) w = -w;
  return canonical_relation(a, b, w);
}

std::optional<MultiplicativeRelation> rational_dependence(
    const Rational& u, const Rational& v, const FactorConfig& cfg) {
  if (u == 0 || v == 0)
    throw DomainError("dependence test requires u, v != 0");
  std::vector<Integer> primes;
  for (const Rational* x : {&u, &v}) {
    for (const auto& [p, e] : factor(x->get_num(), cfg)) primes.push_back(p);
    for (const auto& [p, e] : factor(x->get_den(), cfg)) primes.push_back(p);
  }
  PlaceSet s(primes);
  return dependence(SUnit::from_rational(u, s, cfg),
                    SUnit::from_rational(v, s, cfg));
}

bool on_subtorus(const Rational& u, const Rational& v,
                 const MultiplicativeRelation& rel) {
  if (u == 0 || v == 0) throw DomainError("subtorus test requires u, v != 0");
  return rational_pow(u, rel.p) * rational_pow(v, rel.q) == rel.w;
}

Parametrization parametrize(const Rational& u, const Rational& v,
                            const MultiplicativeRelation& rel,
                            const FactorConfig& cfg) {
  if (!on_subtorus(u, v, rel))
    throw DomainError("point does not lie on the given subtorus");
  Parametrization out;
  out.p = rel.p;
  out.q = rel.q;
  if (rel.q == 0) {
    // Axis relation u^p = w with p = 1: u is pinned, v is free; t := v.
    if (u != 1)
      throw DomainError("no rational parametrization: t^0 cannot equal " +
                        format_rational(u));
    out.t = v;
  } else {
    if (rel.q % 2 == 0 && u < 0)
      throw DomainError("no rational " + std::to_string(rel.q) +
                        "-th root of " + format_rational(u));
    Rational t_mag = 1;
    for (const auto& [p, e] : factor(u.get_num(), cfg)) {
      if (e % rel.q != 0)
        throw DomainError("no rational " + std::to_string(rel.q) +
                          "-th root of " + format_rational(u));
      t_mag *= rational_pow(Rational(p), e / rel.q);
    }
    for (const auto& [p, e] : factor(u.get_den(), cfg)) {
      if (e % rel.q != 0)
        throw DomainError("no rational " + std::to_string(rel.q) +
                          "-th root of " + format_rational(u));
      t_mag *= rational_pow(Rational(p), -e / rel.q);
    }
    out.t = (rel.q % 2 != 0 && u < 0) ? -t_mag : t_mag;
  }
  out.wbar = v * rational_pow(out.t, rel.p);
  SGC_CHECK(rational_pow(out.t, rel.q) == u || rel.q == 0);
  SGC_CHECK(out.wbar * rational_pow(out.t, -rel.p) == v);
  return out;
}

}  // namespace sunitgcd
