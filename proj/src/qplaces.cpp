#include "qplaces.hpp"

#include <algorithm>

namespace sunitgcd {
namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;  // primes below this

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> sieve(kTrialDivisionBound, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < kTrialDivisionBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kTrialDivisionBound; j += i)
        sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Miller-Rabin witness check: returns true when `a` proves n composite.
bool mr_witness(const Integer& n, const Integer& a) {
  if (a % n == 0) return false;
  Integer d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 0; i + 1 < r; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n - 1) return false;
  }
  return true;
}

// Pollard rho (Brent variant) with deterministic parameter sequence.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    Integer saved_x;
    unsigned long power = 1, lam = 0;
    auto step = [&](Integer& v) {
      v = (v * v + c) % n;
    };
    saved_x = x;
    while (d == 1) {
      if (lam == power) {
        saved_x = y;
        power *= 2;
        lam = 0;
      }
      step(y);
      ++lam;
      Integer diff = saved_x > y ? saved_x - y : y - saved_x;
      if (diff == 0) break;  // cycle without factor; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_recurse(const Integer& n, const FactorConfig& cfg,
                    std::vector<Integer>& primes_out) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes_out.push_back(n);
    return;
  }
  if (n > cfg.bailout)
    throw FactorBailout(n, "factorization bail-out: composite cofactor " +
                               n.get_str() + " exceeds bound " +
                               cfg.bailout.get_str());
  Integer d = pollard_rho(n);
  factor_recurse(d, cfg, primes_out);
  factor_recurse(n / d, cfg, primes_out);
}

}  // namespace

Place Place::finite(const Integer& p) {
  if (p < 2 || !is_prime(p))
    throw DomainError("finite place requires a prime, got " + p.get_str());
  return Place{false, p};
}

PlaceSet::PlaceSet(std::vector<Integer> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (const Integer& p : primes_)
    if (p < 2 || !is_prime(p))
      throw DomainError("place set member is not prime: " + p.get_str());
}

bool PlaceSet::contains_prime(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::vector<Place> PlaceSet::places() const {
  std::vector<Place> out;
  out.push_back(Place::infinity());
  for (const Integer& p : primes_) out.push_back(Place{false, p});
  return out;
}

std::string PlaceSet::str() const {
  std::string s = "{inf";
  for (const Integer& p : primes_) s += "," + p.get_str();
  return s + "}";
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                          29ul, 31ul, 37ul}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // The first 13 primes form a deterministic Miller-Rabin base set for all
  // n < 3.3e24 (far beyond the factorization bail-out default).
  static const Integer kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) {
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                            29ul, 31ul, 37ul, 41ul}) {
      if (mr_witness(n, Integer(a))) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw DomainError("valuation of zero is undefined");
  if (p < 2 || !is_prime(p))
    throw DomainError("valuation requires a prime, got " + p.get_str());
  Integer tmp;
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

Rational abs_at(const Rational& x, const Place& place) {
  if (place.archimedean) return abs_rational(x);
  if (x == 0) return Rational(0);
  long v = valuation(x, place.prime);
  return rational_pow(Rational(place.prime), -v);
}

std::vector<std::pair<Integer, long>> factor(const Integer& n,
                                             const FactorConfig& cfg) {
  if (n == 0) throw DomainError("factor(0) is undefined");
  Integer m = abs(n);
  std::vector<std::pair<Integer, long>> out;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      Integer rest;
      long e = static_cast<long>(
          mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), Integer(p).get_mpz_t()));
      out.emplace_back(Integer(p), e);
      m = rest;
    }
    // Stop early once p*p exceeds the remaining cofactor (it is prime then).
    if (Integer(p) * Integer(p) > m && m != 1) {
      out.emplace_back(m, 1);
      m = 1;
      break;
    }
  }
  if (m != 1) {
    std::vector<Integer> rest;
    factor_recurse(m, cfg, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      out.emplace_back(rest[i], static_cast<long>(j - i));
      i = j;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

ProductFormulaWitness product_formula_check(const Rational& x,
                                            const FactorConfig& cfg) {
  if (x == 0) throw DomainError("product formula requires x != 0");
  ProductFormulaWitness w;
  w.finite_part = 1;
  for (const auto& [p, e] : factor(x.get_num(), cfg))
    w.finite_part *= rational_pow(Rational(p), -e);
  for (const auto& [p, e] : factor(x.get_den(), cfg))
    w.finite_part *= rational_pow(Rational(p), e);
  SGC_CHECK_MSG(w.finite_part == make_rational(x.get_den(), abs(x.get_num())),
                "finite product must equal den/|num|");
  w.archimedean_part = abs_rational(x);
  w.total = w.finite_part * w.archimedean_part;
  w.holds = (w.total == 1);
  return w;
}

}  // namespace sunitgcd
