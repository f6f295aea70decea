#include "ospec/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <optional>

namespace ospec::numtheory {

EffortExceeded::EffortExceeded(Int cofactor, std::uint64_t budget)
    : std::runtime_error("factoring effort exceeded (" +
                         std::to_string(budget) + " rho iterations) on cofactor " +
                         cofactor.get_str()),
      cofactor_(std::move(cofactor)) {}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : entries_) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

std::vector<Int> Factorization::primes() const {
  std::vector<Int> out;
  out.reserve(entries_.size());
  for (const auto& [p, e] : entries_) out.push_back(p);
  return out;
}

unsigned Factorization::exponent(const Int& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

void Factorization::mul_prime(const Int& p, unsigned e) {
  if (e == 0) return;
  entries_[p] += e;
}

std::string Factorization::to_string() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : entries_) {
    if (!s.empty()) s += " * ";
    s += p.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

std::vector<std::uint32_t> sieve_primes(std::uint32_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t m = std::uint64_t(p) * p; m <= bound; m += p)
      composite[m] = true;
  }
  return primes;
}

// ---- 64-bit lane: deterministic Miller-Rabin and Brent rho ----

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// The first 12 primes are a valid witness set for every 64-bit integer.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

// Brent's cycle rho. n must be odd composite with no tiny factors.
// Deterministic: the increment c walks 1,2,3,... until a factor splits.
std::uint64_t rho_u64(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = addmod_u64(mulmod_u64(y, y, n), c, n);
      for (std::uint64_t k = 0; k < r && g == 1; k += 128) {
        ys = y;
        std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = addmod_u64(mulmod_u64(y, y, n), c, n);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = addmod_u64(mulmod_u64(ys, ys, n), c, n);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_u64_into(std::uint64_t n, Factorization& out) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                          47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    if (p * p > n) break;
    unsigned e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.mul_prime(Int(static_cast<unsigned long>(p)), e);
  }
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.mul_prime(Int(static_cast<unsigned long>(n)), 1);
    return;
  }
  std::uint64_t d = rho_u64(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

// ---- arbitrary-precision lane ----

// Deterministic below this bound with the 13 prime bases 2..41
// (Sorenson-Webster). Larger inputs get 25 bases and the result is a
// strong probable prime.
const Int& mr_deterministic_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

bool miller_rabin_mpz(const Int& n) {
  static const unsigned bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                   29, 31, 37, 41, 43, 47, 53, 59, 61,
                                   67, 71, 73, 79, 83, 89, 97};
  const size_t nbases = n < mr_deterministic_bound() ? 13 : 25;
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int nm1 = n - 1;
  for (size_t bi = 0; bi < nbases; ++bi) {
    Int a(bases[bi]);
    if (mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t())) return n == a;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent rho over mpz with an iteration budget shared across restarts.
std::optional<Int> rho_mpz(const Int& n, std::uint64_t budget) {
  std::uint64_t used = 0;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, q = 1, g = 1, x, ys;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += 128) {
        ys = y;
        std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        used += lim;
        if (used > budget) return std::nullopt;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int t = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        if (++used > budget) return std::nullopt;
      }
    }
    if (g != n) return g;
  }
}

void factor_mpz_into(const Int& n, Factorization& out, const Effort& effort) {
  if (n == 1) return;
  if (n.fits_ulong_p()) {
    factor_u64_into(n.get_ui(), out);
    return;
  }
  if (miller_rabin_mpz(n)) {
    out.mul_prime(n, 1);
    return;
  }
  auto d = rho_mpz(n, effort.rho_iterations);
  if (!d) throw EffortExceeded(n, effort.rho_iterations);
  factor_mpz_into(*d, out, effort);
  factor_mpz_into(n / *d, out, effort);
}

std::mutex g_cache_mutex;
std::map<Int, Factorization>& factor_cache() {
  static std::map<Int, Factorization> cache;
  return cache;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve_primes(kTrialBound);
  return primes;
}

Factorization factorize(const Int& n, const Effort& effort) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = factor_cache().find(n);
    if (it != factor_cache().end()) return it->second;
  }

  Factorization out;
  if (n.fits_ulong_p()) {
    factor_u64_into(n.get_ui(), out);
  } else {
    Int rest = n;
    for (std::uint32_t p : small_primes()) {
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(),
                                     Int(p).get_mpz_t());
        out.mul_prime(Int(p), static_cast<unsigned>(e));
        if (rest == 1) break;
      }
    }
    factor_mpz_into(rest, out, effort);
  }

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  factor_cache().try_emplace(n, out);
  return out;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  // Even or tiny-factor quick exits keep the base loop honest.
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return miller_rabin_mpz(n);
}

unsigned long valuation(const Int& a, const Int& r) {
  if (a < 1) throw std::invalid_argument("valuation: a must be >= 1");
  if (!is_prime(r)) throw std::invalid_argument("valuation: r must be prime");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
}

Int r_part(const Int& a, const Int& r) {
  unsigned long v = valuation(a, r);
  Int pe;
  mpz_pow_ui(pe.get_mpz_t(), r.get_mpz_t(), v);
  return pe;
}

Int r_prime_part(const Int& a, const Int& r) { return a / r_part(a, r); }

namespace {
Int pow_int(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}
}  // namespace

Int gcd_pow_minus(const Int& a, unsigned long i, unsigned long j) {
  if (abs(a) <= 1) throw std::invalid_argument("gcd_pow_minus: |a| must be > 1");
  if (i == 0 || j == 0) throw std::invalid_argument("gcd_pow_minus: i, j >= 1");
  return abs(pow_int(a, std::gcd(i, j)) - 1);
}

Int gcd_pow_mixed(const Int& a, unsigned long i, unsigned long j) {
  if (abs(a) <= 1) throw std::invalid_argument("gcd_pow_mixed: |a| must be > 1");
  if (i == 0 || j == 0) throw std::invalid_argument("gcd_pow_mixed: i, j >= 1");
  const int vi = std::countr_zero(i), vj = std::countr_zero(j);
  if (vi <= vj) {
    Int g;
    Int am1 = a - 1;
    Int two = 2;
    mpz_gcd(g.get_mpz_t(), two.get_mpz_t(), am1.get_mpz_t());
    return g;
  }
  return abs(pow_int(a, std::gcd(i, j)) + 1);
}

namespace {
int mobius(unsigned long n) {
  Factorization f = factorize(Int(n));
  int m = 1;
  for (const auto& [p, e] : f.entries()) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}
}  // namespace

Int cyclotomic_value(unsigned long i, const Int& a) {
  if (i == 0) throw std::invalid_argument("cyclotomic_value: i >= 1");
  if (a <= 1) throw std::invalid_argument("cyclotomic_value: a > 1");
  std::vector<unsigned long> divisors;
  for (unsigned long d = 1; d * d <= i; ++d) {
    if (i % d == 0) {
      divisors.push_back(d);
      if (d != i / d) divisors.push_back(i / d);
    }
  }
  Int num = 1, den = 1;
  for (unsigned long d : divisors) {
    switch (mobius(i / d)) {
      case 1:
        num *= pow_int(a, d) - 1;
        break;
      case -1:
        den *= pow_int(a, d) - 1;
        break;
      default:
        break;
    }
  }
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::vector<Int> primitive_prime_divisors(const Int& a, unsigned long i,
                                          const Effort& effort) {
  if (a <= 1) throw std::invalid_argument("primitive_prime_divisors: a > 1");
  if (i <= 1) throw std::invalid_argument("primitive_prime_divisors: i > 1");
  // A prime with multiplicative order exactly i divides the cyclotomic
  // part of a^i - 1, so only that part needs factoring.
  Factorization phi = factorize(cyclotomic_value(i, a), effort);
  Factorization fi = factorize(Int(i));
  std::vector<Int> out;
  for (const Int& r : phi.primes()) {
    if (mod_pow(a, Int(i), r) != 1) continue;
    bool primitive = true;
    for (const Int& p : fi.primes()) {
      unsigned long sub = i / p.get_ui();
      if (mod_pow(a, Int(sub), r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) out.push_back(r);
  }
  return out;
}

Int mod_pow(const Int& a, const Int& e, const Int& m) {
  if (m < 2) throw std::invalid_argument("mod_pow: m >= 2");
  if (e < 0) throw std::invalid_argument("mod_pow: e >= 0");
  Int r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace ospec::numtheory
