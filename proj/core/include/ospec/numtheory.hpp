#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospec::numtheory {

using Int = mpz_class;

// Thrown when the rho stage of factorize() runs out of budget. The
// unfactored composite cofactor is carried along so callers can report
// exactly which piece of a computation is incomplete.
class EffortExceeded : public std::runtime_error {
 public:
  EffortExceeded(Int cofactor, std::uint64_t budget);
  const Int& cofactor() const noexcept { return cofactor_; }

 private:
  Int cofactor_;
};

// Factoring budget. Trial division always runs over the full prime
// table below 10^6; the rho iteration count is what can be exhausted.
struct Effort {
  std::uint64_t rho_iterations = 4'000'000;
};

// Multiset of prime factors of a positive integer, stored as an
// ascending prime -> exponent map. An empty map is the factorization
// of 1. Every key is prime and every exponent is >= 1.
class Factorization {
 public:
  Factorization() = default;

  const std::map<Int, unsigned>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  // Multiplies the map back together.
  Int value() const;

  std::vector<Int> primes() const;
  bool has_prime(const Int& p) const { return entries_.count(p) != 0; }
  unsigned exponent(const Int& p) const;

  // Merges p^e into the map. p must be prime (not rechecked here).
  void mul_prime(const Int& p, unsigned e);

  std::string to_string() const;

 private:
  std::map<Int, unsigned> entries_;
};

// Primes below 10^6, sieved once on first use.
const std::vector<std::uint32_t>& small_primes();

// Complete prime factorization of n >= 1. Trial division to 10^6, then
// Miller-Rabin plus Brent's rho with deterministic restarts. Throws
// EffortExceeded instead of ever returning a partial answer. Results
// are cached process-wide.
Factorization factorize(const Int& n, const Effort& effort = {});

// Deterministic for n < 3.3*10^24 (strong-pseudoprime test with the 13
// prime bases 2..41, valid below 3317044064679887385961981). Above that
// bound the same test runs with 25 fixed prime bases and is a strong
// probable-prime test.
bool is_prime(const Int& n);

// Largest e with r^e | a (a >= 1, r prime).
unsigned long valuation(const Int& a, const Int& r);

// (a)_r: the largest power of the prime r dividing a.
Int r_part(const Int& a, const Int& r);

// (a)_{r'} = a / (a)_r.
Int r_prime_part(const Int& a, const Int& r);

// gcd(a^i - 1, a^j - 1) via the closed form a^gcd(i,j) - 1, |a| > 1.
Int gcd_pow_minus(const Int& a, unsigned long i, unsigned long j);

// gcd(a^i - 1, a^j + 1) via the closed form: gcd(2, a-1) when the
// 2-part of i is at most the 2-part of j, else a^gcd(i,j) + 1.
Int gcd_pow_mixed(const Int& a, unsigned long i, unsigned long j);

// The value of the i-th cyclotomic polynomial at a (a > 1, i >= 1).
Int cyclotomic_value(unsigned long i, const Int& a);

// All primes r dividing a^i - 1 but no a^j - 1 with 1 <= j < i, for
// a > 1, i > 1. Only the cyclotomic part of a^i - 1 is factored; every
// primitive prime divides it. Ascending order.
std::vector<Int> primitive_prime_divisors(const Int& a, unsigned long i,
                                          const Effort& effort = {});

// a^e mod m for m >= 2, result in [0, m).
Int mod_pow(const Int& a, const Int& e, const Int& m);

}  // namespace ospec::numtheory
