#pragma once

#include <gmpxx.h>

#include <vector>

namespace ospec::spectra {

using Int = mpz_class;

// The set of element orders of a finite group, stored as its antichain
// of divisibility-maximal members (ascending). Membership of n means
// "n divides some stored member"; the full divisor-closed set is never
// materialized.
class Spectrum {
 public:
  // Normalizes an arbitrary nonempty collection of orders: keeps the
  // members maximal under divisibility, sorted ascending.
  static Spectrum from_orders(const std::vector<Int>& orders);

  const std::vector<Int>& mu() const noexcept { return mu_; }

  bool contains(const Int& n) const;

  // Spectrum of a direct product: maximal lcm(a, b) over member pairs.
  friend Spectrum product(const Spectrum& s1, const Spectrum& s2);

  // Spectrum of the k-th direct power (k >= 1). Stabilizes once k
  // reaches the antichain size.
  Spectrum power(unsigned long k) const;

  bool operator==(const Spectrum& other) const { return mu_ == other.mu_; }
  bool operator!=(const Spectrum& other) const { return !(*this == other); }

 private:
  Spectrum() = default;
  std::vector<Int> mu_;
};

Spectrum product(const Spectrum& s1, const Spectrum& s2);

// Hypotheses of the direct-power replacement step: mu(H) is contained
// in mu(G) and fewer than k members of mu(G) are missing from mu(H).
// When they hold, G^k and G^(k-1) x H have equal spectra.
bool replacement_hypotheses(const Spectrum& g, const Spectrum& h,
                            unsigned long k);

}  // namespace ospec::spectra
