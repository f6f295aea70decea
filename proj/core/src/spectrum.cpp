#include "ospec/spectrum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ospec::spectra {

namespace {

std::vector<Int> antichain(const std::vector<Int>& values) {
  std::set<Int> uniq(values.begin(), values.end());
  std::vector<Int> out;
  for (const Int& a : uniq) {
    bool maximal = true;
    for (const Int& b : uniq) {
      if (a != b && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;  // std::set iteration is already ascending
}

}  // namespace

Spectrum Spectrum::from_orders(const std::vector<Int>& orders) {
  if (orders.empty())
    throw std::invalid_argument("Spectrum::from_orders: empty order set");
  for (const Int& n : orders) {
    if (n < 1)
      throw std::invalid_argument("Spectrum::from_orders: orders must be >= 1");
  }
  Spectrum s;
  s.mu_ = antichain(orders);
  return s;
}

bool Spectrum::contains(const Int& n) const {
  if (n < 1) return false;
  for (const Int& m : mu_) {
    if (mpz_divisible_p(m.get_mpz_t(), n.get_mpz_t())) return true;
  }
  return false;
}

Spectrum product(const Spectrum& s1, const Spectrum& s2) {
  std::vector<Int> lcms;
  lcms.reserve(s1.mu_.size() * s2.mu_.size());
  for (const Int& a : s1.mu_) {
    for (const Int& b : s2.mu_) {
      Int l;
      mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      lcms.push_back(l);
    }
  }
  return Spectrum::from_orders(lcms);
}

Spectrum Spectrum::power(unsigned long k) const {
  if (k == 0) throw std::invalid_argument("Spectrum::power: k >= 1");
  // lcms over multisets of <= k members depend only on the underlying
  // subsets, so the result is constant from k = |mu| on.
  k = std::min<unsigned long>(k, mu_.size());
  Spectrum acc = *this;
  for (unsigned long step = 1; step < k; ++step) acc = product(acc, *this);
  return acc;
}

bool replacement_hypotheses(const Spectrum& g, const Spectrum& h,
                            unsigned long k) {
  if (k == 0) throw std::invalid_argument("replacement_hypotheses: k >= 1");
  std::set<Int> gm(g.mu().begin(), g.mu().end());
  unsigned long missing = gm.size();
  for (const Int& x : h.mu()) {
    if (!gm.count(x)) return false;  // mu(H) not a subset of mu(G)
    --missing;
  }
  return missing < k;
}

}  // namespace ospec::spectra
