#include "ospec/catalog.hpp"

#include <set>
#include <stdexcept>

namespace ospec::catalog {

namespace nt = ospec::numtheory;

const char* family_name(Family f) {
  switch (f) {
    case Family::L2: return "L2";
    case Family::Ree: return "Ree";
    case Family::J1: return "J1";
    case Family::Alt5: return "Alt5";
    case Family::Dihedral: return "Dihedral";
  }
  return "?";
}

GroupSpec GroupSpec::l2(const Int& q) {
  if (q <= 3) throw std::invalid_argument("L2(q): q must be > 3");
  nt::Factorization f = nt::factorize(q);
  if (f.entries().size() != 1)
    throw std::invalid_argument("L2(q): q must be a prime power");
  GroupSpec g{};
  g.family = Family::L2;
  g.q = q;
  g.p = f.entries().begin()->first;
  return g;
}

GroupSpec GroupSpec::ree(const Int& q) {
  if (q < 27) throw std::invalid_argument("Ree(q): q = 3^alpha with odd alpha >= 3");
  Int rest = q;
  unsigned long alpha = mpz_remove(rest.get_mpz_t(), q.get_mpz_t(), Int(3).get_mpz_t());
  if (rest != 1 || alpha % 2 == 0)
    throw std::invalid_argument("Ree(q): q = 3^alpha with odd alpha >= 3");
  return ree_alpha(static_cast<unsigned>(alpha));
}

GroupSpec GroupSpec::ree_alpha(unsigned alpha) {
  if (alpha < 3 || alpha % 2 == 0)
    throw std::invalid_argument("Ree(q): alpha must be odd and >= 3");
  GroupSpec g{};
  g.family = Family::Ree;
  g.alpha = alpha;
  mpz_ui_pow_ui(g.q.get_mpz_t(), 3, alpha);
  g.p = 3;
  return g;
}

GroupSpec GroupSpec::j1() {
  GroupSpec g{};
  g.family = Family::J1;
  return g;
}

GroupSpec GroupSpec::alt5() {
  GroupSpec g{};
  g.family = Family::Alt5;
  return g;
}

GroupSpec GroupSpec::dihedral(unsigned long n) {
  if (n < 3) throw std::invalid_argument("Dihedral: n >= 3");
  GroupSpec g{};
  g.family = Family::Dihedral;
  g.n = n;
  return g;
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::L2: return std::string("L2(") + q.get_str() + ")";
    case Family::Ree: return std::string("2G2(") + q.get_str() + ")";
    case Family::J1: return "J1";
    case Family::Alt5: return "Alt5";
    case Family::Dihedral: return "D" + std::to_string(2 * n);
  }
  return "?";
}

Int ree_sqrt3q(unsigned alpha) {
  if (alpha % 2 == 0) throw std::invalid_argument("ree_sqrt3q: alpha must be odd");
  Int s;
  mpz_ui_pow_ui(s.get_mpz_t(), 3, (alpha + 1) / 2);
  return s;
}

spectra::Spectrum mu(const GroupSpec& g) {
  using spectra::Spectrum;
  switch (g.family) {
    case Family::L2: {
      Int d = (g.q % 2 == 1) ? 2 : 1;
      return Spectrum::from_orders({g.p, (g.q - 1) / d, (g.q + 1) / d});
    }
    case Family::Ree: {
      Int s = ree_sqrt3q(g.alpha);
      return Spectrum::from_orders(
          {Int(6), Int(9), g.q - 1, (g.q + 1) / 2, g.q - s + 1, g.q + s + 1});
    }
    case Family::J1:
      return Spectrum::from_orders({Int(6), Int(7), Int(10), Int(11), Int(15), Int(19)});
    case Family::Alt5:
      return Spectrum::from_orders({Int(2), Int(3), Int(5)});
    case Family::Dihedral:
      // Rotations of order dividing n, reflections of order 2.
      return Spectrum::from_orders({Int(2), Int(g.n)});
  }
  throw std::logic_error("mu: unknown family");
}

Int order(const GroupSpec& g) {
  switch (g.family) {
    case Family::L2: {
      Int d = (g.q % 2 == 1) ? 2 : 1;
      return g.q * (g.q * g.q - 1) / d;
    }
    case Family::Ree: {
      Int q3 = g.q * g.q * g.q;
      return q3 * (g.q - 1) * (q3 + 1);
    }
    case Family::J1:
      return Int(175560);
    case Family::Alt5:
      return Int(60);
    case Family::Dihedral:
      return Int(2 * g.n);
  }
  throw std::logic_error("order: unknown family");
}

unsigned out_order(const GroupSpec& g) {
  if (g.family != Family::Ree)
    throw std::invalid_argument("out_order: only provided for the Ree family");
  return g.alpha;
}

namespace {

void insert_primes_of(const Int& n, std::set<Int>& into, const Effort& effort) {
  for (const Int& p : nt::factorize(n, effort).primes()) into.insert(p);
}

}  // namespace

std::vector<Int> pi(const GroupSpec& g, const Effort& effort) {
  std::set<Int> primes;
  switch (g.family) {
    case Family::L2:
      primes.insert(g.p);
      insert_primes_of(g.q - 1, primes, effort);
      insert_primes_of(g.q + 1, primes, effort);
      break;
    case Family::Ree: {
      // q^3 + 1 = (q+1)(q-s+1)(q+s+1); factoring the pieces keeps each
      // cofactor near q instead of q^3.
      Int s = ree_sqrt3q(g.alpha);
      primes.insert(Int(3));
      insert_primes_of(g.q - 1, primes, effort);
      insert_primes_of(g.q + 1, primes, effort);
      insert_primes_of(g.q - s + 1, primes, effort);
      insert_primes_of(g.q + s + 1, primes, effort);
      break;
    }
    default:
      insert_primes_of(order(g), primes, effort);
      break;
  }
  return {primes.begin(), primes.end()};
}

bool divides_ree_order(const Int& r, unsigned long p) {
  if (!nt::is_prime(r)) throw std::invalid_argument("divides_ree_order: r must be prime");
  if (p < 5 || p % 2 == 0 || !nt::is_prime(Int(p)))
    throw std::invalid_argument("divides_ree_order: p must be an odd prime >= 5");
  if (r == 3) return true;
  if (nt::mod_pow(3, Int(p), r) == 1) return true;          // r | q - 1
  return nt::mod_pow(3, Int(3 * p), r) == r - 1;            // r | q^3 + 1
}

bool has_abelian_sylow2(const GroupSpec& g) {
  switch (g.family) {
    case Family::L2: {
      if (g.q % 2 == 0) return true;
      Int m = g.q % 8;
      return m == 3 || m == 5;
    }
    case Family::Ree:
    case Family::J1:
    case Family::Alt5:
      return true;
    case Family::Dihedral:
      // Sylow 2-subgroup of D_{2n} is dihedral of order 2*(n)_2.
      return g.n % 4 != 0;
  }
  throw std::logic_error("has_abelian_sylow2: unknown family");
}

bool self_check() {
  GroupSpec j = GroupSpec::j1();
  Int expected = Int(8) * 3 * 5 * 7 * 11 * 19;
  if (order(j) != expected) return false;
  std::set<Int> mu_primes;
  const spectra::Spectrum spectrum = mu(j);
  for (const Int& m : spectrum.mu())
    for (const Int& p : nt::factorize(m).primes()) mu_primes.insert(p);
  std::vector<Int> order_primes = pi(j);
  return std::vector<Int>(mu_primes.begin(), mu_primes.end()) == order_primes;
}

}  // namespace ospec::catalog
