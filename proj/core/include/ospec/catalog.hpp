#pragma once

#include "ospec/numtheory.hpp"
#include "ospec/spectrum.hpp"

#include <string>
#include <vector>

namespace ospec::catalog {

using numtheory::Effort;
using numtheory::Int;

enum class Family { L2, Ree, J1, Alt5, Dihedral };

const char* family_name(Family f);

// Descriptor of one group from the built-in families. Construct through
// the named factories; they validate the parameter constraints
// (L2: q a prime power > 3; Ree: q = 3^alpha, alpha odd >= 3;
// Dihedral(n) is the group of order 2n, n >= 3).
struct GroupSpec {
  Family family;
  Int q;           // L2, Ree
  Int p;           // L2: characteristic (derived)
  unsigned alpha;  // Ree: q = 3^alpha (derived)
  unsigned long n; // Dihedral

  static GroupSpec l2(const Int& q);
  static GroupSpec ree(const Int& q);
  static GroupSpec ree_alpha(unsigned alpha);
  static GroupSpec j1();
  static GroupSpec alt5();
  static GroupSpec dihedral(unsigned long n);

  std::string to_string() const;
};

// 3^((alpha+1)/2), the exact square root of 3q for q = 3^alpha, alpha odd.
Int ree_sqrt3q(unsigned alpha);

// Antichain of maximal element orders.
spectra::Spectrum mu(const GroupSpec& g);

// Exact group order.
Int order(const GroupSpec& g);

// Order of the outer automorphism group; defined for the Ree family only.
unsigned out_order(const GroupSpec& g);

// Primes dividing the group order, ascending. Factors the order through
// its closed-form pieces, so a factoring-effort error names the piece.
std::vector<Int> pi(const GroupSpec& g, const Effort& effort = {});

// Whether the prime r divides |Ree(3^p)| for an odd prime exponent
// p >= 5, decided by modular exponentiation alone: r = 3, or
// 3^p = 1 (mod r), or 3^(3p) = -1 (mod r).
bool divides_ree_order(const Int& r, unsigned long p);

// Sylow 2-subgroups of L2(q) are abelian exactly for q = 3, 5 (mod 8)
// or q even. Defined for every family for completeness.
bool has_abelian_sylow2(const GroupSpec& g);

// Rechecks the compiled-in J1 constants: order = 2^3*3*5*7*11*19 and
// the primes of mu(J1) equal the primes of the order.
bool self_check();

}  // namespace ospec::catalog
