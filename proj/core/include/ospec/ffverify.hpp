#pragma once

#include "ospec/fq_matrix.hpp"
#include "ospec/numtheory.hpp"
#include "ospec/spectrum.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace ospec::ffverify {

// Image of a determinant-1 2x2 matrix on the 4-dimensional module
// V (x) V^(3): the Kronecker product of A with its entrywise Frobenius
// cube. A and -A have the same image.
FqMatrix phi(const FqMatrix& a);

// The matrix group M = phi(SL2(q)) x <-I4> inside GL4(q) acting on the
// module W = F_q^4, for q = 3^alpha, alpha odd >= 3. Construction
// confirms computationally that -I4 is not an image of phi; a positive
// finding would throw FalsifiedError.
class ModuleGroup {
 public:
  explicit ModuleGroup(const Gf3Field& field);

  const Gf3Field& field() const noexcept { return *field_; }
  std::uint64_t size() const noexcept { return sl2_size_; }  // |M| = q(q^2-1)
  std::uint64_t sl2_size() const noexcept { return sl2_size_; }

  // Indexable enumeration of SL2(q), index in [0, q^3 - q).
  FqMatrix sl2_element(std::uint64_t index) const;

  // Exactly one of {A, -A} is canonical, so the canonical matrices
  // enumerate phi's domain without kernel duplicates.
  bool sl2_canonical(const FqMatrix& a) const;

  // +-phi(R) over class representatives R of SL2(q): identity, the two
  // unipotent classes, the split torus diag(g^e, g^-e), and companion
  // matrices of the irreducible x^2 - tx + 1 for the nonsplit torus.
  // Covers every conjugacy class of M (some classes repeat).
  std::vector<FqMatrix> class_representatives() const;

 private:
  const Gf3Field* field_;
  std::uint64_t sl2_size_;
};

// Factored exponent of GL4(q): 3^2 * lcm(q^d - 1, d = 1..4). Cached per
// field degree. Every invertible 4x4 order divides it.
const numtheory::Factorization& gl4_exponent(const Gf3Field& field);

// Least k >= 1 with a^k = I, by prime-by-prime descent from a factored
// multiple of the order. The default bound is the GL4(q) exponent (the
// matrix must be 4x4 for that overload).
mpz_class element_order(const FqMatrix& a);
mpz_class element_order(const FqMatrix& a,
                        const numtheory::Factorization& exponent_bound);

// Sizes of the Jordan blocks with eigenvalue 1, descending (empty when
// 1 is not an eigenvalue), from the rank sequence of (A - I)^j.
std::vector<unsigned> unipotent_block_sizes(const FqMatrix& a);

// I + A + ... + A^(k-1).
FqMatrix coset_translation_sum(const FqMatrix& a, std::uint64_t k);

// Whether the coset W*a of the semidirect product W x| M contains an
// element of order 3k, where k = element_order(a): true exactly when
// the largest eigenvalue-1 Jordan block has size (k)_3. The equivalent
// criterion coset_translation_sum(a, k) != 0 is recomputed every call;
// disagreement would throw FalsifiedError.
bool coset_has_order_pk(const FqMatrix& a, std::uint64_t k);

enum class EnumMode { Exhaustive, ClassReps };

struct SemidirectOptions {
  unsigned threads = 1;
  std::uint64_t exhaustive_cap = 100'000'000;  // max |M| for Exhaustive
};

// Antichain of element orders of W x| M: every group-element order k,
// plus 3k whenever the coset test fires, plus the order 3 inside W.
spectra::Spectrum semidirect_mu(const Gf3Field& field, EnumMode mode,
                                const SemidirectOptions& options = {});

// Antichain of element orders of M alone.
spectra::Spectrum group_mu(const Gf3Field& field, EnumMode mode,
                           const SemidirectOptions& options = {});

// Orders of (w, a) over explicit module vectors w, each computed by
// direct power accumulation; the independent cross-check for
// coset_has_order_pk. sample_size = 0 enumerates all 3^(4*alpha)
// vectors (rejected above 10^8); otherwise w = 0 plus seeded random
// vectors are sampled.
std::set<std::uint64_t> brute_force_coset_orders(const FqMatrix& a,
                                                 std::uint64_t sample_size,
                                                 std::uint64_t seed,
                                                 unsigned threads = 1);

}  // namespace ospec::ffverify
