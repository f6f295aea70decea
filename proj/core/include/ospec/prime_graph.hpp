#pragma once

#include "ospec/numtheory.hpp"
#include "ospec/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ospec::primegraph {

using numtheory::Effort;
using numtheory::Int;

// Graph on the primes dividing members of a spectrum; two primes are
// adjacent when their product is a member order. At most 64 vertices.
struct PrimeGraph {
  std::vector<Int> vertices;       // ascending primes
  std::vector<std::uint64_t> adj;  // adj[i] bit j <=> edge {i, j}

  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && (adj[i] >> j) & 1u;
  }
  std::optional<std::size_t> index_of(const Int& p) const;
  std::size_t edge_count() const;
};

PrimeGraph build(const spectra::Spectrum& s, const Effort& effort = {});

struct CocliqueResult {
  unsigned size = 0;
  std::vector<Int> witness;  // pairwise nonadjacent vertices
};

// Exact maximum independent set by branch and bound.
CocliqueResult max_coclique(const PrimeGraph& g);

// Pairwise-nonadjacency check straight from the spectrum: no product
// of two distinct listed primes divides a member order. Avoids building
// the graph (and hence any factoring).
bool is_coclique(const spectra::Spectrum& s, const std::vector<Int>& primes);

struct SigmaQuadruple {
  Int r1, r2, r3, r4;
  std::vector<Int> as_vector() const { return {r1, r2, r3, r4}; }
};

// The canonical size-4 coclique of the Ree group with q = 3^alpha:
// smallest odd prime of q-1, of q+1, and smallest odd primes other
// than 7 of q-sqrt(3q)+1 and q+sqrt(3q)+1. Verifies distinctness and
// pairwise nonadjacency before returning.
SigmaQuadruple coclique_sigma(unsigned alpha, const Effort& effort = {});

}  // namespace ospec::primegraph
