#include "ospec/prime_graph.hpp"

#include "ospec/catalog.hpp"
#include "ospec/report.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ospec::primegraph {

namespace nt = ospec::numtheory;

std::optional<std::size_t> PrimeGraph::index_of(const Int& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t PrimeGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t row : adj) twice += std::popcount(row);
  return twice / 2;
}

PrimeGraph build(const spectra::Spectrum& s, const Effort& effort) {
  std::set<Int> primes;
  for (const Int& m : s.mu()) {
    for (const Int& p : nt::factorize(m, effort).primes()) primes.insert(p);
  }
  if (primes.size() > 64)
    throw std::invalid_argument("PrimeGraph: more than 64 vertices");

  PrimeGraph g;
  g.vertices.assign(primes.begin(), primes.end());
  g.adj.assign(g.vertices.size(), 0);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (s.contains(g.vertices[i] * g.vertices[j])) {
        g.adj[i] |= std::uint64_t(1) << j;
        g.adj[j] |= std::uint64_t(1) << i;
      }
    }
  }
  return g;
}

namespace {

struct MisSearch {
  const std::vector<std::uint64_t>& adj;
  unsigned best = 0;
  std::uint64_t best_set = 0;

  void run(std::uint64_t candidates, std::uint64_t chosen, unsigned size) {
    if (size + static_cast<unsigned>(std::popcount(candidates)) <= best)
      return;  // cannot beat the incumbent
    if (candidates == 0) {
      if (size > best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    const int v = std::countr_zero(candidates);
    const std::uint64_t vbit = std::uint64_t(1) << v;
    // include v
    run(candidates & ~(vbit | adj[v]), chosen | vbit, size + 1);
    // exclude v
    run(candidates & ~vbit, chosen, size);
  }
};

}  // namespace

CocliqueResult max_coclique(const PrimeGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n > 64) throw std::invalid_argument("max_coclique: more than 64 vertices");
  CocliqueResult result;
  if (n == 0) return result;

  MisSearch search{g.adj};
  std::uint64_t all = (n == 64) ? ~std::uint64_t(0)
                                : ((std::uint64_t(1) << n) - 1);
  search.run(all, 0, 0);

  result.size = search.best;
  for (std::size_t i = 0; i < n; ++i) {
    if ((search.best_set >> i) & 1u) result.witness.push_back(g.vertices[i]);
  }
  return result;
}

bool is_coclique(const spectra::Spectrum& s, const std::vector<Int>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[i] == primes[j]) return false;
      if (s.contains(primes[i] * primes[j])) return false;
    }
  }
  return true;
}

namespace {

// Smallest prime factor of n that is odd and not in `excluded`.
// Trial division over the prime table finds it smallest-first; only a
// leftover cofactor above 10^12 needs real factoring.
std::optional<Int> smallest_admissible_prime(const Int& n,
                                             const std::vector<Int>& excluded,
                                             const Effort& effort) {
  auto admissible = [&](const Int& p) {
    if (p == 2) return false;
    return std::find(excluded.begin(), excluded.end(), p) == excluded.end();
  };
  Int rest = n;
  for (std::uint32_t p : nt::small_primes()) {
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      if (admissible(Int(p))) return Int(p);
      mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Int(p).get_mpz_t());
    }
  }
  if (rest > 1 && nt::is_prime(rest)) {
    if (admissible(rest)) return rest;
    return std::nullopt;
  }
  std::optional<Int> smallest;
  if (rest > 1) {
    for (const Int& p : nt::factorize(rest, effort).primes()) {
      if (admissible(p) && (!smallest || p < *smallest)) smallest = p;
    }
  }
  return smallest;
}

}  // namespace

SigmaQuadruple coclique_sigma(unsigned alpha, const Effort& effort) {
  catalog::GroupSpec ree = catalog::GroupSpec::ree_alpha(alpha);
  const Int q = ree.q;
  const Int s = catalog::ree_sqrt3q(alpha);

  struct Part {
    const char* name;
    Int value;
    std::vector<Int> excluded;
  };
  const Part parts[4] = {
      {"q-1", q - 1, {}},
      {"q+1", q + 1, {}},
      {"q-sqrt(3q)+1", q - s + 1, {Int(7)}},
      {"q+sqrt(3q)+1", q + s + 1, {Int(7)}},
  };

  SigmaQuadruple sigma;
  Int* slots[4] = {&sigma.r1, &sigma.r2, &sigma.r3, &sigma.r4};
  for (int i = 0; i < 4; ++i) {
    auto p = smallest_admissible_prime(parts[i].value, parts[i].excluded, effort);
    if (!p) {
      throw FalsifiedError(std::string("coclique_sigma: no admissible odd prime divides ") +
                           parts[i].name + " = " + parts[i].value.get_str());
    }
    *slots[i] = *p;
  }

  if (!is_coclique(catalog::mu(ree), sigma.as_vector())) {
    throw FalsifiedError("coclique_sigma: quadruple for q = " + q.get_str() +
                         " is not a coclique in the Ree prime graph");
  }
  return sigma;
}

}  // namespace ospec::primegraph
