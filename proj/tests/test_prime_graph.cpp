#include "ospec/prime_graph.hpp"

#include "ospec/catalog.hpp"
#include "ospec/report.hpp"

#include "doctest.h"
#include "testutil.hpp"

#include <set>

using namespace ospec::primegraph;
using ospec::catalog::GroupSpec;
namespace cat = ospec::catalog;

namespace {

std::set<std::pair<Int, Int>> edge_set(const PrimeGraph& g) {
  std::set<std::pair<Int, Int>> edges;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.adjacent(i, j)) edges.emplace(g.vertices[i], g.vertices[j]);
    }
  }
  return edges;
}

std::vector<Int> ints(std::initializer_list<long> values) {
  std::vector<Int> v;
  for (long x : values) v.emplace_back(x);
  return v;
}

// Smallest odd prime factor of n skipping `skip`, by plain trial division.
Int oracle_smallest_odd_prime(Int n, long skip = 0) {
  while (n % 2 == 0) n /= 2;
  for (Int d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      if (d != skip) return d;
      Int rest = n;
      mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
      return oracle_smallest_odd_prime(rest, skip);
    }
  }
  return n;
}

}  // namespace

TEST_CASE("graph of J1") {
  PrimeGraph g = build(cat::mu(GroupSpec::j1()));
  CHECK(g.vertices == ints({2, 3, 5, 7, 11, 19}));
  CHECK(edge_set(g) == std::set<std::pair<Int, Int>>{
                           {2, 3}, {2, 5}, {3, 5}});
}

TEST_CASE("graph of the trivial spectrum is empty") {
  PrimeGraph g = build(ospec::spectra::Spectrum::from_orders({Int(1)}));
  CHECK(g.vertices.empty());
  CHECK(max_coclique(g).size == 0);
}

TEST_CASE("graph of the smallest Ree group") {
  PrimeGraph g = build(cat::mu(GroupSpec::ree(27)));
  CHECK(g.vertices == ints({2, 3, 7, 13, 19, 37}));
  CHECK(edge_set(g) == std::set<std::pair<Int, Int>>{
                           {2, 3}, {2, 7}, {2, 13}});
}

TEST_CASE("graph of Alt5 has no edges") {
  PrimeGraph g = build(cat::mu(GroupSpec::alt5()));
  CHECK(g.vertices == ints({2, 3, 5}));
  CHECK(g.edge_count() == 0);
  CHECK(max_coclique(g).size == 3);
}

TEST_CASE("maximum cocliques, against subset enumeration") {
  PrimeGraph j1 = build(cat::mu(GroupSpec::j1()));
  CocliqueResult r = max_coclique(j1);
  CHECK(r.size == 4);
  CHECK(r.witness.size() == 4);
  CHECK(is_coclique(cat::mu(GroupSpec::j1()), r.witness));
  CHECK(testutil::oracle_max_independent_set(j1.adj) == 4);

  PrimeGraph l2_11 = build(cat::mu(GroupSpec::l2(11)));
  CHECK(l2_11.vertices == ints({2, 3, 5, 11}));
  CHECK(edge_set(l2_11) == std::set<std::pair<Int, Int>>{{2, 3}});
  CocliqueResult r11 = max_coclique(l2_11);
  CHECK(r11.size == 3);
  CHECK(testutil::oracle_max_independent_set(l2_11.adj) == 3);

  // a single-vertex graph
  PrimeGraph single = build(ospec::spectra::Spectrum::from_orders({Int(7)}));
  CocliqueResult rs = max_coclique(single);
  CHECK(rs.size == 1);
  CHECK(rs.witness == ints({7}));
}

TEST_CASE("random graphs: branch and bound equals subset enumeration") {
  auto rng = testutil::seeded_rng(77);
  std::uniform_int_distribution<int> dn(1, 16);
  std::uniform_int_distribution<int> dcoin(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = dn(rng);
    PrimeGraph g;
    for (int i = 0; i < n; ++i) g.vertices.emplace_back(i + 2);
    g.adj.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (dcoin(rng) == 0) {
          g.adj[i] |= std::uint64_t(1) << j;
          g.adj[j] |= std::uint64_t(1) << i;
        }
      }
    }
    CocliqueResult r = max_coclique(g);
    CHECK(r.size == testutil::oracle_max_independent_set(g.adj));
    // witness really is independent
    for (std::size_t a = 0; a < r.witness.size(); ++a) {
      for (std::size_t b = a + 1; b < r.witness.size(); ++b) {
        auto ia = g.index_of(r.witness[a]), ib = g.index_of(r.witness[b]);
        REQUIRE(ia);
        REQUIRE(ib);
        CHECK_FALSE(g.adjacent(*ia, *ib));
      }
    }
  }
}

TEST_CASE("max coclique of L2(q) graphs is 3 for odd q > 3") {
  for (long q : {5, 7, 11, 13, 27, 243}) {
    PrimeGraph g = build(cat::mu(GroupSpec::l2(q)));
    CHECK(max_coclique(g).size == 3);
  }
}

TEST_CASE("sigma quadruples: frozen values confirmed by trial division") {
  SUBCASE("q = 27") {
    SigmaQuadruple s = coclique_sigma(3);
    CHECK(s.as_vector() == ints({13, 7, 19, 37}));
  }
  SUBCASE("q = 243") {
    SigmaQuadruple s = coclique_sigma(5);
    CHECK(s.as_vector() == ints({11, 61, 31, 271}));
  }
  SUBCASE("q = 2187") {
    SigmaQuadruple s = coclique_sigma(7);
    // derived in-place from the part values
    const Int q = GroupSpec::ree_alpha(7).q;
    const Int sq = cat::ree_sqrt3q(7);
    CHECK(s.r1 == oracle_smallest_odd_prime(q - 1));
    CHECK(s.r2 == oracle_smallest_odd_prime(q + 1));
    CHECK(s.r3 == oracle_smallest_odd_prime(q - sq + 1, 7));
    CHECK(s.r4 == oracle_smallest_odd_prime(q + sq + 1, 7));
    CHECK(s.as_vector() == ints({1093, 547, 43, 2269}));
  }
}

TEST_CASE("sigma is a size-4 coclique across the parameter range") {
  for (unsigned alpha : {3u, 5u, 7u, 9u, 11u}) {
    SigmaQuadruple s = coclique_sigma(alpha);
    const std::vector<Int> quad = s.as_vector();
    std::set<Int> distinct(quad.begin(), quad.end());
    CHECK(distinct.size() == 4);
    CHECK(is_coclique(cat::mu(GroupSpec::ree_alpha(alpha)), s.as_vector()));
    // the graph route agrees with the membership route
    PrimeGraph g = build(cat::mu(GroupSpec::ree_alpha(alpha)));
    for (const Int& p : s.as_vector()) CHECK(g.index_of(p).has_value());
  }
}

TEST_CASE("edges mirror spectrum membership exactly") {
  for (const GroupSpec& gs :
       {GroupSpec::j1(), GroupSpec::ree(27), GroupSpec::l2(13)}) {
    auto s = cat::mu(gs);
    PrimeGraph g = build(s);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
        CHECK(g.adjacent(i, j) == s.contains(g.vertices[i] * g.vertices[j]));
      }
    }
  }
}
