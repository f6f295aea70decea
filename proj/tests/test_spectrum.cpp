#include "ospec/spectrum.hpp"

#include "doctest.h"
#include "testutil.hpp"

#include <numeric>
#include <set>

using namespace ospec::spectra;

namespace {

Spectrum spec(std::initializer_list<long> values) {
  std::vector<Int> v;
  for (long x : values) v.emplace_back(x);
  return Spectrum::from_orders(v);
}

Spectrum j1_mu() { return spec({6, 7, 10, 11, 15, 19}); }

std::vector<Int> mu_values(const Spectrum& s) { return s.mu(); }

Spectrum random_spectrum(std::mt19937_64& rng, int max_members = 8,
                         long max_value = 10000) {
  std::uniform_int_distribution<int> dn(1, max_members);
  std::uniform_int_distribution<long> dv(1, max_value);
  std::vector<Int> v;
  const int n = dn(rng);
  for (int i = 0; i < n; ++i) v.emplace_back(dv(rng));
  return Spectrum::from_orders(v);
}

}  // namespace

TEST_CASE("from_orders keeps exactly the divisibility-maximal members") {
  CHECK(mu_values(spec({2, 3, 5, 6, 10, 15})) ==
        std::vector<Int>{6, 10, 15});
  CHECK(mu_values(spec({1})) == std::vector<Int>{1});
  CHECK(mu_values(spec({4, 2, 8})) == std::vector<Int>{8});
  CHECK_THROWS_AS(Spectrum::from_orders({}), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum::from_orders({Int(0)}), std::invalid_argument);
}

TEST_CASE("from_orders is idempotent on random inputs") {
  auto rng = testutil::seeded_rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    Spectrum s = random_spectrum(rng);
    CHECK(Spectrum::from_orders(s.mu()) == s);
  }
}

TEST_CASE("membership means dividing some maximal member") {
  Spectrum j1 = j1_mu();
  CHECK(j1.contains(10));
  CHECK(j1.contains(1));
  CHECK_FALSE(j1.contains(14));
  CHECK_FALSE(j1.contains(9));
  CHECK(j1.contains(19));
}

TEST_CASE("product folds pairwise lcms and prunes") {
  Spectrum j1 = j1_mu();
  CHECK(product(j1, spec({1})) == j1);
  CHECK(mu_values(product(spec({6, 10, 15}), spec({6, 10, 15}))) ==
        std::vector<Int>{30});
  // the two dihedral factors combine to exactly {6, 10, 15}
  CHECK(mu_values(product(spec({2, 3}), spec({2, 5}))) ==
        std::vector<Int>{6, 10, 15});
}

TEST_CASE("product members are exactly the maximal pairwise lcms") {
  auto rng = testutil::seeded_rng(12);
  for (int iter = 0; iter < 300; ++iter) {
    Spectrum s1 = random_spectrum(rng), s2 = random_spectrum(rng);
    Spectrum p = product(s1, s2);
    for (const Int& a : s1.mu()) {
      for (const Int& b : s2.mu()) {
        Int l;
        mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        CHECK(p.contains(l));
      }
    }
  }
}

TEST_CASE("product is commutative and associative") {
  auto rng = testutil::seeded_rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    Spectrum a = random_spectrum(rng), b = random_spectrum(rng),
             c = random_spectrum(rng);
    CHECK(product(a, b) == product(b, a));
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
  }
}

TEST_CASE("power examples and stabilization") {
  Spectrum j1 = j1_mu();
  CHECK(j1.power(1) == j1);
  CHECK(mu_values(spec({2, 3}).power(2)) == std::vector<Int>{6});

  // the fold of all six members
  Int all = 1;
  for (const Int& m : j1.mu()) {
    mpz_lcm(all.get_mpz_t(), all.get_mpz_t(), m.get_mpz_t());
  }
  CHECK(mu_values(j1.power(6)) == std::vector<Int>{all});
  CHECK(all == 43890);

  auto rng = testutil::seeded_rng(14);
  for (int iter = 0; iter < 100; ++iter) {
    Spectrum s = random_spectrum(rng, 5, 300);
    const unsigned long stable = s.mu().size();
    Spectrum at_stable = s.power(stable);
    CHECK(s.power(stable + 1) == at_stable);
    CHECK(s.power(stable + 3) == at_stable);
  }
}

TEST_CASE("equality is antichain equality") {
  Spectrum j1 = j1_mu();
  CHECK(j1 == j1_mu());
  CHECK_FALSE(spec({6}) == spec({2, 3}));
  CHECK(j1.power(4) == product(j1.power(3), spec({6, 10, 15})));
  CHECK_FALSE(j1.power(3) == j1.power(4));
}

TEST_CASE("replacement hypotheses") {
  Spectrum j1 = j1_mu();
  Spectrum h = spec({6, 10, 15});
  CHECK(replacement_hypotheses(j1, h, 4));
  CHECK_FALSE(replacement_hypotheses(j1, h, 3));
  CHECK(replacement_hypotheses(j1, j1, 1));
  CHECK_FALSE(replacement_hypotheses(h, j1, 4));  // superset, not subset
}

TEST_CASE("replacement equality holds whenever the hypotheses do") {
  auto rng = testutil::seeded_rng(15);
  std::uniform_int_distribution<unsigned long> dk(2, 5);
  int done = 0;
  while (done < 1000) {
    Spectrum g = random_spectrum(rng, 7, 500);
    const unsigned long k = dk(rng);
    // drop fewer than k members of mu(G) to build mu(H)
    std::uniform_int_distribution<unsigned long> ddrop(
        0, std::min<unsigned long>(k - 1, g.mu().size() - 1));
    unsigned long drop = ddrop(rng);
    std::vector<Int> hmu = g.mu();
    for (unsigned long d = 0; d < drop; ++d) {
      std::uniform_int_distribution<std::size_t> di(0, hmu.size() - 1);
      hmu.erase(hmu.begin() + di(rng));
    }
    Spectrum h = Spectrum::from_orders(hmu);
    REQUIRE(replacement_hypotheses(g, h, k));
    CHECK(g.power(k) == product(g.power(k - 1), h));
    ++done;
  }
}
