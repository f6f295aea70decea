#include "ospec/ffverify.hpp"

#include "ospec/report.hpp"

#include "doctest.h"
#include "ff_checks.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace ospec::ffverify;
using Elem = Gf3Field::Elem;
using ffchecks::conjugate;
using ffchecks::mat2;
using ffchecks::random_sl2;

namespace {

// Order by plain repeated multiplication; independent of the factored
// descent inside element_order.
std::uint64_t oracle_order(const FqMatrix& a, std::uint64_t cap = 2000000) {
  FqMatrix cur = a;
  std::uint64_t k = 1;
  while (!cur.is_identity()) {
    cur = cur * a;
    ++k;
    REQUIRE(k <= cap);
  }
  return k;
}

std::vector<std::uint64_t> sorted_u64(const ospec::spectra::Spectrum& s) {
  std::vector<std::uint64_t> v;
  for (const auto& m : s.mu()) v.push_back(m.get_ui());
  return v;
}

}  // namespace

TEST_CASE("module image of the identity and of -I") {
  const Gf3Field& f = gf_make(3);
  FqMatrix id = FqMatrix::identity(f, 2);
  CHECK(phi(id).is_identity());
  CHECK(phi(id.negated()).is_identity());

  FqMatrix bad = mat2(f, 1, 0, 0, 2);  // det = 2
  CHECK_THROWS_AS(phi(bad), std::invalid_argument);
}

TEST_CASE("phi identifies A with -A and is multiplicative") {
  CHECK(ffchecks::phi_homomorphism_holds(gf_make(3), 10000, 41));
}

TEST_CASE("unipotent images have one Jordan chain of length 3") {
  const Gf3Field& f = gf_make(3);
  FqMatrix u = mat2(f, 1, 1, 0, 1);
  FqMatrix uz = mat2(f, 1, f.generator(), 0, 1);

  FqMatrix pu = phi(u);
  CHECK(element_order(pu) == 3);
  CHECK(unipotent_block_sizes(pu) == std::vector<unsigned>{3, 1});
  CHECK(unipotent_block_sizes(phi(uz)) == std::vector<unsigned>{3, 1});

  // conjugates carry the same block structure
  auto rng = testutil::seeded_rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    FqMatrix g = random_sl2(f, rng);
    CHECK(unipotent_block_sizes(phi(conjugate(g, u))) ==
          std::vector<unsigned>{3, 1});
  }
}

TEST_CASE("block sizes of reference matrices") {
  const Gf3Field& f = gf_make(3);
  FqMatrix id4 = FqMatrix::identity(f, 4);
  CHECK(unipotent_block_sizes(id4) == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(unipotent_block_sizes(id4.negated()).empty());
}

TEST_CASE("element orders match the repeated-multiplication oracle") {
  const Gf3Field& f = gf_make(3);
  const ModuleGroup m(f);
  auto rng = testutil::seeded_rng(43);

  CHECK(element_order(FqMatrix::identity(f, 4)) == 1);
  CHECK(element_order(FqMatrix::identity(f, 4).negated()) == 2);

  std::uniform_int_distribution<std::uint64_t> didx(0, m.sl2_size() - 1);
  for (int iter = 0; iter < 200; ++iter) {
    FqMatrix img = phi(m.sl2_element(didx(rng)));
    if (iter % 2 == 0) img = img.negated();
    mpz_class k = element_order(img);
    CHECK(k == mpz_class(static_cast<unsigned long>(oracle_order(img))));
  }

  // a bound that the order does not divide is rejected
  ospec::numtheory::Factorization bogus;
  bogus.mul_prime(2, 1);
  FqMatrix u3 = phi(mat2(f, 1, 1, 0, 1));
  CHECK_THROWS_AS(element_order(u3, bogus), std::invalid_argument);
}

TEST_CASE("coset order test on the reference elements") {
  const Gf3Field& f = gf_make(3);
  FqMatrix u3 = phi(mat2(f, 1, 1, 0, 1));
  FqMatrix u6 = u3.negated();
  FqMatrix id4 = FqMatrix::identity(f, 4);

  CHECK(coset_has_order_pk(id4, 1));
  CHECK(coset_has_order_pk(u3, 3));
  CHECK_FALSE(coset_has_order_pk(u6, 6));
  CHECK_THROWS_AS(coset_has_order_pk(u3, 6), std::invalid_argument);

  // order-6 images have all four Jordan blocks at eigenvalue -1
  CHECK(unipotent_block_sizes(u6).empty());
  CHECK(unipotent_block_sizes(u6.negated()) == std::vector<unsigned>{3, 1});
}

TEST_CASE("translation sums") {
  const Gf3Field& f = gf_make(3);
  FqMatrix u3 = phi(mat2(f, 1, 1, 0, 1));
  CHECK_FALSE(coset_translation_sum(u3, 3).is_zero());
  CHECK(coset_translation_sum(u3.negated(), 6).is_zero());
  CHECK(coset_translation_sum(FqMatrix::identity(f, 4), 1).is_identity());
}

TEST_CASE("brute-force coset orders on the reference elements") {
  const Gf3Field& f = gf_make(3);
  FqMatrix u3 = phi(mat2(f, 1, 1, 0, 1));

  // all 531441 module vectors
  std::set<std::uint64_t> all = brute_force_coset_orders(u3, 0, 0, 2);
  CHECK(all == std::set<std::uint64_t>{3, 9});

  std::set<std::uint64_t> neg = brute_force_coset_orders(u3.negated(), 0, 0, 2);
  CHECK(neg == std::set<std::uint64_t>{6});

  std::set<std::uint64_t> idw =
      brute_force_coset_orders(FqMatrix::identity(f, 4), 0, 0, 2);
  CHECK(idw == std::set<std::uint64_t>{1, 3});
}

TEST_CASE("split-torus image of order 26: no extension, sampled") {
  const Gf3Field& f = gf_make(3);
  FqMatrix d(f, 2);
  d.at(0, 0) = f.generator();
  d.at(1, 1) = f.inv(f.generator());
  FqMatrix img = phi(d).negated();
  REQUIRE(element_order(img) == 26);
  std::set<std::uint64_t> orders = brute_force_coset_orders(img, 10000, 99);
  CHECK(orders == std::set<std::uint64_t>{26});
  CHECK_FALSE(coset_has_order_pk(img, 26));
}

TEST_CASE("module group construction") {
  const Gf3Field& f = gf_make(3);
  const ModuleGroup m(f);
  CHECK(m.size() == 19656);
  CHECK(m.sl2_size() == 19656);

  CHECK_THROWS_AS(ModuleGroup(gf_make(1)), std::invalid_argument);

  // exhaustive confirmation that no image equals -I4 at q = 27
  FqMatrix minus_id = FqMatrix::identity(f, 4).negated();
  std::uint64_t canonical = 0;
  bool hit = false;
  for (std::uint64_t idx = 0; idx < m.sl2_size(); ++idx) {
    FqMatrix a = m.sl2_element(idx);
    if (!m.sl2_canonical(a)) continue;
    ++canonical;
    if (phi(a) == minus_id) hit = true;
  }
  CHECK_FALSE(hit);
  CHECK(canonical == m.sl2_size() / 2);
}

TEST_CASE("sl2 enumeration is a bijection onto determinant-1 matrices") {
  const Gf3Field& f = gf_make(3);
  const ModuleGroup m(f);
  std::set<std::vector<Elem>> seen;
  for (std::uint64_t idx = 0; idx < m.sl2_size(); ++idx) {
    FqMatrix a = m.sl2_element(idx);
    CHECK(a.det() == f.one());
    seen.insert({a.at(0, 0), a.at(0, 1), a.at(1, 0), a.at(1, 1)});
  }
  CHECK(seen.size() == m.sl2_size());
  CHECK_THROWS_AS(m.sl2_element(m.sl2_size()), std::out_of_range);
}

TEST_CASE("semidirect spectrum at q = 27: exhaustive equals class reps") {
  const Gf3Field& f = gf_make(3);
  SemidirectOptions opt;
  opt.threads = 2;
  auto exhaustive = semidirect_mu(f, EnumMode::Exhaustive, opt);
  auto by_reps = semidirect_mu(f, EnumMode::ClassReps);
  CHECK(exhaustive == by_reps);
  CHECK(sorted_u64(exhaustive) == std::vector<std::uint64_t>{6, 9, 14, 26});

  auto m_mu = group_mu(f, EnumMode::Exhaustive, opt);
  CHECK(sorted_u64(m_mu) == std::vector<std::uint64_t>{6, 14, 26});
}

TEST_CASE("semidirect spectrum at q = 243 via class representatives") {
  auto s = semidirect_mu(gf_make(5), EnumMode::ClassReps);
  CHECK(sorted_u64(s) == std::vector<std::uint64_t>{6, 9, 122, 242});
}

TEST_CASE("every semidirect order divides one of the four claimed members") {
  const Gf3Field& f = gf_make(3);
  auto witness = ospec::spectra::Spectrum::from_orders(
      {mpz_class(6), mpz_class(9), mpz_class(26), mpz_class(14)});
  const ModuleGroup m(f);
  for (const FqMatrix& g : m.class_representatives()) {
    const std::uint64_t k = element_order(g).get_ui();
    CHECK(witness.contains(mpz_class(static_cast<unsigned long>(k))));
    if (coset_has_order_pk(g, k)) {
      CHECK(witness.contains(mpz_class(static_cast<unsigned long>(3 * k))));
    }
  }
}

TEST_CASE("exhaustive mode refuses oversized groups") {
  SemidirectOptions opt;
  opt.exhaustive_cap = 1000;
  CHECK_THROWS_AS(semidirect_mu(gf_make(3), EnumMode::Exhaustive, opt),
                  std::invalid_argument);
}

TEST_CASE("coset test agrees with full brute force on every q=27 class rep") {
  const Gf3Field& f = gf_make(3);
  const ModuleGroup m(f);
  for (const FqMatrix& g : m.class_representatives()) {
    const std::uint64_t k = element_order(g).get_ui();
    std::set<std::uint64_t> expected{k};
    if (coset_has_order_pk(g, k)) expected.insert(3 * k);
    CHECK(brute_force_coset_orders(g, 0, 0, 2) == expected);
  }
}

TEST_CASE("coset test agrees with sampled brute force on q=243 reps") {
  const Gf3Field& f = gf_make(5);
  const ModuleGroup m(f);
  auto reps = m.class_representatives();
  auto rng = testutil::seeded_rng(55);
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  for (int iter = 0; iter < 24; ++iter) {
    const FqMatrix& g = reps[pick(rng)];
    const std::uint64_t k = element_order(g).get_ui();
    std::set<std::uint64_t> sampled = brute_force_coset_orders(g, 3000, iter);
    std::set<std::uint64_t> expected{k};
    if (coset_has_order_pk(g, k)) expected.insert(3 * k);
    // sampling may miss an order, but can never see one outside the set
    for (std::uint64_t o : sampled) CHECK(expected.count(o) == 1);
    CHECK(sampled.count(k) == 1);  // w = 0 is always sampled
  }
}

TEST_CASE("no eighth root of unity obstruction: q = 3 mod 8") {
  for (unsigned alpha = 3; alpha <= 13; alpha += 2) {
    mpz_class q = testutil::mpz_pow(3, alpha);
    CHECK(q % 8 == 3);
    CHECK((q - 1) % 8 != 0);
    CHECK((q + 1) % 8 != 0);
  }
}

TEST_CASE("characteristic roots of semisimple images are the 4th, 2nd, "
          "-2nd and -4th powers of the eigenvalue") {
  const Gf3Field& f = gf_make(3);
  const Gf3Field& e = gf_make(6);
  ffchecks::Embedding embed = ffchecks::make_embedding(f, e);

  // the embedding really is a ring homomorphism
  auto rng = testutil::seeded_rng(66);
  std::uniform_int_distribution<Elem> df(0, static_cast<Elem>(f.size() - 1));
  for (int iter = 0; iter < 500; ++iter) {
    Elem a = df(rng), b = df(rng);
    CHECK(embed(f.add(a, b)) == e.add(embed(a), embed(b)));
    CHECK(embed(f.mul(a, b)) == e.mul(embed(a), embed(b)));
  }

  CHECK(ffchecks::characteristic_roots_hold(3, 50, 50, 66));
}
