#include "ospec/ffverify.hpp"

#include "ospec/report.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace ospec::ffverify {

namespace nt = ospec::numtheory;
using Elem = Gf3Field::Elem;

FqMatrix phi(const FqMatrix& a) {
  if (a.dim() != 2) throw std::invalid_argument("phi: input must be 2x2");
  if (a.det() != a.field().one())
    throw std::invalid_argument("phi: determinant must be 1");
  return a.kronecker(a.frobenius_cube());
}

ModuleGroup::ModuleGroup(const Gf3Field& field) : field_(&field) {
  const unsigned alpha = field.degree();
  if (alpha < 3 || alpha % 2 == 0)
    throw std::invalid_argument("ModuleGroup: degree must be odd and >= 3");
  const std::uint64_t q = field.size();
  sl2_size_ = q * q * q - q;

  // A 2x2 matrix maps to -I4 only if its off-diagonal entries vanish
  // (the off-diagonal blocks of the image are b and c times an
  // invertible matrix), leaving diag(a, 1/a) with a*a^3 = -1 and
  // a*(1/a)^3 = -1. Scanning all q - 1 diagonal candidates settles it.
  const Elem minus_one = field.neg(field.one());
  for (Elem a = 1; a < q; ++a) {
    if (field.pow(a, 4) == minus_one &&
        field.mul(a, field.cube(field.inv(a))) == minus_one) {
      throw FalsifiedError(
          "ModuleGroup: -I4 lies in the image of phi for q = " +
          std::to_string(q));
    }
  }
}

FqMatrix ModuleGroup::sl2_element(std::uint64_t index) const {
  const Gf3Field& f = *field_;
  const std::uint64_t q = f.size();
  FqMatrix m(f, 2);
  const std::uint64_t block1 = (q - 1) * q * q;  // entries with a != 0
  if (index < block1) {
    const Elem a = static_cast<Elem>(index / (q * q) + 1);
    const Elem b = static_cast<Elem>((index / q) % q);
    const Elem c = static_cast<Elem>(index % q);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = f.mul(f.add(f.one(), f.mul(b, c)), f.inv(a));
    return m;
  }
  index -= block1;
  if (index >= (q - 1) * q)
    throw std::out_of_range("ModuleGroup::sl2_element: index out of range");
  // a = 0 forces bc = -1.
  const Elem b = static_cast<Elem>(index / q + 1);
  const Elem d = static_cast<Elem>(index % q);
  m.at(0, 0) = 0;
  m.at(0, 1) = b;
  m.at(1, 0) = f.neg(f.inv(b));
  m.at(1, 1) = d;
  return m;
}

bool ModuleGroup::sl2_canonical(const FqMatrix& a) const {
  const Gf3Field& f = *field_;
  for (unsigned i = 0; i < 2; ++i) {
    for (unsigned j = 0; j < 2; ++j) {
      const Elem x = a.at(i, j);
      const Elem y = f.neg(x);
      if (x < y) return true;
      if (x > y) return false;
    }
  }
  return false;  // unreachable: A = -A is impossible in odd characteristic
}

std::vector<FqMatrix> ModuleGroup::class_representatives() const {
  const Gf3Field& f = *field_;
  const std::uint64_t q = f.size();
  std::vector<FqMatrix> sl2_reps;

  FqMatrix id = FqMatrix::identity(f, 2);
  sl2_reps.push_back(id);

  // The two unipotent classes: off-diagonal entry a square vs. not.
  FqMatrix u = id;
  u.at(0, 1) = f.one();
  sl2_reps.push_back(u);
  FqMatrix uz = id;
  uz.at(0, 1) = f.generator();  // a generator is never a square
  sl2_reps.push_back(uz);

  // Split torus: diag(g^e, g^-e), e = 1 .. (q-3)/2.
  for (std::uint64_t e = 1; e <= (q - 3) / 2; ++e) {
    FqMatrix d(f, 2);
    d.at(0, 0) = f.pow(f.generator(), e);
    d.at(1, 1) = f.inv(d.at(0, 0));
    sl2_reps.push_back(d);
  }

  // Nonsplit torus: companion matrix of x^2 - tx + 1 when irreducible,
  // which happens exactly when t^2 - 4 is a nonsquare.
  const Elem four = f.from_int(4);
  for (Elem t = 0; t < q; ++t) {
    if (!f.is_square(f.sub(f.mul(t, t), four))) {
      FqMatrix c(f, 2);
      c.at(0, 0) = 0;
      c.at(0, 1) = f.neg(f.one());
      c.at(1, 0) = f.one();
      c.at(1, 1) = t;
      sl2_reps.push_back(c);
    }
  }

  std::vector<FqMatrix> out;
  out.reserve(2 * sl2_reps.size());
  for (const FqMatrix& r : sl2_reps) {
    FqMatrix img = phi(r);
    out.push_back(img);
    out.push_back(img.negated());
  }
  return out;
}

namespace {

// Factorization of lcm(q^d - 1, d = 1..4) assembled from cyclotomic
// pieces of 3^e - 1, so nothing bigger than one cyclotomic value is
// ever factored.
nt::Factorization lcm_q_pows_minus_one(unsigned alpha) {
  std::map<nt::Int, unsigned> best;
  for (unsigned d = 1; d <= 4; ++d) {
    std::map<nt::Int, unsigned> exponents;
    const unsigned long n = static_cast<unsigned long>(d) * alpha;
    for (unsigned long e = 1; e <= n; ++e) {
      if (n % e != 0) continue;
      const nt::Factorization piece = nt::factorize(nt::cyclotomic_value(e, 3));
      for (const auto& [p, m] : piece.entries()) {
        exponents[p] += m;
      }
    }
    for (const auto& [p, m] : exponents) {
      best[p] = std::max(best[p], m);
    }
  }
  nt::Factorization out;
  for (const auto& [p, m] : best) out.mul_prime(p, m);
  return out;
}

}  // namespace

const nt::Factorization& gl4_exponent(const Gf3Field& field) {
  static std::mutex mutex;
  static std::map<unsigned, nt::Factorization> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(field.degree());
  if (it == cache.end()) {
    nt::Factorization f = lcm_q_pows_minus_one(field.degree());
    f.mul_prime(3, 2);  // unipotent part: blocks of size <= 4 need 3^2
    it = cache.emplace(field.degree(), std::move(f)).first;
  }
  return it->second;
}

mpz_class element_order(const FqMatrix& a,
                        const nt::Factorization& exponent_bound) {
  mpz_class k = exponent_bound.value();
  if (!a.pow(k).is_identity())
    throw std::invalid_argument(
        "element_order: matrix order does not divide the supplied bound");
  for (const auto& [p, e] : exponent_bound.entries()) {
    for (unsigned step = 0; step < e; ++step) {
      mpz_class reduced = k / p;
      if (a.pow(reduced).is_identity())
        k = reduced;
      else
        break;
    }
  }
  return k;
}

mpz_class element_order(const FqMatrix& a) {
  if (a.dim() != 4)
    throw std::invalid_argument(
        "element_order: default exponent bound covers 4x4 matrices only");
  return element_order(a, gl4_exponent(a.field()));
}

std::vector<unsigned> unipotent_block_sizes(const FqMatrix& a) {
  const unsigned n = a.dim();
  const Gf3Field& f = a.field();
  FqMatrix b(f, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      b.at(i, j) = (i == j) ? f.sub(a.at(i, j), f.one()) : a.at(i, j);
    }
  }
  // ranks[j] = rank((A - I)^j); blocks of size >= j number
  // ranks[j-1] - ranks[j].
  std::vector<unsigned> ranks{n};
  FqMatrix power = b;
  for (unsigned j = 1; j <= n; ++j) {
    ranks.push_back(power.rank());
    if (ranks[j] == ranks[j - 1]) break;  // nilpotent part exhausted
    power = power * b;
  }
  while (ranks.size() < n + 2) ranks.push_back(ranks.back());

  std::vector<unsigned> sizes;
  for (unsigned s = n; s >= 1; --s) {
    const unsigned count =
        (ranks[s - 1] - ranks[s]) - (ranks[s] - ranks[s + 1]);
    for (unsigned c = 0; c < count; ++c) sizes.push_back(s);
  }
  return sizes;
}

FqMatrix coset_translation_sum(const FqMatrix& a, std::uint64_t k) {
  FqMatrix sum = FqMatrix::identity(a.field(), a.dim());
  FqMatrix power = FqMatrix::identity(a.field(), a.dim());
  for (std::uint64_t j = 1; j < k; ++j) {
    power = power * a;
    sum = sum + power;
  }
  return sum;
}

namespace {

bool coset_extends_unchecked(const FqMatrix& a, std::uint64_t k) {
  std::uint64_t k3 = 1;
  for (std::uint64_t rest = k; rest % 3 == 0; rest /= 3) k3 *= 3;

  const std::vector<unsigned> blocks = unipotent_block_sizes(a);
  const bool by_jordan = !blocks.empty() && blocks.front() == k3;
  const bool by_sum = !coset_translation_sum(a, k).is_zero();
  if (by_jordan != by_sum) {
    throw FalsifiedError(
        "coset_has_order_pk: Jordan-block and translation-sum criteria "
        "disagree (k = " + std::to_string(k) + ")");
  }
  return by_jordan;
}

}  // namespace

bool coset_has_order_pk(const FqMatrix& a, std::uint64_t k) {
  if (element_order(a) != mpz_class(static_cast<unsigned long>(k)))
    throw std::invalid_argument("coset_has_order_pk: k must be the order of a");
  return coset_extends_unchecked(a, k);
}

namespace {

// Exponent multiple for elements of M: lcm(6, q-1, q+1). Tighter than
// the GL4 exponent, which keeps the per-element descent cheap.
const nt::Factorization& m_exponent(const Gf3Field& field) {
  static std::mutex mutex;
  static std::map<unsigned, nt::Factorization> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(field.degree());
  if (it == cache.end()) {
    const nt::Int q(static_cast<unsigned long>(field.size()));
    std::map<nt::Int, unsigned> best;
    for (const nt::Int& piece : {nt::Int(6), nt::Int(q - 1), nt::Int(q + 1)}) {
      const nt::Factorization fp = nt::factorize(piece);
      for (const auto& [p, e] : fp.entries()) {
        auto& slot = best[p];
        slot = std::max(slot, e);
      }
    }
    nt::Factorization f;
    for (const auto& [p, e] : best) f.mul_prime(p, e);
    it = cache.emplace(field.degree(), std::move(f)).first;
  }
  return it->second;
}

struct OrderCollector {
  std::set<std::uint64_t> group_orders;
  std::set<std::uint64_t> extended_orders;  // with the coset contribution

  void take(const FqMatrix& g, const nt::Factorization& bound) {
    // the order is freshly computed, so the unchecked coset test is safe
    const std::uint64_t k = element_order(g, bound).get_ui();
    group_orders.insert(k);
    extended_orders.insert(k);
    if (coset_extends_unchecked(g, k)) extended_orders.insert(3 * k);
  }

  void merge(const OrderCollector& other) {
    group_orders.insert(other.group_orders.begin(), other.group_orders.end());
    extended_orders.insert(other.extended_orders.begin(),
                           other.extended_orders.end());
  }
};

OrderCollector collect_orders(const Gf3Field& field, EnumMode mode,
                              const SemidirectOptions& options) {
  const ModuleGroup m(field);
  const nt::Factorization& bound = m_exponent(field);

  if (mode == EnumMode::ClassReps) {
    OrderCollector c;
    for (const FqMatrix& g : m.class_representatives()) c.take(g, bound);
    return c;
  }

  if (m.size() > options.exhaustive_cap) {
    throw std::invalid_argument(
        "semidirect_mu: |M| = " + std::to_string(m.size()) +
        " exceeds the exhaustive-mode cap " +
        std::to_string(options.exhaustive_cap));
  }

  const std::uint64_t total = m.sl2_size();
  const unsigned threads = std::max(1u, options.threads);
  std::vector<OrderCollector> parts(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t]() {
      const std::uint64_t lo = total * t / threads;
      const std::uint64_t hi = total * (t + 1) / threads;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        FqMatrix a = m.sl2_element(idx);
        if (!m.sl2_canonical(a)) continue;  // phi identifies A with -A
        FqMatrix img = phi(a);
        parts[t].take(img, bound);
        parts[t].take(img.negated(), bound);
      }
    });
  }
  for (auto& w : workers) w.join();
  OrderCollector out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

spectra::Spectrum orders_to_spectrum(const std::set<std::uint64_t>& orders) {
  std::vector<mpz_class> values;
  values.reserve(orders.size());
  for (std::uint64_t k : orders) values.emplace_back(static_cast<unsigned long>(k));
  return spectra::Spectrum::from_orders(values);
}

}  // namespace

spectra::Spectrum semidirect_mu(const Gf3Field& field, EnumMode mode,
                                const SemidirectOptions& options) {
  OrderCollector c = collect_orders(field, mode, options);
  c.extended_orders.insert(3);  // orders inside the module W itself
  return orders_to_spectrum(c.extended_orders);
}

spectra::Spectrum group_mu(const Gf3Field& field, EnumMode mode,
                           const SemidirectOptions& options) {
  return orders_to_spectrum(collect_orders(field, mode, options).group_orders);
}

std::set<std::uint64_t> brute_force_coset_orders(const FqMatrix& a,
                                                 std::uint64_t sample_size,
                                                 std::uint64_t seed,
                                                 unsigned threads) {
  const Gf3Field& f = a.field();
  const unsigned n = a.dim();
  if (n > 8)
    throw std::invalid_argument("brute_force_coset_orders: dimension > 8");
  const std::uint64_t k = element_order(a).get_ui();
  const std::uint64_t q = f.size();

  std::vector<Elem> mat(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) mat[i * n + j] = a.at(i, j);

  // Direct accumulation: (w, a)^k translates by w + w^a + ... +
  // w^(a^(k-1)); the element order is k when that vanishes, else 3k.
  auto order_of = [&](const Elem* w) -> std::uint64_t {
    Elem sum[8], v[8], nv[8];
    for (unsigned i = 0; i < n; ++i) sum[i] = v[i] = w[i];
    for (std::uint64_t j = 1; j < k; ++j) {
      for (unsigned i = 0; i < n; ++i) {
        Elem acc = 0;
        const Elem* row = &mat[i * n];
        for (unsigned l = 0; l < n; ++l) {
          if (row[l] && v[l]) acc = f.add(acc, f.mul(row[l], v[l]));
        }
        nv[i] = acc;
      }
      for (unsigned i = 0; i < n; ++i) {
        v[i] = nv[i];
        sum[i] = f.add(sum[i], nv[i]);
      }
    }
    for (unsigned i = 0; i < n; ++i) {
      if (sum[i] != 0) return 3 * k;
    }
    return k;
  };

  std::set<std::uint64_t> orders;
  if (sample_size == 0) {
    double space = 1.0;
    for (unsigned i = 0; i < n; ++i) space *= static_cast<double>(q);
    if (space > 1e8) {
      throw std::invalid_argument(
          "brute_force_coset_orders: module too large to enumerate; pass a "
          "sample size");
    }
    const std::uint64_t total = static_cast<std::uint64_t>(space);
    const unsigned nthreads = std::max(1u, threads);
    std::vector<std::set<std::uint64_t>> parts(nthreads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
      workers.emplace_back([&, t]() {
        const std::uint64_t lo = total * t / nthreads;
        const std::uint64_t hi = total * (t + 1) / nthreads;
        Elem w[8] = {0};
        std::uint64_t rest = lo;
        for (unsigned i = 0; i < n; ++i) {
          w[i] = static_cast<Elem>(rest % q);
          rest /= q;
        }
        for (std::uint64_t code = lo; code < hi; ++code) {
          parts[t].insert(order_of(w));
          // odometer step in base q
          for (unsigned i = 0; i < n; ++i) {
            if (++w[i] < q) break;
            w[i] = 0;
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& p : parts) orders.insert(p.begin(), p.end());
    return orders;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  Elem w[8] = {0};
  orders.insert(order_of(w));
  for (std::uint64_t s = 1; s < sample_size; ++s) {
    for (unsigned i = 0; i < n; ++i) w[i] = static_cast<Elem>(dist(rng));
    orders.insert(order_of(w));
  }
  return orders;
}

}  // namespace ospec::ffverify
