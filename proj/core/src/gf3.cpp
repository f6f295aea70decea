#include "ospec/gf3.hpp"

#include "ospec/numtheory.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ospec::ffverify {

namespace {

// Dense polynomials over the 3-element field, coefficient c[i] of x^i,
// used only while constructing a field.
using Poly = std::vector<std::uint8_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo d (d nonzero; normalized monic internally).
Poly poly_mod(Poly a, Poly d) {
  trim(d);
  if (d.back() == 2) {
    for (auto& c : d) c = static_cast<std::uint8_t>((2 * c) % 3);
  }
  trim(a);
  while (a.size() >= d.size()) {
    const std::uint8_t l = a.back();
    const std::size_t shift = a.size() - d.size();
    if (l) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        std::uint8_t sub = static_cast<std::uint8_t>((l * d[i]) % 3);
        a[shift + i] = static_cast<std::uint8_t>((a[shift + i] + 3 - sub) % 3);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint8_t>((prod[i + j] + a[i] * b[j]) % 3);
    }
  }
  return poly_mod(std::move(prod), f);
}

// x^(3^k) mod f by square-and-multiply on the explicit exponent.
Poly x_pow_3k_mod(unsigned k, const Poly& f) {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= 3;
  Poly base = {0, 1};
  trim(base);
  Poly acc = {1};
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, f);
    base = poly_mulmod(base, base, f);
    e >>= 1;
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = static_cast<std::uint8_t>((a[i] + 3 - b[i]) % 3);
  }
  trim(a);
  return a;
}

// f monic of degree d is irreducible over GF(3) iff x^(3^d) = x mod f
// and gcd(x^(3^(d/r)) - x, f) = 1 for every prime r | d.
bool irreducible(const Poly& f) {
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  Poly x = poly_mod({0, 1}, f);  // reduce: for d = 1 the image of x is 0
  Poly lhs = x_pow_3k_mod(d, f);
  if (poly_sub(lhs, x) != Poly{}) return false;
  for (unsigned r = 2; r <= d; ++r) {
    if (d % r != 0) continue;
    bool prime = true;
    for (unsigned t = 2; t * t <= r; ++t)
      if (r % t == 0) prime = false;
    if (!prime) continue;
    Poly g = poly_gcd(poly_sub(x_pow_3k_mod(d / r, f), x), f);
    trim(g);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Gf3Field::Gf3Field(unsigned degree) : degree_(degree) {
  if (degree < 1 || degree > 13)
    throw std::invalid_argument("Gf3Field: degree must be in [1, 13]");
  q_ = 1;
  for (unsigned i = 0; i < degree; ++i) q_ *= 3;

  // Lexicographic scan over the non-leading coefficients, constant
  // term first, stopping at the first irreducible candidate.
  modulus_.assign(degree + 1, 0);
  modulus_[degree] = 1;
  const std::uint64_t combos = q_;
  bool found = false;
  for (std::uint64_t code = 0; code < combos && !found; ++code) {
    // code counts with c_{degree-1} moving fastest so that c_0 is the
    // most significant comparison key.
    std::uint64_t rest = code;
    for (unsigned i = degree; i-- > 0;) {
      modulus_[i] = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
    }
    found = irreducible(modulus_);
  }
  if (!found) throw std::logic_error("Gf3Field: no irreducible modulus found");

  // Raw coefficient-space multiply, used only to seed the tables.
  auto unpack = [&](Elem a) {
    Poly p(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i) {
      p[i] = static_cast<std::uint8_t>(a % 3);
      a /= 3;
    }
    trim(p);
    return p;
  };
  auto pack = [&](const Poly& p) {
    Elem a = 0;
    for (std::size_t i = p.size(); i-- > 0;) a = a * 3 + p[i];
    return a;
  };
  auto raw_mul = [&](Elem a, Elem b) {
    return pack(poly_mulmod(unpack(a), unpack(b), modulus_));
  };
  auto raw_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  // Smallest generator of the multiplicative group.
  numtheory::Factorization f = numtheory::factorize(numtheory::Int(
      static_cast<unsigned long>(q_ - 1)));
  generator_ = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (const auto& p : f.primes()) {
      if (raw_pow(cand, (q_ - 1) / p.get_ui()) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = cand;
      break;
    }
  }
  if (generator_ == 0) throw std::logic_error("Gf3Field: no generator found");

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    exp_[i + (q_ - 1)] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, generator_);
  }
  if (cur != 1) throw std::logic_error("Gf3Field: generator order mismatch");

  neg_.assign(q_, 0);
  for (Elem a = 0; a < q_; ++a) {
    Elem r = 0, m = 1, x = a;
    while (x) {
      r += ((3 - x % 3) % 3) * m;
      x /= 3;
      m *= 3;
    }
    neg_[a] = r;
  }

  if (q_ <= 729) {
    add_.assign(q_ * q_, 0);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) {
        Elem r = 0, m = 1, x = a, y = b;
        while (x || y) {
          unsigned t = x % 3 + y % 3;
          if (t >= 3) t -= 3;
          r += t * m;
          x /= 3;
          y /= 3;
          m *= 3;
        }
        add_[a * q_ + b] = r;
      }
    }
  }
}

Gf3Field::Elem Gf3Field::from_int(long v) const {
  long m = ((v % 3) + 3) % 3;
  return static_cast<Elem>(m);
}

Gf3Field::Elem Gf3Field::add(Elem a, Elem b) const {
  if (!add_.empty()) return add_[a * q_ + b];
  Elem r = 0, m = 1;
  while (a || b) {
    unsigned t = a % 3 + b % 3;
    if (t >= 3) t -= 3;
    r += t * m;
    a /= 3;
    b /= 3;
    m *= 3;
  }
  return r;
}

Gf3Field::Elem Gf3Field::neg(Elem a) const { return neg_[a]; }

Gf3Field::Elem Gf3Field::inv(Elem a) const {
  if (a == 0) throw std::invalid_argument("Gf3Field::inv: zero");
  return exp_[(q_ - 1) - log_[a]];
}

Gf3Field::Elem Gf3Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t l = (static_cast<unsigned __int128>(log_[a]) * (e % (q_ - 1))) %
                    (q_ - 1);
  return exp_[l];
}

std::uint64_t Gf3Field::mult_order(Elem a) const {
  if (a == 0) throw std::invalid_argument("Gf3Field::mult_order: zero");
  std::uint64_t l = log_[a];
  if (l == 0) return 1;
  std::uint64_t g = std::gcd(q_ - 1, l);
  return (q_ - 1) / g;
}

bool Gf3Field::is_square(Elem a) const {
  if (a == 0) return true;
  return log_[a] % 2 == 0;
}

std::optional<Gf3Field::Elem> Gf3Field::sqrt(Elem a) const {
  if (a == 0) return Elem(0);
  std::uint64_t l = log_[a];
  if (l % 2 != 0) return std::nullopt;
  return exp_[l / 2];
}

const Gf3Field& gf_make(unsigned degree) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<Gf3Field>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end()) {
    it = cache.emplace(degree, std::make_unique<Gf3Field>(degree)).first;
  }
  return *it->second;
}

}  // namespace ospec::ffverify
