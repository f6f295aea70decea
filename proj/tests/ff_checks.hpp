#pragma once

// Finite-field check routines shared between the unit tests and the
// acceptance suite. Everything returns plain bools so either harness
// can decide how to report.

#include "ospec/ffverify.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace ffchecks {

using ospec::ffverify::FqMatrix;
using ospec::ffverify::Gf3Field;
using Elem = Gf3Field::Elem;

inline FqMatrix mat2(const Gf3Field& f, Elem a, Elem b, Elem c, Elem d) {
  FqMatrix m(f, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

inline FqMatrix random_sl2(const Gf3Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(f.size() - 1));
  for (;;) {
    FqMatrix m = mat2(f, d(rng), d(rng), d(rng), d(rng));
    if (m.det() == f.one()) return m;
  }
}

inline FqMatrix conjugate(const FqMatrix& g, const FqMatrix& x) {
  const Gf3Field& f = g.field();
  FqMatrix inv = mat2(f, g.at(1, 1), f.neg(g.at(0, 1)), f.neg(g.at(1, 0)),
                      g.at(0, 0));
  return g * x * inv;
}

// phi(AB) = phi(A) phi(B) on `iters` random pairs.
inline bool phi_homomorphism_holds(const Gf3Field& f, int iters,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < iters; ++i) {
    FqMatrix a = random_sl2(f, rng), b = random_sl2(f, rng);
    if (ospec::ffverify::phi(a * b) !=
        ospec::ffverify::phi(a) * ospec::ffverify::phi(b))
      return false;
    if (ospec::ffverify::phi(a.negated()) != ospec::ffverify::phi(a))
      return false;
  }
  return true;
}

// Field embedding of GF(q) into GF(q^2) by mapping the basis element to
// a root of the small modulus.
struct Embedding {
  const Gf3Field* small;
  const Gf3Field* big;
  Elem root;

  Elem operator()(Elem a) const {
    Elem acc = 0, power = big->one();
    while (a) {
      unsigned trit = a % 3;
      a /= 3;
      if (trit) {
        Elem term = power;
        if (trit == 2) term = big->add(term, term);
        acc = big->add(acc, term);
      }
      power = big->mul(power, root);
    }
    return acc;
  }
};

inline Embedding make_embedding(const Gf3Field& small, const Gf3Field& big) {
  for (Elem z = 0; z < big.size(); ++z) {
    Elem acc = 0, power = big.one();
    for (std::size_t i = 0; i < small.modulus().size(); ++i) {
      unsigned c = small.modulus()[i];
      if (c) {
        Elem term = power;
        if (c == 2) term = big.add(term, term);
        acc = big.add(acc, term);
      }
      if (i + 1 < small.modulus().size()) power = big.mul(power, z);
    }
    if (acc == 0) return Embedding{&small, &big, z};
  }
  throw std::logic_error("no embedding root found");
}

// Coefficients of prod (X - r), constant term first.
inline std::vector<Elem> expand_roots(const Gf3Field& f,
                                      const std::vector<Elem>& roots) {
  std::vector<Elem> poly{f.one()};
  for (Elem r : roots) {
    std::vector<Elem> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly[i]);
      next[i] = f.add(next[i], f.mul(f.neg(r), poly[i]));
    }
    poly = std::move(next);
  }
  return poly;
}

// Characteristic polynomial of a 4x4 matrix by evaluation at the first
// five field points and Lagrange interpolation; constant term first.
inline std::vector<Elem> char_poly(const FqMatrix& a) {
  const Gf3Field& f = a.field();
  std::vector<Elem> xs, ys;
  for (Elem x = 0; x < 5; ++x) {
    FqMatrix m = a.negated();
    for (unsigned i = 0; i < 4; ++i) m.at(i, i) = f.add(m.at(i, i), x);
    xs.push_back(x);
    ys.push_back(m.det());
  }
  std::vector<Elem> acc(5, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Elem> basis{f.one()};
    Elem denom = f.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      std::vector<Elem> next(basis.size() + 1, 0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] = f.add(next[t + 1], basis[t]);
        next[t] = f.add(next[t], f.mul(f.neg(xs[j]), basis[t]));
      }
      basis = std::move(next);
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    const Elem scale = f.mul(ys[i], f.inv(denom));
    for (std::size_t t = 0; t < basis.size(); ++t) {
      acc[t] = f.add(acc[t], f.mul(scale, basis[t]));
    }
  }
  return acc;
}

// Characteristic roots of phi(A) are the 4th, 2nd, -2nd and -4th powers
// of A's eigenvalue, for `split` + `nonsplit` random semisimple A.
inline bool characteristic_roots_hold(unsigned alpha, int split, int nonsplit,
                                      std::uint64_t seed) {
  const Gf3Field& f = ospec::ffverify::gf_make(alpha);
  const Gf3Field& e = ospec::ffverify::gf_make(2 * alpha);
  Embedding embed = make_embedding(f, e);
  std::mt19937_64 rng(seed);

  auto roots_match = [&](const FqMatrix& a2, Elem lambda_big) {
    FqMatrix img = ospec::ffverify::phi(a2);
    std::vector<Elem> got = char_poly(img);
    const Elem l2 = e.mul(lambda_big, lambda_big);
    const Elem l4 = e.mul(l2, l2);
    std::vector<Elem> expected =
        expand_roots(e, {l4, l2, e.inv(l2), e.inv(l4)});
    if (got.size() != expected.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (embed(got[i]) != expected[i]) return false;
    }
    return true;
  };

  std::uniform_int_distribution<std::uint64_t> dexp(1, f.size() - 2);
  for (int i = 0; i < split; ++i) {
    Elem lambda = f.pow(f.generator(), dexp(rng));
    FqMatrix d(f, 2);
    d.at(0, 0) = lambda;
    d.at(1, 1) = f.inv(lambda);
    if (!roots_match(conjugate(random_sl2(f, rng), d), embed(lambda)))
      return false;
  }

  std::uniform_int_distribution<Elem> dt(0, static_cast<Elem>(f.size() - 1));
  int done = 0;
  while (done < nonsplit) {
    Elem t = dt(rng);
    Elem disc = f.sub(f.mul(t, t), f.from_int(4));
    if (f.is_square(disc)) continue;
    FqMatrix c(f, 2);
    c.at(0, 1) = f.neg(f.one());
    c.at(1, 0) = f.one();
    c.at(1, 1) = t;
    auto root = e.sqrt(embed(disc));
    if (!root) return false;
    Elem lambda = e.mul(e.add(embed(t), *root), e.inv(e.from_int(2)));
    if (!roots_match(c, lambda)) return false;
    ++done;
  }
  return true;
}

}  // namespace ffchecks
