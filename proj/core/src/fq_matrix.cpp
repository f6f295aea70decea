#include "ospec/fq_matrix.hpp"

#include <stdexcept>

namespace ospec::ffverify {

FqMatrix::FqMatrix(const Gf3Field& field, unsigned n)
    : field_(&field), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  if (n == 0) throw std::invalid_argument("FqMatrix: dimension must be >= 1");
}

FqMatrix FqMatrix::identity(const Gf3Field& field, unsigned n) {
  FqMatrix m(field, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  const Gf3Field& f = *field_;
  FqMatrix out(f, n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned k = 0; k < n_; ++k) {
      const Elem aik = at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        const Elem b = rhs.at(k, j);
        if (b == 0) continue;
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b));
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& rhs) const {
  const Gf3Field& f = *field_;
  FqMatrix out(f, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f.add(a_[i], rhs.a_[i]);
  return out;
}

FqMatrix FqMatrix::negated() const {
  const Gf3Field& f = *field_;
  FqMatrix out(f, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f.neg(a_[i]);
  return out;
}

FqMatrix FqMatrix::pow(const mpz_class& e) const {
  if (e < 0) throw std::invalid_argument("FqMatrix::pow: exponent >= 0");
  FqMatrix result = identity(*field_, n_);
  FqMatrix base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

bool FqMatrix::is_identity() const {
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (at(i, j) != (i == j ? field_->one() : 0)) return false;
    }
  }
  return true;
}

bool FqMatrix::is_zero() const {
  for (Elem e : a_) {
    if (e != 0) return false;
  }
  return true;
}

unsigned FqMatrix::rank() const {
  const Gf3Field& f = *field_;
  std::vector<Elem> m = a_;
  unsigned rank = 0;
  for (unsigned col = 0; col < n_ && rank < n_; ++col) {
    unsigned pivot = n_;
    for (unsigned r = rank; r < n_; ++r) {
      if (m[r * n_ + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n_) continue;
    for (unsigned j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[rank * n_ + j]);
    const Elem inv = f.inv(m[rank * n_ + col]);
    for (unsigned j = col; j < n_; ++j) m[rank * n_ + j] = f.mul(m[rank * n_ + j], inv);
    for (unsigned r = 0; r < n_; ++r) {
      if (r == rank) continue;
      const Elem factor = m[r * n_ + col];
      if (factor == 0) continue;
      for (unsigned j = col; j < n_; ++j) {
        m[r * n_ + j] = f.sub(m[r * n_ + j], f.mul(factor, m[rank * n_ + j]));
      }
    }
    ++rank;
  }
  return rank;
}

FqMatrix::Elem FqMatrix::det() const {
  const Gf3Field& f = *field_;
  std::vector<Elem> m = a_;
  Elem det = f.one();
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = n_;
    for (unsigned r = col; r < n_; ++r) {
      if (m[r * n_ + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[col * n_ + j]);
      det = f.neg(det);
    }
    const Elem lead = m[col * n_ + col];
    det = f.mul(det, lead);
    const Elem inv = f.inv(lead);
    for (unsigned r = col + 1; r < n_; ++r) {
      const Elem factor = f.mul(m[r * n_ + col], inv);
      if (factor == 0) continue;
      for (unsigned j = col; j < n_; ++j) {
        m[r * n_ + j] = f.sub(m[r * n_ + j], f.mul(factor, m[col * n_ + j]));
      }
    }
  }
  return det;
}

std::vector<FqMatrix::Elem> FqMatrix::mul_vec(const std::vector<Elem>& v) const {
  const Gf3Field& f = *field_;
  std::vector<Elem> out(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    Elem acc = 0;
    for (unsigned j = 0; j < n_; ++j) {
      const Elem a = at(i, j);
      if (a && v[j]) acc = f.add(acc, f.mul(a, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

FqMatrix FqMatrix::kronecker(const FqMatrix& rhs) const {
  const Gf3Field& f = *field_;
  const unsigned m = rhs.n_;
  FqMatrix out(f, n_ * m);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      const Elem a = at(i, j);
      if (a == 0) continue;
      for (unsigned k = 0; k < m; ++k) {
        for (unsigned l = 0; l < m; ++l) {
          const Elem b = rhs.at(k, l);
          if (b == 0) continue;
          out.at(i * m + k, j * m + l) = f.mul(a, b);
        }
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::frobenius_cube() const {
  const Gf3Field& f = *field_;
  FqMatrix out(f, n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) out.at(i, j) = f.cube(at(i, j));
  }
  return out;
}

}  // namespace ospec::ffverify
