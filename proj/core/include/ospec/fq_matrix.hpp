#pragma once

#include "ospec/gf3.hpp"

#include <gmpxx.h>

#include <vector>

namespace ospec::ffverify {

// Square matrix over a shared Gf3Field, row-major. The field outlives
// every matrix (fields are process-cached), so a plain pointer is kept.
class FqMatrix {
 public:
  using Elem = Gf3Field::Elem;

  FqMatrix(const Gf3Field& field, unsigned n);
  static FqMatrix identity(const Gf3Field& field, unsigned n);

  const Gf3Field& field() const noexcept { return *field_; }
  unsigned dim() const noexcept { return n_; }

  Elem at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
  Elem& at(unsigned i, unsigned j) { return a_[i * n_ + j]; }

  FqMatrix operator*(const FqMatrix& rhs) const;
  FqMatrix operator+(const FqMatrix& rhs) const;
  FqMatrix negated() const;
  FqMatrix pow(const mpz_class& e) const;

  bool operator==(const FqMatrix& rhs) const { return a_ == rhs.a_; }
  bool operator!=(const FqMatrix& rhs) const { return a_ != rhs.a_; }
  bool is_identity() const;
  bool is_zero() const;

  unsigned rank() const;
  Elem det() const;

  std::vector<Elem> mul_vec(const std::vector<Elem>& v) const;

  // Kronecker product; dimensions multiply.
  FqMatrix kronecker(const FqMatrix& rhs) const;
  // Entrywise Frobenius cube.
  FqMatrix frobenius_cube() const;

 private:
  const Gf3Field* field_;
  unsigned n_;
  std::vector<Elem> a_;
};

}  // namespace ospec::ffverify
