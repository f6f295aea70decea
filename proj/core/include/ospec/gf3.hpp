#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ospec::ffverify {

// GF(3^degree) in a fixed polynomial basis. The modulus is the
// lexicographically least monic irreducible of its degree over the
// 3-element field, comparing coefficients from the constant term up, so
// equal degrees always give bit-identical arithmetic. Elements are
// coefficient vectors packed in base 3 (constant coefficient in the
// least significant trit); multiplication runs through discrete-log
// tables over a fixed generator.
class Gf3Field {
 public:
  using Elem = std::uint32_t;

  // degree in [1, 13]; larger fields would need ~3^degree table slots.
  explicit Gf3Field(unsigned degree);

  Gf3Field(const Gf3Field&) = delete;
  Gf3Field& operator=(const Gf3Field&) = delete;

  unsigned degree() const noexcept { return degree_; }
  std::uint64_t size() const noexcept { return q_; }

  // Monic modulus as coefficients c_0 .. c_degree (c_degree = 1).
  const std::vector<std::uint8_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(long v) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // Frobenius x -> x^3.
  Elem cube(Elem a) const {
    if (a == 0) return 0;
    return exp_[(3 * log_[a]) % (q_ - 1)];
  }

  Elem generator() const { return generator_; }
  std::uint64_t mult_order(Elem a) const;
  bool is_square(Elem a) const;
  std::optional<Elem> sqrt(Elem a) const;

 private:
  unsigned degree_;
  std::uint64_t q_;
  std::vector<std::uint8_t> modulus_;
  Elem generator_;
  std::vector<Elem> exp_;  // generator powers, doubled for index sums
  std::vector<std::uint64_t> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_;  // q*q table for small fields, else empty
};

// Shared, cached field per degree. References stay valid for the
// process lifetime.
const Gf3Field& gf_make(unsigned degree);

}  // namespace ospec::ffverify
