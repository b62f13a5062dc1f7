#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psi/arith.hpp"
#include "psi/partitions.hpp"

namespace psi {

// Dense integer polynomial in x; coeffs()[i] multiplies x^i. The leading
// stored coefficient is never zero, so the zero polynomial has no
// coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& at) const;

  // Descending powers, no spaces, unit coefficients elided:
  // "x^6-x^5+x^4-x+1". The zero polynomial renders as "0".
  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// q with a = b * q over the integers. Throws ExactDivisionError when no such
// q exists and std::invalid_argument when b is zero.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// psi of Z_{x^a_1} x ... x Z_{x^a_k} as a polynomial in the prime:
// x^{n + a_k} - (x - 1) sum_{alpha=0}^{a_k - 1} x^{2 alpha + e(alpha)},
// where x^{e(alpha)} is the f-function.
IntPoly psi_symbolic(const Partition& shape);

// One closed-form family checked against psi_symbolic.
struct ClosedFormCheck {
  std::string family;  // "corollary2a" ... "corollary2e"
  bool equal = false;
  IntPoly closed_form;  // numerator / denominator, when the division was exact
  IntPoly residual;     // psi_symbolic - closed_form, zero on success
  std::string error;    // set when a division was not exact
};

struct ClosedFormReport {
  Partition shape;
  std::vector<ClosedFormCheck> checks;

  bool all_equal() const;
};

// Runs every family that applies to the shape: 2a for [n], 2b for [1,...,1],
// 2c for [1,...,1,2], 2d for two parts, 2e for three parts. Throws
// std::invalid_argument if no family applies.
ClosedFormReport verify_closed_form(const Partition& shape);

}  // namespace psi
