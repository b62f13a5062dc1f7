#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "psi/arith.hpp"
#include "psi/partitions.hpp"

namespace psi {

// Z_{p^a_1} x ... x Z_{p^a_k}.
class PGroupType {
 public:
  // Throws std::invalid_argument if p is not prime.
  PGroupType(std::uint64_t p, Partition shape);

  std::uint64_t p() const { return p_; }
  const Partition& shape() const { return shape_; }
  BigNat order() const { return pow(p_, shape_.n()); }

  friend bool operator==(const PGroupType&, const PGroupType&) = default;

 private:
  std::uint64_t p_;
  Partition shape_;
};

// A finite abelian group as its primary decomposition. The empty map is the
// trivial group.
class AbelianGroupType {
 public:
  using Components = std::map<std::uint64_t, Partition>;

  AbelianGroupType() = default;
  // Throws std::invalid_argument if any key is not prime.
  explicit AbelianGroupType(Components components);

  const Components& components() const { return components_; }
  BigNat order() const;
  bool is_trivial() const { return components_.empty(); }

  // Cyclic factor moduli p^a in (prime, part) order. Throws
  // std::overflow_error when a modulus does not fit in 64 bits.
  std::vector<std::uint64_t> cyclic_moduli() const;

  friend bool operator==(const AbelianGroupType&, const AbelianGroupType&) = default;

 private:
  Components components_;
};

// Exponent e with f_shape(alpha) = p^e, following the piecewise definition:
// (k-1-j)*alpha + a_1 + ... + a_j on a_j <= alpha <= a_{j+1}, and the
// constant a_1 + ... + a_{k-1} from a_{k-1} on.
unsigned f_exponent(const Partition& shape, unsigned alpha);

BigNat f_eval(const Partition& shape, std::uint64_t p, unsigned alpha);

// Reference evaluation:
// 1 + sum_{alpha=1}^{a_k} (p^{2 alpha} f(alpha) - p^{2 alpha - 1} f(alpha - 1)).
BigNat psi_p(const PGroupType& g);

// p^{2 a_k + a_{k-1} + ... + a_1} - (p - 1) sum_{alpha=0}^{a_k - 1} p^{2 alpha} f(alpha).
BigNat psi_p_alt(const PGroupType& g);

// Closed forms for particular shape families. Every division is checked
// exact and throws ExactDivisionError otherwise. Parameters are validated
// with std::invalid_argument.

// Z_{p^n}: (p^{2n+1} + 1) / (p + 1).
BigNat psi_cyclic(std::uint64_t p, unsigned n);
// Z_p^n: p^{n+1} - p + 1.
BigNat psi_elem_abelian(std::uint64_t p, unsigned n);
// Z_{p^2} x Z_p^{n-2}, n >= 2.
BigNat psi_near_elem(std::uint64_t p, unsigned n);
// Z_{p^a1} x Z_{p^a2}, 1 <= a1 <= a2.
BigNat psi_rank2(std::uint64_t p, unsigned a1, unsigned a2);
// Z_{p^a1} x Z_{p^a2} x Z_{p^a3}, 1 <= a1 <= a2 <= a3.
BigNat psi_rank3(std::uint64_t p, unsigned a1, unsigned a2, unsigned a3);

// Product of psi_p over the primary components.
BigNat psi_abelian(const AbelianGroupType& g);

// Every isomorphism type of abelian group of order n, each once. Ordered
// lexicographically by component partitions, smallest prime most
// significant, each prime's partitions in increasing lex order.
// Throws std::invalid_argument for n = 0.
std::vector<AbelianGroupType> group_types_of_order(std::uint64_t n);

}  // namespace psi
