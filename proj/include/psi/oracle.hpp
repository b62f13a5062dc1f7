#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "psi/arith.hpp"

namespace psi {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Z_{m_1} x ... x Z_{m_r}, every m_i >= 2. An empty list is the trivial group.
class ComponentList {
 public:
  ComponentList() = default;
  // Throws std::invalid_argument for a modulus below 2 and std::overflow_error
  // when the order does not fit in 64 bits.
  explicit ComponentList(std::vector<std::uint64_t> moduli);

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::uint64_t order() const { return order_; }

  // Throws EnumerationLimitError when order() exceeds cap.
  void require_within(std::uint64_t cap) const;

  // Mixed-radix index of an element, first component most significant.
  std::uint64_t index_of(const std::vector<std::uint64_t>& residues) const;
  std::vector<std::uint64_t> element_at(std::uint64_t index) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
};

using ElementTuple = std::vector<std::uint64_t>;

// Throws std::invalid_argument unless a has one residue per component, each
// in range.
void validate_element(const ComponentList& c, const ElementTuple& a);

// lcm over components of m_i / gcd(m_i, a_i).
std::uint64_t element_order(const ComponentList& c, const ElementTuple& a);

// Sum of element orders by full enumeration. The OpenMP kernel splits the
// element index range across threads; the serial version is the reference it
// is tested against.
BigNat psi_bruteforce(const ComponentList& c, std::uint64_t cap = kDefaultEnumerationCap);
BigNat psi_bruteforce_serial(const ComponentList& c, std::uint64_t cap = kDefaultEnumerationCap);

// Subgroup stored as a membership bitmap over element indices.
class SubgroupSet {
 public:
  const ComponentList& group() const { return group_; }
  std::uint64_t size() const { return size_; }
  bool contains(const ElementTuple& a) const;
  bool contains_index(std::uint64_t index) const { return members_[index]; }
  std::vector<ElementTuple> elements() const;

 private:
  friend SubgroupSet subgroup_closure(const ComponentList&, const std::vector<ElementTuple>&,
                                      std::uint64_t);
  friend SubgroupSet whole_group(const ComponentList&, std::uint64_t);

  SubgroupSet() = default;

  ComponentList group_;
  std::vector<bool> members_;
  std::uint64_t size_ = 0;
};

// Smallest subgroup containing the generators; {0} for no generators.
SubgroupSet subgroup_closure(const ComponentList& c, const std::vector<ElementTuple>& generators,
                             std::uint64_t cap = kDefaultEnumerationCap);
SubgroupSet whole_group(const ComponentList& c, std::uint64_t cap = kDefaultEnumerationCap);

// Smallest m >= 1 with m * a in h.
std::uint64_t relative_order(const SubgroupSet& h, const ElementTuple& a);

// Sum of relative_order over the whole group.
BigNat psi_relative(const SubgroupSet& h);

}  // namespace psi
