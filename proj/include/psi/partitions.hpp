#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace psi {

// A partition of n stored with parts in non-decreasing order
// (a_1 <= a_2 <= ... <= a_k), the indexing used by the f-function.
class Partition {
 public:
  // Throws std::invalid_argument unless parts is nonempty, positive and
  // non-decreasing.
  explicit Partition(std::vector<unsigned> parts);

  // n ones.
  static Partition elementary(unsigned n);
  // The single part n.
  static Partition cyclic(unsigned n);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned n() const { return n_; }
  unsigned k() const { return static_cast<unsigned>(parts_.size()); }
  unsigned largest() const { return parts_.back(); }

  // "[1,1,2]"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

// Length-n, non-increasing, zero-padded form (a_k, ..., a_1, 0, ..., 0).
class PaddedTuple {
 public:
  // Throws std::invalid_argument unless entries is non-increasing, sums to
  // its own length and has a positive first entry.
  explicit PaddedTuple(std::vector<unsigned> entries);

  const std::vector<unsigned>& entries() const { return entries_; }
  unsigned n() const { return static_cast<unsigned>(entries_.size()); }

  friend bool operator==(const PaddedTuple&, const PaddedTuple&) = default;

 private:
  std::vector<unsigned> entries_;
};

PaddedTuple to_padded_tuple(const Partition& part);
Partition from_padded_tuple(const PaddedTuple& tuple);

// First differing position decides. Throws std::invalid_argument when the
// tuples have different lengths.
std::strong_ordering lex_compare(const PaddedTuple& a, const PaddedTuple& b);

// Shorthand for comparing partitions of the same n through their padded form.
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

// Immediate successor in lexicographic order of padded tuples, or nullopt
// for the cyclic partition [n].
std::optional<Partition> lex_successor(const Partition& part);

// All partitions of n in strictly increasing lexicographic order, starting at
// [1,...,1] and ending at [n]. Throws std::invalid_argument for n = 0.
std::vector<Partition> partitions_of(unsigned n);

// Forward iteration over partitions_of(n) without materializing the list.
template <typename Visitor>
void for_each_partition(unsigned n, Visitor&& visit) {
  std::optional<Partition> cur = Partition::elementary(n);
  while (cur) {
    visit(*cur);
    cur = lex_successor(*cur);
  }
}

}  // namespace psi
