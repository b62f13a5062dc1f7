#include "psi/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psi {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  if (parts_.front() == 0) throw std::invalid_argument("partition parts must be positive");
  if (!std::is_sorted(parts_.begin(), parts_.end())) {
    throw std::invalid_argument("partition parts must be non-decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

Partition Partition::elementary(unsigned n) {
  if (n == 0) throw std::invalid_argument("partition of 0");
  return Partition(std::vector<unsigned>(n, 1U));
}

Partition Partition::cyclic(unsigned n) {
  if (n == 0) throw std::invalid_argument("partition of 0");
  return Partition(std::vector<unsigned>{n});
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

PaddedTuple::PaddedTuple(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() == 0) {
    throw std::invalid_argument("padded tuple must start with a positive entry");
  }
  if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>())) {
    throw std::invalid_argument("padded tuple must be non-increasing");
  }
  const auto sum = std::accumulate(entries_.begin(), entries_.end(), 0ULL);
  if (sum != entries_.size()) {
    throw std::invalid_argument("padded tuple entries must sum to its length");
  }
}

PaddedTuple to_padded_tuple(const Partition& part) {
  std::vector<unsigned> entries(part.parts().rbegin(), part.parts().rend());
  entries.resize(part.n(), 0U);
  return PaddedTuple(std::move(entries));
}

Partition from_padded_tuple(const PaddedTuple& tuple) {
  std::vector<unsigned> parts;
  for (auto it = tuple.entries().rbegin(); it != tuple.entries().rend(); ++it) {
    if (*it != 0) parts.push_back(*it);
  }
  return Partition(std::move(parts));
}

std::strong_ordering lex_compare(const PaddedTuple& a, const PaddedTuple& b) {
  if (a.n() != b.n()) throw std::invalid_argument("lex_compare: tuples differ in length");
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (a.entries()[i] != b.entries()[i]) return a.entries()[i] <=> b.entries()[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  return lex_compare(to_padded_tuple(a), to_padded_tuple(b));
}

std::optional<Partition> lex_successor(const Partition& part) {
  // Work in descending order d_1 >= d_2 >= ... >= d_k. The successor raises
  // the rightmost d_i that can grow by one (d_i < d_{i-1}, or i = 1) while
  // something remains after it, then refills the tail with ones.
  std::vector<unsigned> desc(part.parts().rbegin(), part.parts().rend());
  unsigned tail = 0;
  for (std::size_t i = desc.size(); i-- > 0;) {
    const bool can_grow = i == 0 || desc[i] < desc[i - 1];
    if (can_grow && tail >= 1) {
      desc[i] += 1;
      desc.resize(i + 1);
      desc.insert(desc.end(), tail - 1, 1U);
      return Partition(std::vector<unsigned>(desc.rbegin(), desc.rend()));
    }
    tail += desc[i];
  }
  return std::nullopt;
}

std::vector<Partition> partitions_of(unsigned n) {
  if (n == 0) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace psi
