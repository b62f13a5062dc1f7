#include "psi/oracle.hpp"

#include <deque>
#include <limits>

#include <omp.h>

namespace psi {

ComponentList::ComponentList(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  for (const std::uint64_t m : moduli_) {
    if (m < 2) throw std::invalid_argument("cyclic component modulus must be >= 2");
    if (order_ > std::numeric_limits<std::uint64_t>::max() / m) {
      throw std::overflow_error("group order does not fit in 64 bits");
    }
    order_ *= m;
  }
}

void ComponentList::require_within(std::uint64_t cap) const {
  if (order_ > cap) {
    throw EnumerationLimitError("group has " + std::to_string(order_) +
                                " elements, above the enumeration cap of " + std::to_string(cap) +
                                " (raise it with --max-enum)");
  }
}

std::uint64_t ComponentList::index_of(const std::vector<std::uint64_t>& residues) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) index = index * moduli_[i] + residues[i];
  return index;
}

std::vector<std::uint64_t> ComponentList::element_at(std::uint64_t index) const {
  std::vector<std::uint64_t> out(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    out[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return out;
}

void validate_element(const ComponentList& c, const ElementTuple& a) {
  if (a.size() != c.rank()) {
    throw std::invalid_argument("element has " + std::to_string(a.size()) +
                                " residues, group has " + std::to_string(c.rank()) +
                                " components");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= c.moduli()[i]) {
      throw std::invalid_argument("residue " + std::to_string(a[i]) + " out of range for Z_" +
                                  std::to_string(c.moduli()[i]));
    }
  }
}

std::uint64_t element_order(const ComponentList& c, const ElementTuple& a) {
  validate_element(c, a);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t m = c.moduli()[i];
    order = lcm(order, m / gcd(m, a[i]));
  }
  return order;
}

namespace {

using u128 = unsigned __int128;

BigNat to_bignat(u128 v) {
  BigNat out = static_cast<std::uint64_t>(v >> 64U);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

// Sum of element orders over indices [begin, end). Walks residues with an
// odometer so each step costs one increment plus the lcm fold.
u128 order_sum_range(const ComponentList& c, std::uint64_t begin, std::uint64_t end) {
  if (begin >= end) return 0;
  const auto& moduli = c.moduli();
  std::vector<std::uint64_t> residues = c.element_at(begin);
  u128 total = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      order = lcm(order, moduli[i] / gcd(moduli[i], residues[i]));
    }
    total += order;
    for (std::size_t i = moduli.size(); i-- > 0;) {
      if (++residues[i] < moduli[i]) break;
      residues[i] = 0;
    }
  }
  return total;
}

}  // namespace

BigNat psi_bruteforce_serial(const ComponentList& c, std::uint64_t cap) {
  c.require_within(cap);
  return to_bignat(order_sum_range(c, 0, c.order()));
}

BigNat psi_bruteforce(const ComponentList& c, std::uint64_t cap) {
  c.require_within(cap);
  const std::uint64_t order = c.order();
  u128 total = 0;
#pragma omp parallel
  {
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t chunk = (order + threads - 1) / threads;
    const std::uint64_t begin = std::min(order, tid * chunk);
    const std::uint64_t end = std::min(order, begin + chunk);
    const u128 local = order_sum_range(c, begin, end);
#pragma omp critical(psi_bruteforce_sum)
    total += local;
  }
  return to_bignat(total);
}

bool SubgroupSet::contains(const ElementTuple& a) const {
  validate_element(group_, a);
  return members_[group_.index_of(a)];
}

std::vector<ElementTuple> SubgroupSet::elements() const {
  std::vector<ElementTuple> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(group_.element_at(i));
  }
  return out;
}

namespace {

ElementTuple add(const ComponentList& c, const ElementTuple& a, const ElementTuple& b) {
  ElementTuple out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t m = c.moduli()[i];
    out[i] = (a[i] + b[i]) % m;
  }
  return out;
}

}  // namespace

SubgroupSet subgroup_closure(const ComponentList& c, const std::vector<ElementTuple>& generators,
                             std::uint64_t cap) {
  c.require_within(cap);
  for (const auto& g : generators) validate_element(c, g);

  SubgroupSet h;
  h.group_ = c;
  h.members_.assign(c.order(), false);
  const ElementTuple identity(c.rank(), 0);
  h.members_[c.index_of(identity)] = true;
  h.size_ = 1;

  // In a finite group, closing {0} under addition of the generators yields
  // the generated subgroup (inverses are positive multiples).
  std::deque<ElementTuple> frontier{identity};
  while (!frontier.empty()) {
    const ElementTuple x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      ElementTuple y = add(c, x, g);
      const std::uint64_t idx = c.index_of(y);
      if (!h.members_[idx]) {
        h.members_[idx] = true;
        ++h.size_;
        frontier.push_back(std::move(y));
      }
    }
  }
  return h;
}

SubgroupSet whole_group(const ComponentList& c, std::uint64_t cap) {
  c.require_within(cap);
  SubgroupSet h;
  h.group_ = c;
  h.members_.assign(c.order(), true);
  h.size_ = c.order();
  return h;
}

std::uint64_t relative_order(const SubgroupSet& h, const ElementTuple& a) {
  const ComponentList& c = h.group();
  validate_element(c, a);
  if (!h.contains_index(c.index_of(ElementTuple(c.rank(), 0)))) {
    throw std::invalid_argument("relative_order: subgroup does not contain the identity");
  }
  ElementTuple multiple = a;
  for (std::uint64_t m = 1;; ++m) {
    if (h.contains_index(c.index_of(multiple))) return m;
    multiple = add(c, multiple, a);
  }
}

BigNat psi_relative(const SubgroupSet& h) {
  const ComponentList& c = h.group();
  u128 total = 0;
  for (std::uint64_t i = 0; i < c.order(); ++i) total += relative_order(h, c.element_at(i));
  return to_bignat(total);
}

}  // namespace psi
