#include "psi/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "psi/group_spec.hpp"

namespace psi {

MonotonicityReport monotonicity_check(unsigned n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("monotonicity_check: n must be positive");
  MonotonicityReport report;
  report.n = n;
  report.p = p;
  for_each_partition(n, [&](const Partition& shape) {
    report.chain.push_back({shape, psi_p(PGroupType(p, shape))});
  });
  for (std::size_t i = 0; i + 1 < report.chain.size(); ++i) {
    if (report.chain[i + 1].psi <= report.chain[i].psi) report.violations.push_back(i);
  }
  report.min_is_elementary = report.chain.front().psi == psi_elem_abelian(p, n);
  report.max_is_cyclic = report.chain.back().psi == psi_cyclic(p, n);
  return report;
}

OrderScan scan_order(std::uint64_t order) {
  OrderScan scan;
  scan.order = order;
  const std::vector<AbelianGroupType> types = group_types_of_order(order);
  scan.type_count = types.size();
  scan.values.reserve(types.size());
  for (const auto& g : types) scan.values.push_back(psi_abelian(g));

  const BigNat big_order = order;
  for (std::size_t i = 0; i < types.size(); ++i) {
    BigNat q;
    BigNat r;
    boost::multiprecision::divide_qr(scan.values[i], big_order, q, r);
    if (r == 0) scan.divisible.push_back({order, format_group_spec(types[i]), scan.values[i], q});
  }

  if (types.size() > 1) {
    std::vector<std::size_t> idx(types.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return scan.values[a] < scan.values[b]; });
    // Every pair inside a run of equal values is a collision.
    for (std::size_t lo = 0; lo < idx.size();) {
      std::size_t hi = lo + 1;
      while (hi < idx.size() && scan.values[idx[hi]] == scan.values[idx[lo]]) ++hi;
      for (std::size_t a = lo; a < hi; ++a) {
        for (std::size_t b = a + 1; b < hi; ++b) {
          const std::size_t i = std::min(idx[a], idx[b]);
          const std::size_t j = std::max(idx[a], idx[b]);
          scan.collisions.push_back(
              {order, format_group_spec(types[i]), format_group_spec(types[j]), scan.values[i]});
        }
      }
      lo = hi;
    }
  }
  return scan;
}

std::vector<OrderScan> scan_orders_serial(std::uint64_t first, std::uint64_t last) {
  std::vector<OrderScan> out;
  if (first > last) return out;
  out.reserve(last - first + 1);
  for (std::uint64_t n = first; n <= last; ++n) out.push_back(scan_order(n));
  return out;
}

std::vector<OrderScan> scan_orders(std::uint64_t first, std::uint64_t last, int workers) {
  if (first > last) return {};
  const auto count = static_cast<std::int64_t>(last - first + 1);
  std::vector<OrderScan> out(static_cast<std::size_t>(count));
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  // Cost grows with the number of types, which is irregular in n.
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = scan_order(first + static_cast<std::uint64_t>(i));
  }
  return out;
}

SweepCheckpoint conjecture_sweep(std::uint64_t from, std::uint64_t to, SweepCheckpoint checkpoint,
                                 const SweepOptions& options) {
  if (checkpoint.version != kCheckpointVersion) {
    throw CheckpointError("checkpoint version " + std::to_string(checkpoint.version) +
                          " does not match expected version " +
                          std::to_string(kCheckpointVersion));
  }
  if (from < 2 || from > to) throw std::invalid_argument("conjecture_sweep: need 2 <= from <= to");
  if (checkpoint.max_done != 0 && from > checkpoint.max_done + 1) {
    throw std::invalid_argument("conjecture_sweep: range starts at " + std::to_string(from) +
                                " but the checkpoint stops at " +
                                std::to_string(checkpoint.max_done));
  }
  const std::uint64_t block = std::max<std::uint64_t>(1, options.block_size);
  std::uint64_t next = checkpoint.max_done == 0 ? from : checkpoint.max_done + 1;
  while (next <= to) {
    const std::uint64_t last = std::min(to, next + block - 1);
    for (auto& scan : scan_orders(next, last, options.workers)) {
      std::move(scan.collisions.begin(), scan.collisions.end(),
                std::back_inserter(checkpoint.collisions));
      std::move(scan.divisible.begin(), scan.divisible.end(),
                std::back_inserter(checkpoint.divisible_hits));
    }
    checkpoint.max_done = last;
    next = last + 1;
    if (options.on_block && !options.on_block(checkpoint)) break;
  }
  return checkpoint;
}

std::vector<DivisibleHit> divisibility_search(std::uint64_t max_order, int workers) {
  std::vector<DivisibleHit> hits;
  constexpr std::uint64_t kBlock = 4096;
  for (std::uint64_t first = 2; first <= max_order; first += kBlock) {
    const std::uint64_t last = std::min(max_order, first + kBlock - 1);
    for (auto& scan : scan_orders(first, last, workers)) {
      std::move(scan.divisible.begin(), scan.divisible.end(), std::back_inserter(hits));
    }
  }
  return hits;
}

ImageReport image_probe(std::uint64_t max_order, int workers) {
  if (max_order == 0) throw std::invalid_argument("image_probe: max_order must be positive");
  ImageReport report;
  report.max_order = max_order;
  std::set<BigNat> smallest;
  constexpr std::size_t kKeep = 16;
  auto record = [&](const BigNat& v, std::uint64_t order) {
    ++report.type_count;
    if (boost::multiprecision::bit_test(v, 0) == false) report.all_odd = false;
    if (v < 2 * BigNat(order) - 1) report.lower_bound_holds = false;
    if (v == 5) report.five_present = true;
    if (smallest.size() < kKeep || v < *smallest.rbegin()) {
      smallest.insert(v);
      if (smallest.size() > kKeep) smallest.erase(std::prev(smallest.end()));
    }
  };

  // The trivial group.
  record(psi_abelian(AbelianGroupType()), 1);
  constexpr std::uint64_t kBlock = 4096;
  for (std::uint64_t first = 2; first <= max_order; first += kBlock) {
    const std::uint64_t last = std::min(max_order, first + kBlock - 1);
    for (const auto& scan : scan_orders(first, last, workers)) {
      for (const auto& v : scan.values) record(v, scan.order);
    }
  }
  report.smallest_values.assign(smallest.begin(), smallest.end());

  // Any group of order >= 4 has psi >= 2|G| - 1 >= 7 (identity contributes 1,
  // every other element at least 2); orders 1, 2, 3 are enumerated above.
  report.five_absence_conclusive = !report.five_present && max_order >= 3 &&
                                   report.lower_bound_holds;
  if (report.five_absence_conclusive) {
    report.argument =
        "5 is not a value of psi on abelian groups: orders 1, 2, 3 give psi in {1, 3, 7}, and "
        "|G| >= 4 forces psi(G) >= 2|G| - 1 >= 7 because every non-identity element has order "
        ">= 2";
  } else if (report.five_present) {
    report.argument = "5 occurs as a value of psi";
  } else {
    report.argument = "range too small to decide whether 5 is a value of psi";
  }
  return report;
}

}  // namespace psi
