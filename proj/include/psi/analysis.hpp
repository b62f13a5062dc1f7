#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "psi/arith.hpp"
#include "psi/partitions.hpp"
#include "psi/psi_core.hpp"

namespace psi {

// ---------------------------------------------------------------------------
// Monotonicity along the lexicographic order of types of order p^n.

struct ChainEntry {
  Partition shape;
  BigNat psi;
};

struct MonotonicityReport {
  unsigned n = 0;
  std::uint64_t p = 0;
  std::vector<ChainEntry> chain;
  // Index i such that chain[i + 1].psi <= chain[i].psi.
  std::vector<std::size_t> violations;
  bool min_is_elementary = false;  // chain.front() equals the Z_p^n closed form
  bool max_is_cyclic = false;      // chain.back() equals the Z_{p^n} closed form

  bool ok() const { return violations.empty() && min_is_elementary && max_is_cyclic; }
};

MonotonicityReport monotonicity_check(unsigned n, std::uint64_t p);

// ---------------------------------------------------------------------------
// Per-order scans. scan_orders runs the orders of a range in parallel with
// OpenMP; scan_orders_serial is the reference implementation.

struct CollisionRecord {
  std::uint64_t order = 0;
  std::string first;  // group spec
  std::string second;
  BigNat psi;

  friend bool operator==(const CollisionRecord&, const CollisionRecord&) = default;
};

struct DivisibleHit {
  std::uint64_t order = 0;
  std::string group;
  BigNat psi;
  BigNat quotient;

  friend bool operator==(const DivisibleHit&, const DivisibleHit&) = default;
};

struct OrderScan {
  std::uint64_t order = 0;
  std::size_t type_count = 0;
  std::vector<CollisionRecord> collisions;
  std::vector<DivisibleHit> divisible;
  std::vector<BigNat> values;  // psi of each type, in group_types_of_order order

  friend bool operator==(const OrderScan&, const OrderScan&) = default;
};

OrderScan scan_order(std::uint64_t order);

// Orders first..last inclusive. workers = 0 uses the OpenMP default.
std::vector<OrderScan> scan_orders(std::uint64_t first, std::uint64_t last, int workers = 0);
std::vector<OrderScan> scan_orders_serial(std::uint64_t first, std::uint64_t last);

// ---------------------------------------------------------------------------
// Resumable injectivity sweep.

inline constexpr int kCheckpointVersion = 1;

// Orders from the sweep's starting order through max_done have been scanned.
// max_done = 0 marks a fresh checkpoint.
struct SweepCheckpoint {
  int version = kCheckpointVersion;
  std::uint64_t max_done = 0;
  std::vector<CollisionRecord> collisions;
  std::vector<DivisibleHit> divisible_hits;

  friend bool operator==(const SweepCheckpoint&, const SweepCheckpoint&) = default;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  int workers = 0;
  std::uint64_t block_size = 4096;
  // Called after every completed block with the updated checkpoint. Return
  // false to stop early (the returned checkpoint is then partial).
  std::function<bool(const SweepCheckpoint&)> on_block;
};

// Scans orders in [from, to] not yet covered by the checkpoint. Blocks are
// merged strictly in order, so max_done never skips an unscanned order.
// Throws CheckpointError on a version mismatch and std::invalid_argument when
// from < 2, from > to, or the range would leave a gap after max_done.
SweepCheckpoint conjecture_sweep(std::uint64_t from, std::uint64_t to, SweepCheckpoint checkpoint,
                                 const SweepOptions& options = {});

// ---------------------------------------------------------------------------

// Every abelian type of order <= max_order whose order divides psi.
std::vector<DivisibleHit> divisibility_search(std::uint64_t max_order, int workers = 0);

struct ImageReport {
  std::uint64_t max_order = 0;
  std::uint64_t type_count = 0;
  bool all_odd = true;
  bool lower_bound_holds = true;  // psi(G) >= 2|G| - 1 for every scanned G
  bool five_present = false;
  std::vector<BigNat> smallest_values;  // up to 16 smallest distinct values
  bool five_absence_conclusive = false;
  std::string argument;
};

ImageReport image_probe(std::uint64_t max_order, int workers = 0);

}  // namespace psi
