#include "psi/partitions.hpp"

#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

namespace psi {
namespace {

// Number of partitions of n with parts <= k, by the standard recurrence.
std::uint64_t partition_count(unsigned n, unsigned k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  if (k > n) return partition_count(n, n);
  return partition_count(n, k - 1) + partition_count(n - k, k);
}

// All partitions of n as padded descending vectors, generated recursively and
// sorted with std::lexicographical_compare.
std::vector<std::vector<unsigned>> padded_partitions_oracle(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
    if (rest == 0) {
      auto padded = cur;
      padded.resize(n, 0U);
      out.push_back(padded);
      return;
    }
    for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({}), std::invalid_argument);
  EXPECT_THROW(Partition({0, 1}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 1}), std::invalid_argument);
  const Partition p({1, 1, 2});
  EXPECT_EQ(p.n(), 4U);
  EXPECT_EQ(p.k(), 3U);
  EXPECT_EQ(p.largest(), 2U);
  EXPECT_EQ(p.to_string(), "[1,1,2]");
}

TEST(PaddedTuple, Examples) {
  EXPECT_EQ(to_padded_tuple(Partition({1, 3})).entries(), (std::vector<unsigned>{3, 1, 0, 0}));
  EXPECT_EQ(to_padded_tuple(Partition({4})).entries(), (std::vector<unsigned>{4, 0, 0, 0}));
  EXPECT_EQ(to_padded_tuple(Partition({1, 1, 1, 1})).entries(),
            (std::vector<unsigned>{1, 1, 1, 1}));
  EXPECT_THROW(PaddedTuple({1, 2, 1, 0}), std::invalid_argument);
  EXPECT_THROW(PaddedTuple({3, 0}), std::invalid_argument);
  EXPECT_NO_THROW(PaddedTuple({3, 0, 0}));
  EXPECT_THROW(PaddedTuple({0}), std::invalid_argument);
}

TEST(PaddedTuple, RoundTripsToThirty) {
  for (unsigned n = 1; n <= 30; ++n) {
    for (const auto& p : partitions_of(n)) {
      const PaddedTuple t = to_padded_tuple(p);
      ASSERT_EQ(t.n(), n);
      ASSERT_EQ(from_padded_tuple(t), p);
    }
  }
}

TEST(LexCompare, Examples) {
  EXPECT_EQ(lex_compare(PaddedTuple({1, 1, 1, 1}), PaddedTuple({2, 1, 1, 0})),
            std::strong_ordering::less);
  EXPECT_EQ(lex_compare(PaddedTuple({2, 2, 0, 0}), PaddedTuple({3, 1, 0, 0})),
            std::strong_ordering::less);
  EXPECT_EQ(lex_compare(PaddedTuple({4, 0, 0, 0}), PaddedTuple({4, 0, 0, 0})),
            std::strong_ordering::equal);
  EXPECT_EQ(lex_compare(PaddedTuple({3, 1, 0, 0}), PaddedTuple({2, 2, 0, 0})),
            std::strong_ordering::greater);
}

TEST(LexCompare, RejectsUnequalLengths) {
  EXPECT_THROW(lex_compare(PaddedTuple({1, 1}), PaddedTuple({3, 0, 0})), std::invalid_argument);
}

TEST(LexCompare, TotalOrderUpToTwelve) {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        const auto ab = lex_compare(a, b);
        const auto ba = lex_compare(b, a);
        // Antisymmetry and trichotomy.
        ASSERT_EQ(ab == std::strong_ordering::equal, a == b);
        ASSERT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
      }
    }
    if (n > 8) continue;  // transitivity is cubic
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        for (const auto& c : parts) {
          if (lex_compare(a, b) < 0 && lex_compare(b, c) < 0) ASSERT_TRUE(lex_compare(a, c) < 0);
        }
      }
    }
  }
}

TEST(PartitionsOf, Examples) {
  const auto four = partitions_of(4);
  const std::vector<Partition> expected{Partition({1, 1, 1, 1}), Partition({1, 1, 2}),
                                        Partition({2, 2}), Partition({1, 3}), Partition({4})};
  EXPECT_EQ(four, expected);
  EXPECT_EQ(partitions_of(1), std::vector<Partition>{Partition({1})});
  EXPECT_EQ(partitions_of(10).size(), partition_count(10, 10));
  EXPECT_EQ(partition_count(10, 10), 42U);
  EXPECT_THROW(partitions_of(0), std::invalid_argument);
}

TEST(PartitionsOf, MatchesRecursiveOracleToThirty) {
  for (unsigned n = 1; n <= 30; ++n) {
    const auto ours = partitions_of(n);
    const auto oracle = padded_partitions_oracle(n);
    ASSERT_EQ(ours.size(), oracle.size()) << n;
    ASSERT_EQ(ours.size(), partition_count(n, n)) << n;
    for (std::size_t i = 0; i < ours.size(); ++i) {
      ASSERT_EQ(to_padded_tuple(ours[i]).entries(), oracle[i]) << "n=" << n << " i=" << i;
    }
  }
}

TEST(LexSuccessor, Examples) {
  EXPECT_EQ(lex_successor(Partition({1, 1, 1, 1})), Partition({1, 1, 2}));
  EXPECT_EQ(lex_successor(Partition({2, 2})), Partition({1, 3}));
  EXPECT_EQ(lex_successor(Partition({4})), std::nullopt);
  EXPECT_EQ(lex_successor(Partition({1})), std::nullopt);
}

TEST(LexSuccessor, ChainVisitsEveryPartitionToThirty) {
  for (unsigned n = 1; n <= 30; ++n) {
    const auto all = partitions_of(n);
    std::optional<Partition> cur = Partition::elementary(n);
    std::size_t i = 0;
    while (cur) {
      ASSERT_LT(i, all.size());
      ASSERT_EQ(*cur, all[i]);
      auto next = lex_successor(*cur);
      if (next) ASSERT_EQ(lex_compare(*cur, *next), std::strong_ordering::less);
      cur = std::move(next);
      ++i;
    }
    EXPECT_EQ(i, all.size());
    EXPECT_EQ(all.back(), Partition::cyclic(n));
  }
}

TEST(LexSuccessor, LargeExponent) {
  // p(64) = 1741630; stream the chain without materializing it.
  std::uint64_t count = 0;
  for_each_partition(64, [&](const Partition&) { ++count; });
  EXPECT_EQ(count, partition_count(64, 64));
}

}  // namespace
}  // namespace psi
