#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kostka/partition.hpp"

using namespace kostka;

TEST_CASE("partition validation and accessors") {
  Partition p({3, 2, 2});
  CHECK(p.size() == 7);
  CHECK(p.length() == 3);
  CHECK(p.part(1) == 3);
  CHECK(p.part(4) == 0);
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
  CHECK(Partition().empty());
  CHECK(Partition().size() == 0);
}

TEST_CASE("transpose is an involution") {
  Partition p({4, 2, 1});
  CHECK(p.transpose() == Partition({3, 2, 1, 1}));
  for (int n = 0; n <= 7; ++n)
    for (const auto& q : enumerate_partitions(n)) CHECK(q.transpose().transpose() == q);
}

TEST_CASE("a-function values") {
  // a(lambda) = sum of C(col, 2) over transpose columns
  CHECK(Partition().a_function() == 0);
  CHECK(Partition({3}).a_function() == 0);
  CHECK(Partition({1, 1, 1}).a_function() == 3);
  CHECK(Partition({2, 1}).a_function() == 1);
  CHECK(Partition({2, 2}).a_function() == 2);
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({3}), Partition({2, 1})) == DomOrder::greater);
  CHECK(dominates(Partition({1, 1, 1}), Partition({2, 1})) == DomOrder::less);
  CHECK(dominates(Partition({2, 1}), Partition({2, 1})) == DomOrder::equal);
  CHECK(dominates(Partition({3, 3}), Partition({4, 1, 1})) == DomOrder::incomparable);
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({3})), SizeMismatch);
}

TEST_CASE("partition enumeration order") {
  auto ps = enumerate_partitions(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps[0] == Partition({4}));
  CHECK(ps[1] == Partition({3, 1}));
  CHECK(ps[2] == Partition({2, 2}));
  CHECK(ps[3] == Partition({2, 1, 1}));
  CHECK(ps[4] == Partition({1, 1, 1, 1}));
  CHECK(enumerate_partitions(0).size() == 1);
  // p(n) for n = 0..9
  int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < 10; ++n)
    CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("partition text round-trip") {
  CHECK(Partition({3, 1}).to_string() == "3,1");
  CHECK(Partition().to_string() == "-");
  CHECK(Partition::parse("3,1") == Partition({3, 1}));
  CHECK(Partition::parse("-") == Partition());
  for (const auto& p : enumerate_partitions(6)) CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("bipartition basics") {
  BiPartition bp(Partition({2, 1}), Partition({3}));
  CHECK(bp.size() == 6);
  CHECK(bp.to_string() == "2,1|3");
  CHECK(BiPartition::parse("2,1|3") == bp);
  CHECK(BiPartition::parse("-|2").first().empty());
  CHECK(bp.transpose() == BiPartition(Partition({1, 1, 1}), Partition({2, 1})));
  // b-function: |first| + 2 a(first) + 2 a(second)
  CHECK(bp.b_function() == 3 + 2 * 1 + 2 * 0);
  CHECK(BiPartition(Partition(), Partition({1, 1})).b_function() == 2);
}

TEST_CASE("bipartition enumeration matches the documented order at n = 2") {
  auto bs = enumerate_bipartitions(2);
  REQUIRE(bs.size() == 5);
  CHECK(bs[0].to_string() == "2|-");
  CHECK(bs[1].to_string() == "1,1|-");
  CHECK(bs[2].to_string() == "1|1");
  CHECK(bs[3].to_string() == "-|2");
  CHECK(bs[4].to_string() == "-|1,1");
  // counts: sum over k of p(k) p(n-k)
  CHECK(enumerate_bipartitions(0).size() == 1);
  CHECK(enumerate_bipartitions(3).size() == 10);
  CHECK(enumerate_bipartitions(4).size() == 20);
}

TEST_CASE("single box moves") {
  BiPartition a(Partition({1}), Partition({1}));
  BiPartition b(Partition({2}), Partition());
  BiPartition c(Partition(), Partition({2}));
  BiPartition d(Partition({1, 1}), Partition());
  CHECK(dot_adjacent(a, b));
  CHECK(dot_adjacent(a, c));
  CHECK(dot_adjacent(a, d));
  CHECK_FALSE(dot_adjacent(b, c));  // needs two box moves
  CHECK_FALSE(dot_adjacent(b, d));  // same component reshuffle is not one move
  CHECK_FALSE(dot_adjacent(a, a));
  CHECK_THROWS_AS(dot_adjacent(a, BiPartition(Partition({3}), Partition())), SizeMismatch);
}

TEST_CASE("move-graph distance") {
  BiPartition a(Partition({1}), Partition({1}));
  BiPartition b(Partition({2}), Partition());
  BiPartition c(Partition(), Partition({2}));
  CHECK(distance(a, a) == 0);
  CHECK(distance(a, b) == 1);
  CHECK(distance(b, c) == 2);
  CHECK(distance(b, c) == distance(c, b));
  // triangle inequality over all of n = 3
  auto bs = enumerate_bipartitions(3);
  for (const auto& x : bs)
    for (const auto& y : bs)
      for (const auto& z : bs) CHECK(distance(x, z) <= distance(x, y) + distance(y, z));
}
