#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostka {

struct SizeMismatch : std::invalid_argument {
  SizeMismatch() : std::invalid_argument("partition size mismatch") {}
};

enum class DomOrder { greater, less, equal, incomparable };

/// Weakly decreasing sequence of positive integers; the empty partition is
/// allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-based, zero beyond length
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;
  /// a(lambda) = sum_i C(transpose_i, 2).
  long a_function() const;

  auto operator<=>(const Partition&) const = default;

  /// "3,1" with the empty partition as "-". Round-trips through parse().
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Comparison in the dominance order (requires equal sizes).
DomOrder dominates(const Partition& p, const Partition& q);

/// All partitions of n in descending lexicographic order, (n) first.
std::vector<Partition> enumerate_partitions(int n);

class BiPartition {
 public:
  BiPartition() = default;
  BiPartition(Partition first, Partition second);

  const Partition& first() const { return first_; }
  const Partition& second() const { return second_; }
  int size() const { return first_.size() + second_.size(); }

  BiPartition transpose() const;  // (t(second), t(first))
  /// b = |first| + 2 a(first) + 2 a(second).
  long b_function() const;

  auto operator<=>(const BiPartition&) const = default;

  /// "2,1|3" with "-" for an empty component. Round-trips through parse().
  std::string to_string() const;
  static BiPartition parse(const std::string& text);

 private:
  Partition first_, second_;
};

/// Single box transfer between components: true iff exactly one coordinate of
/// each component differs by -+1/+-1 with everything else fixed.
bool dot_adjacent(const BiPartition& x, const BiPartition& y);

struct Unreachable : std::runtime_error {
  Unreachable() : std::runtime_error("no dot-move chain connects the bipartitions") {}
};

/// Exact graph distance in the dot-move graph on P(n), by BFS (memoized per n).
int distance(const BiPartition& x, const BiPartition& y);

/// P(n) in a fixed deterministic order: |first| descending, then lexicographic.
std::vector<BiPartition> enumerate_bipartitions(int n);

}  // namespace kostka
