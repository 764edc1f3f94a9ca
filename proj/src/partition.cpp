#include "kostka/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>

namespace kostka {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition();
  std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
  for (int col = 1; col <= parts_[0]; ++col)
    t[static_cast<std::size_t>(col - 1)] =
        static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [col](int p) { return p >= col; }));
  return Partition(std::move(t));
}

long Partition::a_function() const {
  long a = 0;
  Partition t = transpose();
  for (int c : t.parts()) a += static_cast<long>(c) * (c - 1) / 2;
  return a;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) parts.push_back(std::stoi(tok));
  return Partition(std::move(parts));
}

DomOrder dominates(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw SizeMismatch();
  int len = std::max(p.length(), q.length());
  long sp = 0, sq = 0;
  bool ge = true, le = true;
  for (int k = 1; k <= len; ++k) {
    sp += p.part(k);
    sq += q.part(k);
    if (sp < sq) ge = false;
    if (sp > sq) le = false;
  }
  if (ge && le) return DomOrder::equal;
  if (ge) return DomOrder::greater;
  if (le) return DomOrder::less;
  return DomOrder::incomparable;
}

namespace {

void enum_parts(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    enum_parts(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  enum_parts(n, n, cur, out);
  if (n == 0) out = {Partition()};
  return out;
}

BiPartition::BiPartition(Partition first, Partition second)
    : first_(std::move(first)), second_(std::move(second)) {}

BiPartition BiPartition::transpose() const {
  return BiPartition(second_.transpose(), first_.transpose());
}

long BiPartition::b_function() const {
  return first_.size() + 2 * first_.a_function() + 2 * second_.a_function();
}

std::string BiPartition::to_string() const {
  return first_.to_string() + "|" + second_.to_string();
}

BiPartition BiPartition::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("bipartition must contain '|': " + text);
  return BiPartition(Partition::parse(text.substr(0, bar)),
                     Partition::parse(text.substr(bar + 1)));
}

bool dot_adjacent(const BiPartition& x, const BiPartition& y) {
  if (x.size() != y.size()) throw SizeMismatch();
  // Align with trailing zeros; exactly one coordinate of each component must
  // differ, by +1 in one component and -1 in the other.
  int len0 = std::max(x.first().length(), y.first().length()) + 1;
  int len1 = std::max(x.second().length(), y.second().length()) + 1;
  int diff0_pos = 0, diff0_delta = 0, diff0_count = 0;
  for (int i = 1; i <= len0; ++i) {
    int d = x.first().part(i) - y.first().part(i);
    if (d != 0) {
      ++diff0_count;
      diff0_pos = i;
      diff0_delta = d;
    }
  }
  int diff1_delta = 0, diff1_count = 0;
  for (int i = 1; i <= len1; ++i) {
    int d = x.second().part(i) - y.second().part(i);
    if (d != 0) {
      ++diff1_count;
      diff1_delta = d;
    }
  }
  (void)diff0_pos;
  return diff0_count == 1 && diff1_count == 1 && std::abs(diff0_delta) == 1 &&
         diff1_delta == -diff0_delta;
}

std::vector<BiPartition> enumerate_bipartitions(int n) {
  if (n < 0) throw std::invalid_argument("negative bipartition size");
  std::vector<BiPartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : enumerate_partitions(k))
      for (const auto& b : enumerate_partitions(n - k)) out.emplace_back(a, b);
  return out;
}

namespace {

struct DistanceTable {
  std::vector<BiPartition> labels;
  std::map<BiPartition, int> index;
  std::vector<std::vector<int>> dist;  // -1 = unreachable
};

const DistanceTable& distance_table(int n) {
  static std::mutex mu;
  static std::map<int, DistanceTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  DistanceTable t;
  t.labels = enumerate_bipartitions(n);
  for (std::size_t i = 0; i < t.labels.size(); ++i) t.index[t.labels[i]] = static_cast<int>(i);
  std::size_t m = t.labels.size();
  std::vector<std::vector<int>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (dot_adjacent(t.labels[i], t.labels[j])) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
  t.dist.assign(m, std::vector<int>(m, -1));
  for (std::size_t src = 0; src < m; ++src) {
    auto& d = t.dist[src];
    d[src] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(src));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (d[static_cast<std::size_t>(v)] < 0) {
          d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

int distance(const BiPartition& x, const BiPartition& y) {
  if (x.size() != y.size()) throw SizeMismatch();
  const DistanceTable& t = distance_table(x.size());
  int d = t.dist[static_cast<std::size_t>(t.index.at(x))][static_cast<std::size_t>(t.index.at(y))];
  if (d < 0) throw Unreachable();
  return d;
}

}  // namespace kostka
