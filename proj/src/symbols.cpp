#include "kostka/symbols.hpp"

#include <algorithm>
#include <optional>

namespace kostka::symbols {

std::vector<EpsRat> Symbol::sorted_entries() const {
  std::vector<EpsRat> v;
  v.reserve(row0.size() + row1.size());
  for (const auto& e : row0) v.push_back(value(e));
  for (const auto& e : row1) v.push_back(value(e));
  std::sort(v.begin(), v.end());
  return v;
}

int canonical_m(int n, int r, const Rat& s0) {
  // ceil(s0 / r)
  Int num = numerator(s0), den = denominator(s0) * r;
  Int q = num / den;
  if (num > q * den) ++q;
  return n + static_cast<int>(q) + 2;
}

Symbol build_symbol(const BiPartition& bp, int r, const Rat& s0, int eps_sign, int m) {
  if (r < 1) throw std::invalid_argument("symbol offset r must be positive");
  if (m < std::max(bp.first().length(), bp.second().length())) throw MTooSmall();
  Symbol sym;
  sym.r = r;
  sym.s0 = s0;
  sym.eps_sign = eps_sign;
  sym.m = m;
  sym.source = bp;
  sym.row0.reserve(static_cast<std::size_t>(m) + 1);
  sym.row1.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m + 1; ++i) {
    sym.row0.push_back(ParamEntry{bp.first().part(i) + static_cast<long>(r) * (m + 1 - i), 0});
    sym.row1.push_back(ParamEntry{bp.second().part(i) + static_cast<long>(r) * (m + 1 - i), 1});
  }
  return sym;
}

namespace {

/// Sum of min over unordered distinct pairs of the sorted values.
EpsRat pair_min_sum(const std::vector<EpsRat>& sorted) {
  EpsRat acc{Rat(0), 0};
  long k = static_cast<long>(sorted.size());
  for (long i = 0; i < k; ++i) {
    long mult = k - 1 - i;  // pairs where sorted[i] is the minimum
    acc.c += sorted[static_cast<std::size_t>(i)].c * mult;
    acc.e += sorted[static_cast<std::size_t>(i)].e * mult;
  }
  return acc;
}

}  // namespace

EpsRat a_s_value(const Symbol& sym) {
  EpsRat total = pair_min_sum(sym.sorted_entries());
  Symbol base = build_symbol(BiPartition(), sym.r, sym.s0, sym.eps_sign, sym.m);
  EpsRat ref = pair_min_sum(base.sorted_entries());
  return EpsRat{total.c - ref.c, total.e - ref.e};
}

bool similar(const Symbol& x, const Symbol& y) {
  if (x.r != y.r || x.s0 != y.s0 || x.eps_sign != y.eps_sign || x.m != y.m)
    throw ParamMismatch();
  return x.sorted_entries() == y.sorted_entries();
}

namespace {

struct IntSymbol {
  std::vector<long> row0, row1;  // entry values, sorted descending
};

IntSymbol int_symbol(const BiPartition& bp, int r, long s, int m) {
  Symbol sym = build_symbol(bp, r, Rat(s), 0, m);
  IntSymbol is;
  for (const auto& e : sym.row0) is.row0.push_back(e.base);
  for (const auto& e : sym.row1) is.row1.push_back(e.base + s);
  return is;
}

/// Strips the defining staircases; nullopt when the rows are not a symbol.
std::optional<BiPartition> strip(const IntSymbol& is, int r, long s, int m) {
  auto strip_row = [&](const std::vector<long>& row, long shift) -> std::optional<Partition> {
    std::vector<long> sorted(row);
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<int> parts;
    for (int i = 1; i <= m + 1; ++i) {
      long v = sorted[static_cast<std::size_t>(i - 1)] - static_cast<long>(r) * (m + 1 - i) - shift;
      if (v < 0) return std::nullopt;
      parts.push_back(static_cast<int>(v));
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) return std::nullopt;
    return Partition(std::move(parts));
  };
  auto p0 = strip_row(is.row0, 0);
  if (!p0) return std::nullopt;
  auto p1 = strip_row(is.row1, s);
  if (!p1) return std::nullopt;
  return BiPartition(*p0, *p1);
}

/// Maximal runs of consecutive values, each with multiplicity one and even
/// length, in the union multiset of the two rows.
std::vector<std::pair<long, int>> candidate_runs(const IntSymbol& is) {
  std::map<long, int> count;
  for (long v : is.row0) ++count[v];
  for (long v : is.row1) ++count[v];
  std::vector<std::pair<long, int>> runs;
  auto it = count.begin();
  while (it != count.end()) {
    long p = it->first;
    bool mult_one = true;
    long q = p;
    while (true) {
      if (it->second != 1) mult_one = false;
      auto next = std::next(it);
      if (next == count.end() || next->first != q + 1) break;
      it = next;
      q = it->first;
    }
    int len = static_cast<int>(q - p + 1);
    if (mult_one && len % 2 == 0) runs.emplace_back(p, len);
    ++it;
  }
  return runs;
}

/// Swaps the run starting at p between the rows; nullopt if the result leaves Z.
std::optional<BiPartition> swap_run(const IntSymbol& is, long p, int len, int r, long s, int m) {
  IntSymbol out;
  auto move = [&](const std::vector<long>& from, std::vector<long>& same, std::vector<long>& other) {
    for (long v : from) {
      if (v >= p && v < p + len)
        other.push_back(v);
      else
        same.push_back(v);
    }
  };
  std::vector<long> r0, r1;
  move(is.row0, r0, r1);
  move(is.row1, r1, r0);
  out.row0 = std::move(r0);
  out.row1 = std::move(r1);
  if (out.row0.size() != is.row0.size() || out.row1.size() != is.row1.size()) return std::nullopt;
  return strip(out, r, s, m);
}

}  // namespace

std::vector<StrongClass> strong_classes(int n, int r, long s) {
  if (s < 1) throw std::invalid_argument("strong classes require a positive integer s");
  int m = canonical_m(n, r, Rat(s));
  auto labels = enumerate_bipartitions(n);
  std::map<BiPartition, IntSymbol> syms;
  for (const auto& bp : labels) syms.emplace(bp, int_symbol(bp, r, s, m));

  // Similarity grouping by the sorted union multiset.
  std::map<std::vector<long>, std::vector<BiPartition>> sim;
  for (const auto& bp : labels) {
    std::vector<long> key(syms[bp].row0);
    key.insert(key.end(), syms[bp].row1.begin(), syms[bp].row1.end());
    std::sort(key.begin(), key.end());
    sim[std::move(key)].push_back(bp);
  }

  std::vector<StrongClass> out;
  for (auto& [key, members] : sim) {
    std::set<BiPartition> remaining(members.begin(), members.end());
    while (!remaining.empty()) {
      // Swap-closure from the first remaining member.
      std::vector<BiPartition> comp;
      std::vector<BiPartition> queue{*remaining.begin()};
      remaining.erase(remaining.begin());
      while (!queue.empty()) {
        BiPartition cur = queue.back();
        queue.pop_back();
        comp.push_back(cur);
        const IntSymbol& is = syms[cur];
        for (auto [p, len] : candidate_runs(is)) {
          auto next = swap_run(is, p, len, r, s, m);
          if (!next) continue;
          auto it = remaining.find(*next);
          if (it != remaining.end()) {
            queue.push_back(*it);
            remaining.erase(it);
          }
        }
      }
      std::sort(comp.begin(), comp.end());

      StrongClass sc;
      sc.members = comp;
      // E(S): runs on which members actually differ.
      const IntSymbol& rep = syms[comp.front()];
      for (auto [p, len] : candidate_runs(rep)) {
        bool in_row1_first =
            std::find(syms[comp.front()].row1.begin(), syms[comp.front()].row1.end(), p) !=
            syms[comp.front()].row1.end();
        bool varies = false;
        for (const auto& bp : comp) {
          bool in_row1 = std::find(syms[bp].row1.begin(), syms[bp].row1.end(), p) !=
                         syms[bp].row1.end();
          if (in_row1 != in_row1_first) varies = true;
        }
        if (varies) {
          sc.e_set.push_back(p);
          sc.run_lengths[p] = len;
        }
      }
      for (const auto& bp : comp) {
        std::set<long> sigma;
        for (long p : sc.e_set)
          if (std::find(syms[bp].row1.begin(), syms[bp].row1.end(), p) != syms[bp].row1.end())
            sigma.insert(p);
        sc.sigma[bp] = std::move(sigma);
      }
      // Lemma-level sanity: members biject onto the power set of E(S).
      std::set<std::set<long>> images;
      for (const auto& [bp, sg] : sc.sigma) images.insert(sg);
      if (images.size() != sc.members.size() ||
          sc.members.size() != (std::size_t{1} << sc.e_set.size()))
        throw std::logic_error("strong class is not a boolean lattice over E(S)");
      out.push_back(std::move(sc));
    }
  }
  return out;
}

Phyla build_phyla(int n, int r, const Rat& s0, int eps_sign) {
  int m = canonical_m(n, r, s0);
  auto labels = enumerate_bipartitions(n);
  std::map<std::vector<EpsRat>, std::vector<BiPartition>> sim;
  std::map<std::vector<EpsRat>, EpsRat> avals;
  for (const auto& bp : labels) {
    Symbol sym = build_symbol(bp, r, s0, eps_sign, m);
    auto key = sym.sorted_entries();
    auto it = sim.find(key);
    if (it == sim.end()) {
      avals.emplace(key, a_s_value(sym));
      sim[key].push_back(bp);
    } else {
      it->second.push_back(bp);
    }
  }
  struct Block {
    EpsRat a;
    std::vector<BiPartition> members;
    std::string tiebreak;
  };
  std::vector<Block> blocks;
  for (auto& [key, members] : sim) {
    std::sort(members.begin(), members.end());
    std::string tb = members.front().to_string();
    for (const auto& bp : members) tb = std::min(tb, bp.to_string());
    blocks.push_back(Block{avals[key], std::move(members), std::move(tb)});
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    if (x.a != y.a) return y.a < x.a;  // decreasing a-value
    return x.tiebreak < y.tiebreak;
  });
  Phyla ph;
  for (auto& b : blocks) {
    ph.blocks.push_back(std::move(b.members));
    ph.a_values.push_back(b.a);
  }
  return ph;
}

GroupKind group_dictionary(long s) {
  if (s < 1) throw std::invalid_argument("group dictionary requires a positive integer s");
  if (s % 2 == 1) return GroupKind::symplectic;
  if (s % 4 == 2) return GroupKind::odd_orthogonal;
  return GroupKind::even_orthogonal;
}

const char* group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::symplectic: return "symplectic";
    case GroupKind::odd_orthogonal: return "odd-orthogonal";
    case GroupKind::even_orthogonal: return "even-orthogonal";
  }
  return "?";
}

}  // namespace kostka::symbols
