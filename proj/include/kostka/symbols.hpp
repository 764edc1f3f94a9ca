#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "kostka/partition.hpp"
#include "kostka/rational.hpp"

namespace kostka::symbols {

struct MTooSmall : std::invalid_argument {
  MTooSmall() : std::invalid_argument("symbol parameter m is too small") {}
};
struct ParamMismatch : std::invalid_argument {
  ParamMismatch() : std::invalid_argument("symbols built with different (r, s, m)") {}
};

/// Exact value of the form c + e * eps with eps an infinitesimal.
struct EpsRat {
  Rat c;
  long e = 0;
  auto operator<=>(const EpsRat& o) const {
    if (auto cmp = c.compare(o.c); cmp != 0) return cmp <=> 0;
    return e <=> o.e;
  }
  bool operator==(const EpsRat& o) const { return c == o.c && e == o.e; }
};

/// One symbol entry: base + s_flag * s where s = s0 + eps_sign * eps.
struct ParamEntry {
  long base = 0;
  int s_flag = 0;
};

struct Symbol {
  int r = 2;
  Rat s0;
  int eps_sign = 0;
  int m = 0;
  BiPartition source;
  std::vector<ParamEntry> row0;  // m+1 entries, weakly decreasing, last = 0
  std::vector<ParamEntry> row1;  // m+1 entries, weakly decreasing, last = s

  EpsRat value(const ParamEntry& e) const {
    return EpsRat{Rat(e.base) + (e.s_flag ? s0 : Rat(0)), e.s_flag ? long(eps_sign) : 0};
  }
  /// All 2(m+1) entry values, sorted ascending.
  std::vector<EpsRat> sorted_entries() const;
};

/// m large enough for the "m >> n" regime at desk scale.
int canonical_m(int n, int r, const Rat& s0);

Symbol build_symbol(const BiPartition& bp, int r, const Rat& s0, int eps_sign, int m);

/// a_s as (constant, eps coefficient): sum of min over unordered distinct
/// entry pairs, normalized by the empty symbol at the same parameters.
EpsRat a_s_value(const Symbol& sym);

/// Multiset equality of entry values (requires equal (r, s0, eps_sign, m)).
bool similar(const Symbol& x, const Symbol& y);

/// Strong similarity class data for integral s: E(S) holds the minimal entries
/// of the swappable even runs, sigma maps each member to the subset of E(S)
/// its second row contains, run_lengths maps p to q_p.
struct StrongClass {
  std::vector<BiPartition> members;
  std::vector<long> e_set;
  std::map<long, int> run_lengths;
  std::map<BiPartition, std::set<long>> sigma;
};

/// Strong similarity classes of Z^{r,s}_n (s a positive integer), computed by
/// closing the pair-swap relation inside each similarity class.
std::vector<StrongClass> strong_classes(int n, int r, long s);

struct Phyla {
  std::vector<std::vector<BiPartition>> blocks;  // decreasing a-value
  std::vector<EpsRat> a_values;                  // one per block
};

Phyla build_phyla(int n, int r, const Rat& s0, int eps_sign);

enum class GroupKind { symplectic, odd_orthogonal, even_orthogonal };
GroupKind group_dictionary(long s);
const char* group_kind_name(GroupKind k);

}  // namespace kostka::symbols
