#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/partition.hpp"
#include "kostka/qpoly.hpp"
#include "kostka/ratmatrix.hpp"

namespace kostka::weyl {

struct RankTooLarge : std::invalid_argument {
  explicit RankTooLarge(int n) : std::invalid_argument("rank " + std::to_string(n) + " exceeds the configured bound") {}
};
struct BadSubgroup : std::invalid_argument {
  explicit BadSubgroup(const std::string& why) : std::invalid_argument("bad subgroup: " + why) {}
};
struct NonPolynomialResult : std::logic_error {
  NonPolynomialResult() : std::logic_error("graded multiplicity did not reduce to a polynomial") {}
};

enum class Family { A, BC };
const char* family_name(Family f);
Family parse_family(const std::string& text);

/// W = S_n (family A, acting on the full n-dimensional permutation
/// representation) or W = S_n wr Z/2 (family BC).
struct GroupSpec {
  Family family = Family::A;
  int n = 0;

  std::vector<int> degrees() const;  // A: 1..n; BC: 2,4,...,2n
  long num_reflections() const;      // A: n(n-1)/2; BC: n^2
  Int order() const;
  bool operator<(const GroupSpec& o) const {
    return family != o.family ? family < o.family : n < o.n;
  }
};

/// Default rank bounds for table construction.
int max_rank(Family f);

/// Exact character table. Irreducibles and conjugacy classes are both labeled
/// by bipartitions; family A uses labels with an empty second component
/// (classes are cycle types, irreducibles the usual partitions with (n) the
/// trivial one). Family BC classes are (positive cycle type, negative cycle
/// type); irreducible labels follow the induced-from-product convention in
/// which (-|n) is trivial and the first component carries the sign twist of
/// the reflection subgroup.
struct CharTable {
  GroupSpec group;
  std::vector<BiPartition> irr_labels;
  std::vector<BiPartition> class_labels;
  std::vector<Int> class_sizes;
  std::vector<std::vector<Int>> values;  // rows = irreducibles

  std::size_t irr_index(const BiPartition& label) const;
  std::size_t class_index(const BiPartition& label) const;
};

/// Builds (or loads from the on-disk cache) the table for g. The returned
/// reference is immutable and safe for concurrent use. Cache location:
/// $KOSTKA_CACHE_DIR, default $HOME/.cache/kostka-tables.
const CharTable& char_table(const GroupSpec& g);

/// Uncached build (always consults the on-disk cache, rebuilding on a missing,
/// stale, or corrupt file). char_table() memoizes this per process.
CharTable build_char_table(const GroupSpec& g);

/// Exact class function, indexed by char_table(g).class_labels.
using ClassFunction = std::vector<Rat>;

Rat inner_product(const ClassFunction& x, const ClassFunction& y, const GroupSpec& g);
ClassFunction irr_class_function(const GroupSpec& g, const BiPartition& label);
/// Character of the reflection representation (the n-dimensional one for A).
ClassFunction reflection_character(const GroupSpec& g);

/// Decomposition into irreducibles; throws if a multiplicity is not a
/// nonnegative integer.
std::map<BiPartition, long> decompose(const ClassFunction& f, const GroupSpec& g);

/// Multiset of irreducible constituents of chi_a * chi_b.
std::map<BiPartition, long> tensor_decompose(const BiPartition& a, const BiPartition& b,
                                             const GroupSpec& g);

BiPartition triv_label(const GroupSpec& g);
BiPartition sgn_label(const GroupSpec& g);

/// One factor of a standardly embedded product subgroup. Family A factors of
/// a BC group embed as the positive (unsigned) permutations.
struct SubgroupFactor {
  Family family;
  int n;
};

/// Induction of a product character from prod_i factors[i] to g; values[i] is
/// a class function on factor i.
ClassFunction induce_character(const std::vector<SubgroupFactor>& factors,
                               const std::vector<ClassFunction>& values, const GroupSpec& g);

/// Graded multiplicity of chi in the coinvariant algebra (the fake degree),
/// as a polynomial in t = q^2.
QPoly coinvariant_multiplicity(const BiPartition& chi, const GroupSpec& g);

/// Omega matrix in the given label order: Omega_{chi,eta} = graded multiplicity
/// of the trivial in chi tensor eta tensor the coinvariant algebra.
RatMatrix omega_matrix(const GroupSpec& g, const std::vector<BiPartition>& labels);

/// Character of the k-th exterior power of the squarefree (positive) part of
/// the BC reflection representation: Ind from W_k x W_{n-k} of Lsgn x triv.
ClassFunction exterior_plus_character(const GroupSpec& g, int k);

/// Graded character of the type-A standard module M_lambda in the simple
/// basis: [M_lambda : L_mu] via the charge statistic on semistandard tableaux
/// of shape mu and content lambda (entries are polynomials in t = q^2).
std::map<Partition, QPoly> graded_char_M_lambda(const Partition& lambda);

/// Charge of a word over 1..n whose content is a partition (exposed for
/// testing against hand-computed values).
int charge_statistic(const std::vector<int>& word);

}  // namespace kostka::weyl
