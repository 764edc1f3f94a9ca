#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/ratmatrix.hpp"
#include "kostka/symbols.hpp"
#include "kostka/weylchar.hpp"

namespace kostka::shoji {

using weyl::Family;
using weyl::GroupSpec;

struct InadmissiblePhyla : std::runtime_error {
  explicit InadmissiblePhyla(std::size_t block)
      : std::runtime_error("phyla block " + std::to_string(block) +
                           " yields a singular leading minor"),
        block_index(block) {}
  std::size_t block_index;
};

/// Parameters identifying one Kostka system. For family A the (r, s) data is
/// inert; for BC the phyla is that of the symbol parameters
/// s = s0 + eps_sign * eps.
struct SystemParams {
  Family family = Family::BC;
  int n = 0;
  int r = 2;
  Rat s0 = Rat(1);
  int eps_sign = 0;
};

struct KostkaSystem {
  SystemParams params;
  std::string engine;  // "lusztig-shoji" | "transition" | "asymptotic"
  std::vector<BiPartition> labels;       // flattened phyla order
  std::vector<std::vector<int>> blocks;  // index ranges into labels, in order
  RatMatrix K;                           // unitriangular rows = gch K_chi
  RatMatrix Lambda;                      // block diagonal
};

/// Label rendering: family A drops the empty second component.
std::string label_string(Family f, const BiPartition& label);
BiPartition parse_label(Family f, const std::string& text);

/// Ordered phyla blocks: decreasing a-value. Family A blocks are singletons
/// (any linear extension of reverse dominance); family BC blocks are symbol
/// similarity classes.
std::vector<std::vector<BiPartition>> phyla_blocks(const SystemParams& p);

/// Solves the orthogonality equation tK * Lambda * K = Omega by block LDU
/// with the phyla blocks.
KostkaSystem solve(const SystemParams& p);

/// Graded characters: row chi of K in the simple basis.
std::map<BiPartition, std::map<BiPartition, QPoly>> as_graded_characters(const KostkaSystem& ks);

struct ResidualReport {
  std::size_t nonzero_entries = 0;
  int max_degree = -1;
  bool ok() const { return nonzero_entries == 0; }
};

/// Independently re-multiplies tK * Lambda * K and reports the residual
/// against omega.
ResidualReport verify_orthogonality(const KostkaSystem& ks, const RatMatrix& omega);

/// Positivity and triangularity findings: diagonal 1, entries in N[t], zero
/// off-diagonal constant term. Empty on success.
std::vector<std::string> positivity_findings(const KostkaSystem& ks);

/// Omega in the system's label order.
RatMatrix system_omega(const KostkaSystem& ks);

}  // namespace kostka::shoji
