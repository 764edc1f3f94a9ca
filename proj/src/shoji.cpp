#include "kostka/shoji.hpp"

#include <algorithm>

namespace kostka::shoji {

std::string label_string(Family f, const BiPartition& label) {
  return f == Family::A ? label.first().to_string() : label.to_string();
}

BiPartition parse_label(Family f, const std::string& text) {
  if (f == Family::A) return BiPartition(Partition::parse(text), Partition());
  return BiPartition::parse(text);
}

std::vector<std::vector<BiPartition>> phyla_blocks(const SystemParams& p) {
  std::vector<std::vector<BiPartition>> blocks;
  if (p.family == Family::A) {
    std::vector<Partition> parts = enumerate_partitions(p.n);
    std::sort(parts.begin(), parts.end(), [](const Partition& x, const Partition& y) {
      long ax = x.a_function(), ay = y.a_function();
      if (ax != ay) return ax > ay;  // decreasing a extends reverse dominance
      return x < y;
    });
    for (const auto& q : parts) blocks.push_back({BiPartition(q, Partition())});
  } else {
    symbols::Phyla ph = symbols::build_phyla(p.n, p.r, p.s0, p.eps_sign);
    blocks = std::move(ph.blocks);
  }
  return blocks;
}

RatMatrix system_omega(const KostkaSystem& ks) {
  return weyl::omega_matrix(GroupSpec{ks.params.family, ks.params.n}, ks.labels);
}

KostkaSystem solve(const SystemParams& p) {
  KostkaSystem ks;
  ks.params = p;
  ks.engine = "lusztig-shoji";
  std::vector<std::size_t> sizes;
  int pos = 0;
  for (const auto& block : phyla_blocks(p)) {
    std::vector<int> idx;
    for (const auto& label : block) {
      ks.labels.push_back(label);
      idx.push_back(pos++);
    }
    sizes.push_back(block.size());
    ks.blocks.push_back(std::move(idx));
  }
  RatMatrix omega = system_omega(ks);
  try {
    BlockLDU f = block_ldu(omega, BlockStructure::from_sizes(sizes));
    ks.K = std::move(f.U);
    ks.Lambda = std::move(f.D);
  } catch (const SingularBlock& e) {
    throw InadmissiblePhyla(e.block_index);
  }
  if (!verify_orthogonality(ks, omega).ok())
    throw std::logic_error("factorization failed to reproduce omega");
  return ks;
}

std::map<BiPartition, std::map<BiPartition, QPoly>> as_graded_characters(const KostkaSystem& ks) {
  std::map<BiPartition, std::map<BiPartition, QPoly>> out;
  for (std::size_t i = 0; i < ks.labels.size(); ++i) {
    auto& row = out[ks.labels[i]];
    for (std::size_t j = 0; j < ks.labels.size(); ++j) {
      if (ks.K.at(i, j).is_zero()) continue;
      row[ks.labels[j]] = ks.K.at(i, j).as_polynomial();
    }
  }
  return out;
}

ResidualReport verify_orthogonality(const KostkaSystem& ks, const RatMatrix& omega) {
  RatMatrix residual = ks.K.transposed() * ks.Lambda * ks.K - omega;
  ResidualReport rep;
  for (std::size_t i = 0; i < residual.rows(); ++i)
    for (std::size_t j = 0; j < residual.cols(); ++j) {
      const QRatFun& e = residual.at(i, j);
      if (e.is_zero()) continue;
      ++rep.nonzero_entries;
      rep.max_degree = std::max(rep.max_degree, e.num().degree());
    }
  return rep;
}

std::vector<std::string> positivity_findings(const KostkaSystem& ks) {
  std::vector<std::string> findings;
  auto tag = [&](std::size_t i, std::size_t j) {
    return label_string(ks.params.family, ks.labels[i]) + " / " +
           label_string(ks.params.family, ks.labels[j]);
  };
  for (std::size_t i = 0; i < ks.labels.size(); ++i)
    for (std::size_t j = 0; j < ks.labels.size(); ++j) {
      const QRatFun& e = ks.K.at(i, j);
      if (!e.is_polynomial()) {
        findings.push_back("non-polynomial K entry at " + tag(i, j));
        continue;
      }
      const QPoly& poly = e.as_polynomial();
      if (i == j) {
        if (!poly.is_one()) findings.push_back("diagonal K entry is not 1 at " + tag(i, j));
        continue;
      }
      if (j < i && !poly.is_zero()) {
        findings.push_back("lower-triangular K entry at " + tag(i, j));
        continue;
      }
      if (!poly.is_even())
        findings.push_back("odd powers of q in K entry at " + tag(i, j));
      if (!poly.has_nonneg_int_coeffs())
        findings.push_back("K entry outside N[t] at " + tag(i, j));
      if (poly.coeff(0) != 0)
        findings.push_back("nonzero constant term in off-diagonal K entry at " + tag(i, j));
    }
  return findings;
}

}  // namespace kostka::shoji
