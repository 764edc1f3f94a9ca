#include "kostka/transition.hpp"

#include <algorithm>
#include <cstddef>
#include <mutex>

namespace kostka::transition {

using weyl::ClassFunction;
using weyl::GroupSpec;
using shoji::Family;

namespace {

void prune(GradedChar& g) {
  for (auto it = g.begin(); it != g.end();)
    it->second.is_zero() ? it = g.erase(it) : ++it;
}

ClassFunction pointwise(const ClassFunction& x, const ClassFunction& y) {
  ClassFunction r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * y[i];
  return r;
}

void accumulate(ClassFunction& acc, const ClassFunction& x, const Rat& c) {
  if (acc.empty()) acc.assign(x.size(), Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += c * x[i];
}

/// Pullback of the S_a irreducible mu along the cycle-type fusion map: the
/// value at a hyperoctahedral class (alpha, beta) is chi_mu at alpha cup beta.
ClassFunction pullback_sym(const Partition& mu, int a) {
  GroupSpec sym{Family::A, a}, hyp{Family::BC, a};
  const weyl::CharTable& st = weyl::char_table(sym);
  const weyl::CharTable& ht = weyl::char_table(hyp);
  ClassFunction chi = weyl::irr_class_function(sym, BiPartition(mu, Partition()));
  ClassFunction out(ht.class_labels.size());
  for (std::size_t i = 0; i < ht.class_labels.size(); ++i) {
    std::vector<int> parts = ht.class_labels[i].first().parts();
    for (int p : ht.class_labels[i].second().parts()) parts.push_back(p);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    out[i] = chi[st.class_index(BiPartition(Partition(parts), Partition()))];
  }
  return out;
}

/// Graded class function (keyed by q-degree) of the exterior-twisted standard
/// family on W_a: the long-sign twist of
/// sum_k t^k ch(Lambda^k_+ h) * (gch M_lambda0 pulled back, t -> t^2).
std::map<int, ClassFunction> exterior_twisted_family(int a, const Partition& lambda0) {
  GroupSpec hyp{Family::BC, a};
  const weyl::CharTable& ht = weyl::char_table(hyp);
  std::map<int, ClassFunction> standard;  // pulled-back gch M with t -> t^2
  for (const auto& [mu, poly] : weyl::graded_char_M_lambda(lambda0)) {
    ClassFunction pb = pullback_sym(mu, a);
    QPoly doubled = poly.power_substitute(2);
    for (int d = 0; d <= doubled.degree(); ++d)
      if (doubled.coeff(d) != 0) accumulate(standard[d], pb, doubled.coeff(d));
  }
  std::map<int, ClassFunction> out;
  for (int k = 0; k <= a; ++k) {
    ClassFunction ext = weyl::exterior_plus_character(hyp, k);
    for (const auto& [d, cf] : standard) accumulate(out[d + 2 * k], pointwise(ext, cf), Rat(1));
  }
  for (auto& [d, cf] : out)
    for (std::size_t i = 0; i < cf.size(); ++i)
      if (ht.class_labels[i].second().length() % 2 == 1) cf[i] = -cf[i];
  return out;
}

void add_decomposition(GradedChar& row, const ClassFunction& cf, int qdeg, const GroupSpec& g) {
  for (const auto& [mu, mult] : weyl::decompose(cf, g))
    if (mult != 0) row[mu] += QPoly::monomial(Rat(mult), qdeg);
}

std::string sigma_string(const std::set<long>& sigma) {
  std::string out = "{";
  for (long p : sigma) {
    if (out.size() > 1) out += ",";
    out += std::to_string(p);
  }
  return out + "}";
}

void record_classes(StepTrace& tr, const std::vector<symbols::StrongClass>& classes) {
  for (const auto& sc : classes) {
    StepTrace::ClassInfo info;
    for (const auto& m : sc.members) {
      info.members.push_back(m.to_string());
      info.sigma.push_back(sigma_string(sc.sigma.at(m)));
      info.distances.push_back(distance(sc.members.front(), m));
    }
    tr.classes.push_back(std::move(info));
  }
}

void check_natural(const GradedChar& row, const BiPartition& label) {
  for (const auto& [mu, poly] : row)
    if (!poly.is_even() || !poly.has_nonneg_int_coeffs())
      throw NegativeCoefficient(label.to_string());
}

const GradedChar& family_row(const CharFamily& fam, const BiPartition& label) {
  auto it = fam.find(label);
  if (it == fam.end()) throw ClassMismatch(label.to_string());
  return it->second;
}

bool subset_of(const std::set<long>& x, const std::set<long>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

/// Shared body of the two midpoint moves: sum t^{d(lam, mu)} * base[mu] over
/// class members mu whose sigma compares with sigma(lam) on the given side.
CharFamily midpoint(int n, int r, long class_level, const CharFamily& base, bool want_subsets) {
  CharFamily out;
  for (const auto& sc : symbols::strong_classes(n, r, class_level)) {
    for (const auto& lam : sc.members) {
      const std::set<long>& sig_l = sc.sigma.at(lam);
      GradedChar acc;
      for (const auto& mu : sc.members) {
        const std::set<long>& sig_m = sc.sigma.at(mu);
        bool take = want_subsets ? subset_of(sig_m, sig_l) : subset_of(sig_l, sig_m);
        if (!take) continue;
        QPoly shift = QPoly::t_monomial(Rat(1), distance(lam, mu));
        for (const auto& [nu, poly] : family_row(base, mu)) acc[nu] += shift * poly;
      }
      prune(acc);
      out[lam] = std::move(acc);
    }
  }
  return out;
}

/// Shared body of the two inversions: peel the boolean-lattice sum, solving
/// members with extremal sigma first.
CharFamily invert_midpoint(int n, int r, long class_level, const CharFamily& mid,
                           bool supersets_solved_first) {
  CharFamily out;
  for (const auto& sc : symbols::strong_classes(n, r, class_level)) {
    std::vector<BiPartition> order = sc.members;
    std::sort(order.begin(), order.end(), [&](const BiPartition& x, const BiPartition& y) {
      std::size_t sx = sc.sigma.at(x).size(), sy = sc.sigma.at(y).size();
      if (sx != sy) return supersets_solved_first ? sx > sy : sx < sy;
      return x < y;
    });
    for (const auto& lam : order) {
      const std::set<long>& sig_l = sc.sigma.at(lam);
      GradedChar acc = family_row(mid, lam);
      for (const auto& mu : order) {
        if (mu == lam) continue;
        const std::set<long>& sig_m = sc.sigma.at(mu);
        bool strict = supersets_solved_first ? (sig_m != sig_l && subset_of(sig_l, sig_m))
                                             : (sig_m != sig_l && subset_of(sig_m, sig_l));
        if (!strict) continue;
        QPoly shift = QPoly::t_monomial(Rat(1), distance(lam, mu));
        for (const auto& [nu, poly] : out.at(mu)) acc[nu] -= shift * poly;
      }
      prune(acc);
      check_natural(acc, lam);
      out[lam] = std::move(acc);
    }
  }
  return out;
}

bool all_singleton_descending(int n, int r, long s) {
  symbols::Phyla ph = symbols::build_phyla(n, r, Rat(s), 0);
  int prev = n + 1;
  for (const auto& b : ph.blocks) {
    if (b.size() != 1) return false;
    int sz = b.front().first().size();
    if (sz > prev) return false;
    prev = sz;
  }
  return true;
}

std::vector<BiPartition> phyla_order(int n, int r, long s) {
  std::vector<BiPartition> order;
  for (const auto& b : symbols::build_phyla(n, r, Rat(s), 0).blocks)
    for (const auto& lab : b) order.push_back(lab);
  return order;
}

bool matches_solve(const CharFamily& fam, int n, int r, long s) {
  shoji::KostkaSystem ks = shoji::solve(shoji::SystemParams{Family::BC, n, r, Rat(s), 0});
  return shoji::as_graded_characters(ks) == fam;
}

CharFamily build_asymptotic(int n, int r) {
  (void)r;  // symbol parameters do not enter the asymptotic construction
  GroupSpec full{Family::BC, n};
  CharFamily fam;
  for (const BiPartition& lam : enumerate_bipartitions(n)) {
    int a = lam.first().size(), b = lam.second().size();
    GradedChar row;
    if (a == 0) {
      row[lam] = QPoly::one();
    } else {
      std::map<int, ClassFunction> ga = exterior_twisted_family(a, lam.first());
      if (b == 0) {
        for (const auto& [d, cf] : ga) add_decomposition(row, cf, d, full);
      } else {
        ClassFunction second =
            weyl::irr_class_function(GroupSpec{Family::BC, b}, BiPartition(Partition(), lam.second()));
        for (const auto& [d, cf] : ga)
          add_decomposition(row, weyl::induce_character({{Family::BC, a}, {Family::BC, b}},
                                                        {cf, second}, full),
                            d, full);
      }
    }
    prune(row);
    fam[lam] = std::move(row);
  }
  return fam;
}

/// walk and detect_s_asym revisit the same seeds repeatedly
const CharFamily& asym_cached(int n, int r) {
  static std::map<std::pair<int, int>, CharFamily> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = memo.try_emplace({n, r});
  if (fresh) it->second = build_asymptotic(n, r);
  return it->second;
}

}  // namespace

CharFamily asymptotic_system(int n, int r) { return asym_cached(n, r); }

CharFamily midpoint_up(int n, int r, long s, const CharFamily& base) {
  return midpoint(n, r, s, base, /*want_subsets=*/true);
}

CharFamily midpoint_down(int n, int r, long s, const CharFamily& next) {
  return midpoint(n, r, s + 1, next, /*want_subsets=*/false);
}

CharFamily step_to_next(int n, int r, long s, const CharFamily& mid) {
  return invert_midpoint(n, r, s + 1, mid, /*supersets_solved_first=*/true);
}

CharFamily step_to_prev(int n, int r, long s, const CharFamily& mid) {
  return invert_midpoint(n, r, s, mid, /*supersets_solved_first=*/false);
}

int detect_s_asym(int n, int r) {
  static std::map<std::pair<int, int>, int> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, r});
    if (it != memo.end()) return it->second;
  }
  const CharFamily& asym = asym_cached(n, r);
  int bound = 4 * n + 4;
  for (int s = 1; s <= bound; ++s) {
    if (!all_singleton_descending(n, r, s) || !all_singleton_descending(n, r, s + 1)) continue;
    if (phyla_order(n, r, s) != phyla_order(n, r, s + 1)) continue;
    if (matches_solve(asym, n, r, s) && matches_solve(asym, n, r, s + 1)) {
      std::lock_guard<std::mutex> lock(mu);
      memo.emplace(std::pair<int, int>{n, r}, s);
      return s;
    }
  }
  throw NotFound();
}

shoji::KostkaSystem walk(int n, int r, const Rat& s0, int eps_sign,
                         std::vector<StepTrace>* trace) {
  if (n < 1) throw std::invalid_argument("walk requires n >= 1");
  if (s0 <= 0) throw std::invalid_argument("walk requires s > 0");
  bool integral = boost::multiprecision::denominator(s0) == 1;
  bool interval = !integral || eps_sign != 0;
  // interval targets normalize to (k, k+1); integer targets to s = k
  long k;
  if (!interval) {
    k = boost::multiprecision::numerator(s0).convert_to<long>();
  } else if (!integral) {
    k = (boost::multiprecision::numerator(s0) / boost::multiprecision::denominator(s0))
            .convert_to<long>();
  } else {
    long s = boost::multiprecision::numerator(s0).convert_to<long>();
    k = eps_sign > 0 ? s : s - 1;
  }
  if (!interval && k < 1) throw std::invalid_argument("integer target below 1");

  long sa = detect_s_asym(n, r);
  CharFamily fam = asym_cached(n, r);  // the system at every s >= sa
  long goal = std::min(interval ? k + 1 : k, sa);
  for (long s = sa; s > goal; --s) {
    CharFamily mid = midpoint_down(n, r, s - 1, fam);
    fam = step_to_prev(n, r, s - 1, mid);
    if (trace) {
      StepTrace tr;
      tr.s_from = s;
      tr.s_to = s - 1;
      record_classes(tr, symbols::strong_classes(n, r, s));
      tr.residual_check = true;
      trace->push_back(std::move(tr));
    }
  }
  if (interval && k < sa) {
    fam = midpoint_down(n, r, k, fam);
    if (trace) {
      StepTrace tr;
      tr.s_from = k + 1;
      tr.s_to = k;
      record_classes(tr, symbols::strong_classes(n, r, k + 1));
      tr.residual_check = true;
      trace->push_back(std::move(tr));
    }
  }

  shoji::KostkaSystem ks;
  ks.params = shoji::SystemParams{Family::BC, n, r, s0, eps_sign};
  ks.engine = "transition";
  std::vector<std::size_t> sizes;
  int pos = 0;
  for (const auto& block : shoji::phyla_blocks(ks.params)) {
    std::vector<int> idx;
    for (const auto& label : block) {
      ks.labels.push_back(label);
      idx.push_back(pos++);
    }
    sizes.push_back(block.size());
    ks.blocks.push_back(std::move(idx));
  }
  std::size_t dim = ks.labels.size();
  ks.K = RatMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const GradedChar& row = family_row(fam, ks.labels[i]);
    for (std::size_t j = 0; j < dim; ++j) {
      auto it = row.find(ks.labels[j]);
      ks.K.at(i, j) = it == row.end() ? QRatFun() : QRatFun(it->second);
    }
  }
  RatMatrix omega = shoji::system_omega(ks);
  RatMatrix kinv;
  if (!try_invert(ks.K, kinv)) throw std::logic_error("transition K matrix is singular");
  ks.Lambda = kinv.transposed() * omega * kinv;
  if (!shoji::verify_orthogonality(ks, omega).ok())
    throw std::logic_error("transition system fails orthogonality");
  if (trace && !trace->empty()) trace->back().residual_check = true;
  return ks;
}

}  // namespace kostka::transition
