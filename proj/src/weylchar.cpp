#include "kostka/weylchar.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace kostka::weyl {

const char* family_name(Family f) { return f == Family::A ? "A" : "BC"; }

Family parse_family(const std::string& text) {
  if (text == "A") return Family::A;
  if (text == "BC" || text == "B" || text == "C") return Family::BC;
  throw std::invalid_argument("unknown family: " + text);
}

std::vector<int> GroupSpec::degrees() const {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i) d.push_back(family == Family::A ? i : 2 * i);
  return d;
}

long GroupSpec::num_reflections() const {
  return family == Family::A ? static_cast<long>(n) * (n - 1) / 2 : static_cast<long>(n) * n;
}

Int GroupSpec::order() const {
  Int o = 1;
  for (int d : degrees()) o *= d;
  return o;
}

int max_rank(Family f) { return f == Family::A ? 8 : 6; }

std::size_t CharTable::irr_index(const BiPartition& label) const {
  for (std::size_t i = 0; i < irr_labels.size(); ++i)
    if (irr_labels[i] == label) return i;
  throw std::invalid_argument("unknown irreducible label: " + label.to_string());
}

std::size_t CharTable::class_index(const BiPartition& label) const {
  for (std::size_t i = 0; i < class_labels.size(); ++i)
    if (class_labels[i] == label) return i;
  throw std::invalid_argument("unknown class label: " + label.to_string());
}

namespace {

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Centralizer order of a cycle type in S_n.
Int centralizer_sym(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p.parts()) ++mult[part];
  Int z = 1;
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

/// Centralizer order of a signed cycle type (alpha, beta) in the
/// hyperoctahedral group of rank |alpha| + |beta|.
Int centralizer_hyp(const BiPartition& c) {
  std::map<int, int> ma, mb;
  for (int part : c.first().parts()) ++ma[part];
  for (int part : c.second().parts()) ++mb[part];
  Int z = 1;
  for (const auto* mult : {&ma, &mb})
    for (auto [k, m] : *mult) {
      for (int i = 0; i < m; ++i) z *= 2 * k;
      z *= factorial(m);
    }
  return z;
}

Int centralizer(const GroupSpec& g, const BiPartition& c) {
  return g.family == Family::A ? centralizer_sym(c.first()) : centralizer_hyp(c);
}

/// Murnaghan-Nakayama value chi_lambda(mu) for S_n, via beta-numbers.
Int mn_value(std::vector<int> beta, const std::vector<int>& mu, std::size_t mi) {
  if (mi == mu.size()) return 1;
  int len = mu[mi];
  Int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - len;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b < beta[i] && b > target) ++height;
    std::vector<int> next(beta);
    next[i] = target;
    Int sub = mn_value(std::move(next), mu, mi + 1);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

Int sym_char_value(const Partition& lambda, const Partition& mu) {
  int len = std::max(lambda.length(), 1);
  std::vector<int> beta;
  for (int i = 1; i <= len; ++i) beta.push_back(lambda.part(i) + (len - i));
  std::vector<int> cycles(mu.parts());
  return mn_value(std::move(beta), cycles, 0);
}

// ---- generic induction over standardly embedded product subgroups ----

struct FactorClasses {
  std::vector<BiPartition> labels;
  std::vector<Int> centralizers;
};

FactorClasses factor_classes(const SubgroupFactor& f) {
  FactorClasses fc;
  if (f.family == Family::A) {
    for (const auto& p : enumerate_partitions(f.n)) {
      fc.labels.emplace_back(p, Partition());
      fc.centralizers.push_back(centralizer_sym(p));
    }
  } else {
    for (const auto& bp : enumerate_bipartitions(f.n)) {
      fc.labels.push_back(bp);
      fc.centralizers.push_back(centralizer_hyp(bp));
    }
  }
  return fc;
}

/// Concatenation of two multisets of parts.
Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

}  // namespace

ClassFunction induce_character(const std::vector<SubgroupFactor>& factors,
                               const std::vector<ClassFunction>& values, const GroupSpec& g) {
  if (factors.size() != values.size()) throw BadSubgroup("factor/value count mismatch");
  int total = 0;
  for (const auto& f : factors) {
    if (f.n < 0) throw BadSubgroup("negative factor rank");
    if (g.family == Family::A && f.family != Family::A)
      throw BadSubgroup("hyperoctahedral factor inside a symmetric group");
    total += f.n;
  }
  if (total != g.n) throw BadSubgroup("factor ranks do not sum to the ambient rank");

  // ambient class list in table order, without requiring the ambient table
  // (the BC table is itself built by induction)
  FactorClasses ambient = factor_classes({g.family, g.n});
  std::map<BiPartition, std::size_t> ambient_index;
  for (std::size_t i = 0; i < ambient.labels.size(); ++i) ambient_index[ambient.labels[i]] = i;
  std::vector<FactorClasses> fcs;
  for (const auto& f : factors) fcs.push_back(factor_classes(f));
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (values[i].size() != fcs[i].labels.size())
      throw BadSubgroup("class function length mismatch on factor " + std::to_string(i));

  // accumulate phi(D)/z_H(D) per fused ambient class over all class tuples D
  std::map<BiPartition, Rat> fused;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    Rat term(1);
    Partition alpha, beta;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& cls = fcs[i].labels[idx[i]];
      term *= values[i][idx[i]] / Rat(fcs[i].centralizers[idx[i]]);
      alpha = merge_parts(alpha, cls.first());
      beta = merge_parts(beta, cls.second());
    }
    if (term != 0) fused[BiPartition(alpha, beta)] += term;
    // advance the tuple
    std::size_t i = 0;
    while (i < factors.size() && ++idx[i] == fcs[i].labels.size()) idx[i++] = 0;
    if (i == factors.size()) break;
  }

  ClassFunction out(ambient.labels.size(), Rat(0));
  for (const auto& [cls, sum] : fused) {
    BiPartition key = g.family == Family::A ? BiPartition(merge_parts(cls.first(), cls.second()),
                                                          Partition())
                                            : cls;
    out[ambient_index.at(key)] = Rat(centralizer(g, key)) * sum;
  }
  return out;
}

// ---- character table construction and cache ----

namespace {

constexpr int kTableVersion = 1;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string values_digest_input(const std::vector<std::vector<Int>>& values) {
  std::ostringstream out;
  for (const auto& row : values) {
    for (const auto& v : row) out << v << ',';
    out << ';';
  }
  return out.str();
}

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("KOSTKA_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "kostka-tables";
  return std::filesystem::temp_directory_path() / "kostka-tables";
}

std::filesystem::path cache_file(const GroupSpec& g) {
  return cache_dir() / (std::string(family_name(g.family)) + std::to_string(g.n) + ".v" +
                        std::to_string(kTableVersion) + ".json");
}

bool load_cached_values(const GroupSpec& g, std::size_t nirr, std::size_t nclass,
                        std::vector<std::vector<Int>>& values) {
  std::ifstream in(cache_file(g));
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("version").get<int>() != kTableVersion) return false;
    if (j.at("family").get<std::string>() != family_name(g.family)) return false;
    if (j.at("n").get<int>() != g.n) return false;
    const auto& rows = j.at("values");
    if (rows.size() != nirr) return false;
    std::vector<std::vector<Int>> loaded;
    for (const auto& row : rows) {
      if (row.size() != nclass) return false;
      std::vector<Int> r;
      for (const auto& v : row) r.emplace_back(v.get<std::string>());
      loaded.push_back(std::move(r));
    }
    if (j.at("checksum").get<std::uint64_t>() != fnv1a(values_digest_input(loaded)))
      return false;
    values = std::move(loaded);
    return true;
  } catch (...) {
    return false;
  }
}

void store_cached_values(const GroupSpec& g, const std::vector<std::vector<Int>>& values) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir(), ec);
  if (ec) return;  // cache is best-effort
  nlohmann::json j;
  j["version"] = kTableVersion;
  j["family"] = family_name(g.family);
  j["n"] = g.n;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : values) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  j["values"] = std::move(rows);
  j["checksum"] = fnv1a(values_digest_input(values));
  auto tmp = cache_file(g);
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, cache_file(g), ec);
}

std::vector<std::vector<Int>> build_values_A(const CharTable& skel) {
  std::vector<std::vector<Int>> values;
  for (const auto& irr : skel.irr_labels) {
    std::vector<Int> row;
    for (const auto& cls : skel.class_labels) row.push_back(sym_char_value(irr.first(), cls.first()));
    values.push_back(std::move(row));
  }
  return values;
}

std::vector<std::vector<Int>> build_values_BC(const CharTable& skel) {
  std::vector<std::vector<Int>> values;
  for (const auto& irr : skel.irr_labels) {
    int a = irr.first().size(), b = irr.second().size();
    // factor on W_a: (sign of the negative part) * pullback of chi_{lambda0};
    // factor on W_b: pullback of chi_{lambda1}
    ClassFunction va, vb;
    for (const auto& cls : enumerate_bipartitions(a)) {
      Int v = sym_char_value(irr.first(), merge_parts(cls.first(), cls.second()));
      if (cls.second().length() % 2 == 1) v = -v;
      va.push_back(Rat(v));
    }
    for (const auto& cls : enumerate_bipartitions(b))
      vb.push_back(Rat(sym_char_value(irr.second(), merge_parts(cls.first(), cls.second()))));
    ClassFunction induced = induce_character({{Family::BC, a}, {Family::BC, b}}, {va, vb},
                                             skel.group);
    std::vector<Int> row;
    for (const auto& v : induced) {
      if (denominator(v) != 1) throw std::logic_error("non-integral character value");
      row.push_back(numerator(v));
    }
    values.push_back(std::move(row));
  }
  return values;
}

void check_orthogonality(const CharTable& t) {
  Int order = t.group.order();
  for (std::size_t i = 0; i < t.irr_labels.size(); ++i)
    for (std::size_t j = i; j < t.irr_labels.size(); ++j) {
      Int sum = 0;
      for (std::size_t c = 0; c < t.class_labels.size(); ++c)
        sum += t.class_sizes[c] * t.values[i][c] * t.values[j][c];
      if (sum != (i == j ? order : Int(0)))
        throw std::logic_error("character table fails row orthogonality");
    }
}

}  // namespace

CharTable build_char_table(const GroupSpec& g) {
  if (g.n > max_rank(g.family)) throw RankTooLarge(g.n);
  CharTable t;
  t.group = g;
  if (g.family == Family::A) {
    for (const auto& p : enumerate_partitions(g.n)) {
      t.irr_labels.emplace_back(p, Partition());
      t.class_labels.emplace_back(p, Partition());
    }
  } else {
    t.irr_labels = enumerate_bipartitions(g.n);
    t.class_labels = t.irr_labels;
  }
  Int order = g.order();
  for (const auto& cls : t.class_labels) t.class_sizes.push_back(order / centralizer(g, cls));

  if (!load_cached_values(g, t.irr_labels.size(), t.class_labels.size(), t.values)) {
    t.values = g.family == Family::A ? build_values_A(t) : build_values_BC(t);
    store_cached_values(g, t.values);
  }
  check_orthogonality(t);
  return t;
}

const CharTable& char_table(const GroupSpec& g) {
  static std::mutex mu;
  static std::map<GroupSpec, CharTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  return cache.emplace(g, build_char_table(g)).first->second;
}

Rat inner_product(const ClassFunction& x, const ClassFunction& y, const GroupSpec& g) {
  const CharTable& t = char_table(g);
  if (x.size() != t.class_labels.size() || y.size() != t.class_labels.size())
    throw std::invalid_argument("class function length mismatch");
  Rat sum(0);
  for (std::size_t c = 0; c < x.size(); ++c) sum += Rat(t.class_sizes[c]) * x[c] * y[c];
  return sum / Rat(g.order());
}

ClassFunction irr_class_function(const GroupSpec& g, const BiPartition& label) {
  const CharTable& t = char_table(g);
  const auto& row = t.values[t.irr_index(label)];
  ClassFunction f;
  for (const auto& v : row) f.emplace_back(v);
  return f;
}

ClassFunction reflection_character(const GroupSpec& g) {
  const CharTable& t = char_table(g);
  ClassFunction f;
  for (const auto& cls : t.class_labels) {
    long fixed_pos = std::count(cls.first().parts().begin(), cls.first().parts().end(), 1);
    long fixed_neg = std::count(cls.second().parts().begin(), cls.second().parts().end(), 1);
    f.emplace_back(fixed_pos - fixed_neg);
  }
  return f;
}

std::map<BiPartition, long> decompose(const ClassFunction& f, const GroupSpec& g) {
  const CharTable& t = char_table(g);
  std::map<BiPartition, long> out;
  for (const auto& irr : t.irr_labels) {
    Rat m = inner_product(f, irr_class_function(g, irr), g);
    if (m == 0) continue;
    if (denominator(m) != 1 || m < 0)
      throw std::logic_error("non-integral or negative multiplicity in decomposition");
    out[irr] = static_cast<long>(numerator(m));
  }
  return out;
}

std::map<BiPartition, long> tensor_decompose(const BiPartition& a, const BiPartition& b,
                                             const GroupSpec& g) {
  ClassFunction fa = irr_class_function(g, a), fb = irr_class_function(g, b);
  ClassFunction prod;
  for (std::size_t c = 0; c < fa.size(); ++c) prod.push_back(fa[c] * fb[c]);
  return decompose(prod, g);
}

BiPartition triv_label(const GroupSpec& g) {
  std::vector<int> row{g.n};
  Partition full = g.n ? Partition(std::move(row)) : Partition();
  if (g.family == Family::A) return BiPartition(full, Partition());
  return BiPartition(Partition(), full);
}

BiPartition sgn_label(const GroupSpec& g) {
  Partition ones(std::vector<int>(static_cast<std::size_t>(g.n), 1));
  if (g.family == Family::A) return BiPartition(ones, Partition());
  return BiPartition(ones, Partition());
}

// ---- graded multiplicities in the coinvariant algebra ----

namespace {

/// det(1 - t w | h) as a polynomial in q (t = q^2).
QPoly class_determinant(const GroupSpec& g, const BiPartition& cls) {
  QPoly det = QPoly::one();
  for (int part : cls.first().parts())
    det *= QPoly::one() - QPoly::t_monomial(Rat(1), part);
  for (int part : cls.second().parts())
    det *= QPoly::one() + QPoly::t_monomial(Rat(1), part);
  return det;
}

QRatFun graded_hom_multiplicity(const GroupSpec& g, const ClassFunction& prod) {
  const CharTable& t = char_table(g);
  QPoly front = QPoly::one();
  for (int d : g.degrees()) front *= QPoly::one() - QPoly::t_monomial(Rat(1), d);
  QRatFun sum;
  for (std::size_t c = 0; c < t.class_labels.size(); ++c) {
    if (prod[c] == 0) continue;
    sum += QRatFun(QPoly(Rat(t.class_sizes[c]) * prod[c]), class_determinant(g, t.class_labels[c]));
  }
  return QRatFun(front.scaled(Rat(1) / Rat(g.order()))) * sum;
}

}  // namespace

QPoly coinvariant_multiplicity(const BiPartition& chi, const GroupSpec& g) {
  QRatFun r = graded_hom_multiplicity(g, irr_class_function(g, chi));
  if (!r.is_polynomial()) throw NonPolynomialResult();
  return r.as_polynomial();
}

RatMatrix omega_matrix(const GroupSpec& g, const std::vector<BiPartition>& labels) {
  std::vector<ClassFunction> chars;
  for (const auto& l : labels) chars.push_back(irr_class_function(g, l));
  RatMatrix omega(labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j) {
      ClassFunction prod;
      for (std::size_t c = 0; c < chars[i].size(); ++c) prod.push_back(chars[i][c] * chars[j][c]);
      QRatFun entry = graded_hom_multiplicity(g, prod);
      if (!entry.is_polynomial()) throw NonPolynomialResult();
      omega.at(i, j) = entry;
      omega.at(j, i) = entry;
    }
  return omega;
}

ClassFunction exterior_plus_character(const GroupSpec& g, int k) {
  if (g.family != Family::BC) throw BadSubgroup("squarefree exterior powers are a BC construction");
  if (k < 0 || k > g.n) throw std::invalid_argument("exterior degree out of range");
  GroupSpec wk{Family::BC, k}, wrest{Family::BC, g.n - k};
  // the permutation part acts on squarefree monomials without sign: twist by
  // the flip signs only, i.e. the one-dimensional character (k | -)
  BiPartition lsgn = k == 0 ? triv_label(wk) : BiPartition(Partition({k}), Partition());
  ClassFunction sgn_part = irr_class_function(wk, lsgn);
  ClassFunction triv_part = irr_class_function(wrest, triv_label(wrest));
  return induce_character({{Family::BC, k}, {Family::BC, g.n - k}}, {sgn_part, triv_part}, g);
}

// ---- charge statistic ----

int charge_statistic(const std::vector<int>& word) {
  std::vector<int> content;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("word letters must be positive");
    if (static_cast<std::size_t>(x) > content.size()) content.resize(static_cast<std::size_t>(x), 0);
    ++content[static_cast<std::size_t>(x - 1)];
  }
  for (std::size_t i = 1; i < content.size(); ++i)
    if (content[i] > content[i - 1])
      throw std::invalid_argument("charge requires partition content");

  std::vector<bool> used(word.size(), false);
  int total = 0;
  std::size_t remaining = word.size();
  while (remaining > 0) {
    // extract one standard subword: rightmost 1, then leftward (cyclically)
    // the next 2, 3, ...
    int pos = -1;
    for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
      if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == 1) {
        pos = i;
        break;
      }
    if (pos < 0) throw std::invalid_argument("charge requires partition content");
    std::vector<int> positions{pos};
    used[static_cast<std::size_t>(pos)] = true;
    for (int letter = 2;; ++letter) {
      int found = -1;
      int nsize = static_cast<int>(word.size());
      for (int step = 1; step <= nsize; ++step) {
        int i = ((pos - step) % nsize + nsize) % nsize;
        if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == letter) {
          found = i;
          break;
        }
      }
      if (found < 0) break;
      positions.push_back(found);
      used[static_cast<std::size_t>(found)] = true;
      pos = found;
    }
    remaining -= positions.size();
    // charge of the standard subword, read in word order
    std::sort(positions.begin(), positions.end());
    std::vector<int> where(positions.size() + 1, 0);  // where[letter] = word position
    for (int p : positions) where[static_cast<std::size_t>(word[static_cast<std::size_t>(p)])] = p;
    int c = 0;
    for (std::size_t letter = 2; letter <= positions.size(); ++letter) {
      if (where[letter] > where[letter - 1]) ++c;  // letter sits to the right
      total += c;
    }
  }
  return total;
}

namespace {

/// Enumerates semistandard tableaux of shape mu and content lambda, invoking
/// fn on the bottom-to-top row reading word of each.
void enumerate_ssyt(const Partition& mu, const Partition& lambda,
                    const std::function<void(const std::vector<int>&)>& fn) {
  int rows = mu.length();
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) tab[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(mu.part(r + 1)), 0);
  std::vector<int> budget;
  for (int i = 1; i <= lambda.length(); ++i) budget.push_back(lambda.part(i));

  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      std::vector<int> word;
      for (int row = rows - 1; row >= 0; --row)
        for (int v : tab[static_cast<std::size_t>(row)]) word.push_back(v);
      fn(word);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= mu.part(r + 1)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && c < mu.part(r)) lo = std::max(lo, tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= lambda.length(); ++v) {
      if (budget[static_cast<std::size_t>(v - 1)] == 0) continue;
      --budget[static_cast<std::size_t>(v - 1)];
      tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      fill(nr, nc);
      ++budget[static_cast<std::size_t>(v - 1)];
    }
  };
  if (rows == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  fill(0, 0);
}

}  // namespace

std::map<Partition, QPoly> graded_char_M_lambda(const Partition& lambda) {
  std::map<Partition, QPoly> out;
  for (const auto& mu : enumerate_partitions(lambda.size())) {
    QPoly k;
    enumerate_ssyt(mu, lambda, [&](const std::vector<int>& word) {
      k += QPoly::t_monomial(Rat(1), charge_statistic(word));
    });
    if (!k.is_zero()) out[mu] = k;
  }
  return out;
}

}  // namespace kostka::weyl
