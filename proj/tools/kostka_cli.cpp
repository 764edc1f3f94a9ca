#include <atomic>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kostka/jsonio.hpp"
#include "kostka/transition.hpp"

using namespace kostka;
namespace fs = std::filesystem;

namespace {

constexpr int kExitBadFlags = 2;
constexpr int kExitEngineFailure = 3;
constexpr int kExitEngineMismatch = 4;

int parse_eps(const std::string& text) {
  if (text == "-" || text == "-1") return -1;
  if (text == "0") return 0;
  if (text == "+" || text == "1" || text == "+1") return 1;
  throw std::invalid_argument("eps must be one of -, 0, +");
}

std::string entry_string(const QRatFun& e, bool var_q) {
  if (!e.is_polynomial()) return e.to_string();
  return e.as_polynomial().pretty(var_q);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_csv(const shoji::KostkaSystem& ks, bool var_q) {
  std::ostringstream out;
  out << "label";
  for (const auto& lab : ks.labels)
    out << "," << csv_quote(shoji::label_string(ks.params.family, lab));
  out << "\n";
  for (std::size_t i = 0; i < ks.labels.size(); ++i) {
    out << csv_quote(shoji::label_string(ks.params.family, ks.labels[i]));
    for (std::size_t j = 0; j < ks.labels.size(); ++j)
      out << "," << csv_quote(entry_string(ks.K.at(i, j), var_q));
    out << "\n";
  }
  return out.str();
}

std::string format_pretty(const shoji::KostkaSystem& ks, bool var_q) {
  std::ostringstream out;
  out << "family " << weyl::family_name(ks.params.family) << "  n " << ks.params.n;
  if (ks.params.family == shoji::Family::BC) {
    out << "  r " << ks.params.r << "  s " << rat_to_string(ks.params.s0);
    if (ks.params.eps_sign != 0) out << (ks.params.eps_sign > 0 ? " + eps" : " - eps");
    if (ks.params.eps_sign == 0 && boost::multiprecision::denominator(ks.params.s0) == 1)
      out << "  group "
          << symbols::group_kind_name(symbols::group_dictionary(
                 boost::multiprecision::numerator(ks.params.s0).convert_to<long>()));
  }
  out << "  engine " << ks.engine << "\n";
  out << "K matrix, rows = graded characters in the simple basis"
      << (var_q ? "" : " (t = q^2)") << "\n";
  std::vector<std::string> row_names;
  std::vector<std::vector<std::string>> cells;
  std::size_t dim = ks.labels.size();
  std::vector<std::size_t> widths(dim);
  for (std::size_t j = 0; j < dim; ++j)
    widths[j] = shoji::label_string(ks.params.family, ks.labels[j]).size();
  std::size_t name_width = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    row_names.push_back(shoji::label_string(ks.params.family, ks.labels[i]));
    name_width = std::max(name_width, row_names.back().size());
    std::vector<std::string> row;
    for (std::size_t j = 0; j < dim; ++j) {
      row.push_back(entry_string(ks.K.at(i, j), var_q));
      widths[j] = std::max(widths[j], row.back().size());
    }
    cells.push_back(std::move(row));
  }
  out << std::string(name_width, ' ');
  for (std::size_t j = 0; j < dim; ++j) {
    const std::string& h = shoji::label_string(ks.params.family, ks.labels[j]);
    out << " | " << h << std::string(widths[j] - h.size(), ' ');
  }
  out << "\n";
  for (std::size_t i = 0; i < dim; ++i) {
    out << row_names[i] << std::string(name_width - row_names[i].size(), ' ');
    for (std::size_t j = 0; j < dim; ++j)
      out << " | " << cells[i][j] << std::string(widths[j] - cells[i][j].size(), ' ');
    out << "\n";
  }
  return out.str();
}

std::size_t count_differences(const shoji::KostkaSystem& a, const shoji::KostkaSystem& b) {
  auto ga = shoji::as_graded_characters(a);
  auto gb = shoji::as_graded_characters(b);
  std::size_t diffs = 0;
  for (const auto& [lam, row] : ga) {
    auto it = gb.find(lam);
    if (it == gb.end()) {
      ++diffs;
      continue;
    }
    for (const auto& [mu, poly] : row) {
      auto jt = it->second.find(mu);
      if (jt == it->second.end() || jt->second != poly) ++diffs;
    }
    for (const auto& [mu, poly] : it->second)
      if (!row.count(mu)) ++diffs;
  }
  for (const auto& [lam, row] : gb)
    if (!ga.count(lam)) ++diffs;
  return diffs;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    jsonio::write_atomic(out_path, content);
}

struct ComputeArgs {
  std::string family = "BC";
  int n = 0;
  int r = 2;
  std::string s = "1";
  std::string eps = "0";
  std::string engine = "shoji";
  std::string format = "pretty";
  std::string var = "t";
  std::string out;
  std::string trace;
};

nlohmann::json trace_to_json(const std::vector<transition::StepTrace>& steps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& tr : steps) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : tr.classes)
      classes.push_back(
          {{"members", c.members}, {"sigma", c.sigma}, {"distances", c.distances}});
    out.push_back({{"s_from", tr.s_from},
                   {"s_to", tr.s_to},
                   {"classes", std::move(classes)},
                   {"residual_check", tr.residual_check}});
  }
  return out;
}

int run_compute(const ComputeArgs& a) {
  shoji::SystemParams p;
  try {
    p.family = weyl::parse_family(a.family);
    p.n = a.n;
    p.r = a.r;
    p.s0 = parse_rat(a.s);
    p.eps_sign = parse_eps(a.eps);
    if (p.n < 1 || p.n > weyl::max_rank(p.family)) throw std::invalid_argument("n out of range");
    if (p.family == shoji::Family::BC && p.s0 <= 0)
      throw std::invalid_argument("s must be positive");
    if (p.family == shoji::Family::A && a.engine != "shoji")
      throw std::invalid_argument("family A supports only the shoji engine");
    if (!a.trace.empty() && a.engine == "shoji")
      throw std::invalid_argument("--trace requires the transition engine");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }
  bool var_q = a.var == "q";
  try {
    std::vector<shoji::KostkaSystem> systems;
    if (a.engine == "shoji" || a.engine == "both") systems.push_back(shoji::solve(p));
    if (a.engine == "transition" || a.engine == "both") {
      std::vector<transition::StepTrace> steps;
      systems.push_back(
          transition::walk(p.n, p.r, p.s0, p.eps_sign, a.trace.empty() ? nullptr : &steps));
      if (!a.trace.empty())
        jsonio::write_atomic(a.trace, trace_to_json(steps).dump(2) + "\n");
    }
    std::size_t diffs = systems.size() == 2 ? count_differences(systems[0], systems[1]) : 0;

    std::string content;
    if (a.format == "json") {
      if (systems.size() == 1) {
        content = jsonio::system_to_json(systems[0]).dump(2) + "\n";
      } else {
        nlohmann::json j;
        j["shoji"] = jsonio::system_to_json(systems[0]);
        j["transition"] = jsonio::system_to_json(systems[1]);
        j["diff"] = {{"equal", diffs == 0}, {"differing_entries", diffs}};
        content = j.dump(2) + "\n";
      }
    } else if (a.format == "csv") {
      for (const auto& ks : systems) content += format_csv(ks, var_q);
    } else {
      for (const auto& ks : systems) content += format_pretty(ks, var_q);
      if (systems.size() == 2)
        content += diffs == 0 ? "engines agree entrywise\n"
                              : "engines differ in " + std::to_string(diffs) + " entries\n";
    }
    emit(content, a.out);
    return diffs == 0 ? 0 : kExitEngineMismatch;
  } catch (const std::exception& e) {
    std::cerr << "engine failure: " << e.what() << "\n";
    return kExitEngineFailure;
  }
}

// ---- verify ----

struct VerifyState {
  bool all_pass = true;
  void report(const std::string& suite, const std::string& instance, bool pass,
              const std::string& detail = "") {
    if (!pass) all_pass = false;
    std::cout << (pass ? "PASS" : "FAIL") << "\t" << suite << "\t" << instance;
    if (!detail.empty()) std::cout << "\t" << detail;
    std::cout << "\n";
  }
};

template <typename F>
void for_each_system(int n_max, int s_max, F&& fn) {
  for (int n = 1; n <= std::min(n_max, weyl::max_rank(shoji::Family::A)); ++n)
    fn(shoji::SystemParams{shoji::Family::A, n});
  for (int n = 1; n <= std::min(n_max, weyl::max_rank(shoji::Family::BC)); ++n)
    for (long s = 1; s <= s_max; ++s)
      for (int eps : {-1, 0, 1})
        fn(shoji::SystemParams{shoji::Family::BC, n, 2, Rat(s), eps});
}

std::string params_string(const shoji::SystemParams& p) {
  std::string out = std::string(weyl::family_name(p.family)) + " n=" + std::to_string(p.n);
  if (p.family == shoji::Family::BC) {
    out += " s=" + rat_to_string(p.s0);
    if (p.eps_sign != 0) out += p.eps_sign > 0 ? "+eps" : "-eps";
  }
  return out;
}

void suite_orthogonality(VerifyState& st, int n_max, int s_max) {
  for_each_system(n_max, s_max, [&](const shoji::SystemParams& p) {
    try {
      shoji::KostkaSystem ks = shoji::solve(p);
      shoji::ResidualReport rep = shoji::verify_orthogonality(ks, shoji::system_omega(ks));
      st.report("orthogonality", params_string(p), rep.ok(),
                rep.ok() ? "" : std::to_string(rep.nonzero_entries) + " residual entries");
    } catch (const std::exception& e) {
      st.report("orthogonality", params_string(p), false, e.what());
    }
  });
}

void suite_positivity(VerifyState& st, int n_max, int s_max) {
  for_each_system(n_max, s_max, [&](const shoji::SystemParams& p) {
    try {
      auto findings = shoji::positivity_findings(shoji::solve(p));
      st.report("positivity", params_string(p), findings.empty(),
                findings.empty() ? "" : findings.front());
    } catch (const std::exception& e) {
      st.report("positivity", params_string(p), false, e.what());
    }
  });
}

void suite_pieri(VerifyState& st, int n_max) {
  for (int n = 1; n <= std::min(n_max, weyl::max_rank(shoji::Family::BC)); ++n) {
    weyl::GroupSpec g{shoji::Family::BC, n};
    BiPartition refl(Partition({1}), n > 1 ? Partition({n - 1}) : Partition());
    for (const BiPartition& lam : enumerate_bipartitions(n)) {
      std::map<BiPartition, long> expected;
      for (const BiPartition& mu : enumerate_bipartitions(n))
        if (dot_adjacent(lam, mu)) expected[mu] = 1;
      bool pass = false;
      std::string detail;
      try {
        pass = weyl::tensor_decompose(refl, lam, g) == expected;
      } catch (const std::exception& e) {
        detail = e.what();
      }
      st.report("pieri", "BC n=" + std::to_string(n) + " " + lam.to_string(), pass, detail);
    }
  }
}

void suite_engines(VerifyState& st, int n_max, int s_max) {
  for (int n = 1; n <= std::min(n_max, weyl::max_rank(shoji::Family::BC)); ++n) {
    long sa;
    try {
      sa = transition::detect_s_asym(n, 2);
    } catch (const std::exception& e) {
      st.report("engines", "BC n=" + std::to_string(n) + " threshold", false, e.what());
      continue;
    }
    st.report("engines", "BC n=" + std::to_string(n) + " threshold s_asym=" + std::to_string(sa),
              sa <= std::max<long>(s_max, 4 * n + 4));
    std::vector<Rat> targets;
    for (long s = 1; s <= sa; ++s) {
      targets.emplace_back(s);
      if (s < sa) targets.push_back(Rat(2 * s + 1, 2));  // one sample per open interval
    }
    for (const Rat& s0 : targets) {
      shoji::SystemParams p{shoji::Family::BC, n, 2, s0, 0};
      try {
        shoji::KostkaSystem ks = transition::walk(n, 2, s0, 0);
        shoji::KostkaSystem ref = shoji::solve(p);
        bool equal = shoji::as_graded_characters(ks) == shoji::as_graded_characters(ref);
        st.report("engines", params_string(p), equal && shoji::positivity_findings(ks).empty());
      } catch (const std::exception& e) {
        st.report("engines", params_string(p), false, e.what());
      }
    }
  }
}

struct VerifyArgs {
  std::string suite;
  int n_max = 3;
  int s_max = 8;
};

int run_verify(const VerifyArgs& a) {
  VerifyState st;
  if (a.suite == "orthogonality" || a.suite == "all") suite_orthogonality(st, a.n_max, a.s_max);
  if (a.suite == "pieri" || a.suite == "all") suite_pieri(st, a.n_max);
  if (a.suite == "positivity" || a.suite == "all") suite_positivity(st, a.n_max, a.s_max);
  if (a.suite == "engines" || a.suite == "all") suite_engines(st, a.n_max, a.s_max);
  return st.all_pass ? 0 : 1;
}

// ---- sweep ----

struct SweepArgs {
  int n_max = 2;
  int s_max = 3;
  std::string out_dir;
};

nlohmann::json cell_json(int n, long s) {
  shoji::SystemParams p{shoji::Family::BC, n, 2, Rat(s), 0};
  nlohmann::json j;
  j["family"] = "BC";
  j["n"] = n;
  j["s"] = s;
  j["group"] = symbols::group_kind_name(symbols::group_dictionary(s));
  nlohmann::json phyla = nlohmann::json::array();
  for (const auto& block : shoji::phyla_blocks(p)) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto& lab : block) b.push_back(lab.to_string());
    phyla.push_back(std::move(b));
  }
  j["phyla"] = std::move(phyla);
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& sc : symbols::strong_classes(n, 2, s)) {
    nlohmann::json c;
    nlohmann::json members = nlohmann::json::array();
    nlohmann::json sigma = nlohmann::json::object();
    for (const auto& m : sc.members) {
      members.push_back(m.to_string());
      sigma[m.to_string()] = sc.sigma.at(m);
    }
    c["members"] = std::move(members);
    c["e_set"] = sc.e_set;
    c["sigma"] = std::move(sigma);
    classes.push_back(std::move(c));
  }
  j["strong_classes"] = std::move(classes);
  j["system"] = jsonio::system_to_json(shoji::solve(p));
  return j;
}

int run_sweep(const SweepArgs& a) {
  try {
    fs::create_directories(a.out_dir);
    struct Cell {
      int n;
      long s;
      std::string file;
      std::string content;
      std::string group;
    };
    std::vector<Cell> cells;
    for (int n = 1; n <= a.n_max; ++n)
      for (long s = 1; s <= a.s_max; ++s)
        cells.push_back({n, s, "bc_n" + std::to_string(n) + "_s" + std::to_string(s) + ".json",
                         "", ""});
    // cells are independent: fill them from a bounded pool of workers
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mu;
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
        try {
          nlohmann::json j = cell_json(cells[i].n, cells[i].s);
          cells[i].group = j["group"].get<std::string>();
          cells[i].content = j.dump(2) + "\n";
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!failed.exchange(true)) first_error = e.what();
        }
      }
    };
    std::size_t pool =
        std::min<std::size_t>(cells.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < pool; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failed) {
      std::cerr << "sweep failure: " << first_error << "\n";
      return kExitEngineFailure;
    }
    nlohmann::json index;
    index["cells"] = nlohmann::json::array();
    for (const auto& c : cells) {
      jsonio::write_atomic((fs::path(a.out_dir) / c.file).string(), c.content);
      index["cells"].push_back(
          {{"n", c.n}, {"s", c.s}, {"file", c.file}, {"group", c.group}});
    }
    jsonio::write_atomic((fs::path(a.out_dir) / "index.json").string(), index.dump(2) + "\n");
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "sweep failure: " << e.what() << "\n";
    return kExitEngineFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kostka polynomials and graded characters for Weyl groups of types A and BC"};
  app.require_subcommand(1);

  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand("compute", "Compute one Kostka system");
  compute->add_option("--family", ca.family, "A or BC")->check(CLI::IsMember({"A", "BC"}));
  compute->add_option("--n", ca.n, "rank")->required();
  compute->add_option("--r", ca.r, "symbol offset (default 2)");
  compute->add_option("--s", ca.s, "symbol shift, an exact rational p/q");
  compute->add_option("--eps", ca.eps, "side of s: -, 0 or +");
  compute->add_option("--engine", ca.engine, "shoji, transition or both")
      ->check(CLI::IsMember({"shoji", "transition", "both"}));
  compute->add_option("--format", ca.format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  compute->add_option("--var", ca.var, "render polynomials in t (default) or q")
      ->check(CLI::IsMember({"t", "q"}));
  compute->add_option("--out", ca.out, "write output to this file instead of stdout");
  compute->add_option("--trace", ca.trace,
                      "write per-step records of the transition walk to this JSON file");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", va.suite, "orthogonality, pieri, positivity, engines or all")
      ->required()
      ->check(CLI::IsMember({"orthogonality", "pieri", "positivity", "engines", "all"}));
  verify->add_option("--n-max", va.n_max, "largest rank (default 3)");
  verify->add_option("--s-max", va.s_max, "largest integer shift (default 8)");

  SweepArgs sa;
  CLI::App* sweep = app.add_subcommand("sweep", "Emit an atlas of systems over an (n, s) grid");
  sweep->add_option("--n-max", sa.n_max, "largest rank (default 2)");
  sweep->add_option("--s-max", sa.s_max, "largest integer shift (default 3)");
  sweep->add_option("--out-dir", sa.out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadFlags;
  }
  if (compute->parsed()) return run_compute(ca);
  if (verify->parsed()) return run_verify(va);
  return run_sweep(sa);
}
