#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "kostka/weylchar.hpp"

using namespace kostka;
using namespace kostka::weyl;

namespace {

BiPartition bp(const std::string& s) { return BiPartition::parse(s); }

Int table_value(const GroupSpec& g, const std::string& irr, const std::string& cls) {
  const CharTable& t = char_table(g);
  return t.values[t.irr_index(bp(irr))][t.class_index(bp(cls))];
}

}  // namespace

TEST_CASE("group basics") {
  GroupSpec a3{Family::A, 3};
  CHECK(a3.degrees() == std::vector<int>{1, 2, 3});
  CHECK(a3.order() == 6);
  CHECK(a3.num_reflections() == 3);
  GroupSpec b2{Family::BC, 2};
  CHECK(b2.degrees() == std::vector<int>{2, 4});
  CHECK(b2.order() == 8);
  CHECK(b2.num_reflections() == 4);
  CHECK_THROWS_AS(char_table(GroupSpec{Family::BC, 7}), RankTooLarge);
}

TEST_CASE("symmetric group character values") {
  GroupSpec g{Family::A, 2};
  // table of S_2: [[1,1],[1,-1]]
  CHECK(table_value(g, "2|-", "2|-") == 1);
  CHECK(table_value(g, "2|-", "1,1|-") == 1);
  CHECK(table_value(g, "1,1|-", "1,1|-") == 1);
  CHECK(table_value(g, "1,1|-", "2|-") == -1);

  GroupSpec g3{Family::A, 3};
  // standard S_3 values: chi_(2,1) is the 2-dimensional character
  CHECK(table_value(g3, "2,1|-", "1,1,1|-") == 2);
  CHECK(table_value(g3, "2,1|-", "2,1|-") == 0);
  CHECK(table_value(g3, "2,1|-", "3|-") == -1);
  CHECK(table_value(g3, "3|-", "2,1|-") == 1);
  CHECK(table_value(g3, "1,1,1|-", "2,1|-") == -1);

  GroupSpec g5{Family::A, 5};
  // hook dimension formula: dim chi_(3,1,1) = 6
  CHECK(table_value(g5, "3,1,1|-", "1,1,1,1,1|-") == 6);
}

TEST_CASE("class sizes sum to the group order") {
  for (int n = 1; n <= 5; ++n)
    for (Family f : {Family::A, Family::BC}) {
      GroupSpec g{f, n};
      const CharTable& t = char_table(g);
      Int total = 0;
      for (const auto& s : t.class_sizes) total += s;
      CHECK(total == g.order());
    }
}

TEST_CASE("hyperoctahedral rank 1 and 2 labels") {
  GroupSpec b1{Family::BC, 1};
  const CharTable& t1 = char_table(b1);
  REQUIRE(t1.irr_labels.size() == 2);
  // (-|1) is trivial, (1|-) is the sign of Z/2
  CHECK(table_value(b1, "-|1", "1|-") == 1);
  CHECK(table_value(b1, "-|1", "-|1") == 1);
  CHECK(table_value(b1, "1|-", "1|-") == 1);
  CHECK(table_value(b1, "1|-", "-|1") == -1);

  GroupSpec b2{Family::BC, 2};
  // dimensions at the identity class (1,1|-): triv/sgn/Lsgn/Ssgn are 1-dim,
  // ref is 2-dim
  CHECK(table_value(b2, "-|2", "1,1|-") == 1);
  CHECK(table_value(b2, "1,1|-", "1,1|-") == 1);
  CHECK(table_value(b2, "2|-", "1,1|-") == 1);
  CHECK(table_value(b2, "-|1,1", "1,1|-") == 1);
  CHECK(table_value(b2, "1|1", "1,1|-") == 2);
  // triv is identically 1; sgn is the determinant of the signed permutation
  // matrix, which works out to (-1)^{n - #positive cycles}
  for (const auto& cls : char_table(b2).class_labels) {
    CHECK(table_value(b2, "-|2", cls.to_string()) == 1);
    CHECK(table_value(b2, "1,1|-", cls.to_string()) ==
          ((2 - cls.first().length()) % 2 == 0 ? 1 : -1));
  }
  // Lsgn: trivial on S_n, product of signs on the sign group
  for (const auto& cls : char_table(b2).class_labels)
    CHECK(table_value(b2, "2|-", cls.to_string()) ==
          (cls.second().length() % 2 == 0 ? 1 : -1));
}

TEST_CASE("transpose and swap symmetries of the BC labels") {
  // L_{transpose} = L tensor sgn and L_{(b,a)} = L_{(a,b)} tensor Lsgn
  for (int n = 1; n <= 4; ++n) {
    GroupSpec g{Family::BC, n};
    const CharTable& t = char_table(g);
    for (const auto& irr : t.irr_labels) {
      auto twisted = tensor_decompose(irr, sgn_label(g), g);
      REQUIRE(twisted.size() == 1);
      CHECK(twisted.begin()->first == irr.transpose());
      CHECK(twisted.begin()->second == 1);
      auto lswapped = tensor_decompose(irr, bp(Partition(std::vector<int>{n}).to_string() + "|-"), g);
      REQUIRE(lswapped.size() == 1);
      CHECK(lswapped.begin()->first == BiPartition(irr.second(), irr.first()));
    }
  }
}

TEST_CASE("tensor with the trivial is the identity") {
  GroupSpec g{Family::BC, 3};
  for (const auto& irr : char_table(g).irr_labels) {
    auto d = tensor_decompose(triv_label(g), irr, g);
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == irr);
    CHECK(d.begin()->second == 1);
  }
}

TEST_CASE("reflection tensor matches single box moves") {
  // h tensor L_lambda = direct sum over bipartitions one box move away
  for (int n = 1; n <= 5; ++n) {
    GroupSpec g{Family::BC, n};
    ClassFunction h = reflection_character(g);
    for (const auto& irr : char_table(g).irr_labels) {
      ClassFunction f = irr_class_function(g, irr);
      ClassFunction prod;
      for (std::size_t c = 0; c < f.size(); ++c) prod.push_back(f[c] * h[c]);
      auto d = decompose(prod, g);
      std::map<BiPartition, long> expected;
      for (const auto& mu : enumerate_bipartitions(n))
        if (dot_adjacent(irr, mu)) expected[mu] = 1;
      CHECK(d == expected);
    }
  }
}

TEST_CASE("induction examples") {
  // regular representation of S_2
  GroupSpec a2{Family::A, 2};
  ClassFunction t1{Rat(1)}, t2{Rat(1)};
  ClassFunction reg = induce_character({{Family::A, 1}, {Family::A, 1}}, {t1, t2}, a2);
  auto d = decompose(reg, a2);
  CHECK(d.size() == 2);
  CHECK(d.at(bp("2|-")) == 1);
  CHECK(d.at(bp("1,1|-")) == 1);

  // Ind from S_1 x W_1 of triv: dimension 4 = L_{(-|2)} + L_{(1|1)} + L_{(-|1,1)}
  GroupSpec b2{Family::BC, 2};
  ClassFunction s1{Rat(1)};
  ClassFunction w1{Rat(1), Rat(1)};
  ClassFunction ind = induce_character({{Family::A, 1}, {Family::BC, 1}}, {s1, w1}, b2);
  auto d2 = decompose(ind, b2);
  CHECK(d2.size() == 3);
  CHECK(d2.at(bp("-|2")) == 1);
  CHECK(d2.at(bp("1|1")) == 1);
  CHECK(d2.at(bp("-|1,1")) == 1);

  // inducing from the full group is the identity
  ClassFunction self = irr_class_function(b2, bp("1|1"));
  CHECK(induce_character({{Family::BC, 2}}, {self}, b2) == self);

  CHECK_THROWS_AS(induce_character({{Family::A, 1}}, {s1}, b2), BadSubgroup);
  CHECK_THROWS_AS(induce_character({{Family::BC, 1}}, {w1}, a2), BadSubgroup);
}

TEST_CASE("multiplicity one for restriction to the reflection subgroup product") {
  // Hom over W_a x W_b of the defining induced module and L_lambda is 1-dim:
  // the inner product of L_lambda with its inducing character equals 1.
  for (int n = 1; n <= 4; ++n) {
    GroupSpec g{Family::BC, n};
    for (const auto& irr : char_table(g).irr_labels) {
      int a = irr.first().size(), b = irr.second().size();
      GroupSpec ga{Family::BC, a}, gb{Family::BC, b};
      ClassFunction va(char_table(ga).class_labels.size()), vb(char_table(gb).class_labels.size());
      // the inducing data: pullback of chi_{lambda0} twisted by the negative
      // sign product, and plain pullback of chi_{lambda1}
      {
        const CharTable& ta = char_table(ga);
        for (std::size_t c = 0; c < ta.class_labels.size(); ++c) {
          std::vector<int> merged(ta.class_labels[c].first().parts());
          for (int p : ta.class_labels[c].second().parts()) merged.push_back(p);
          std::sort(merged.rbegin(), merged.rend());
          GroupSpec sa{Family::A, a};
          const CharTable& ts = char_table(sa);
          Int v = ts.values[ts.irr_index(BiPartition(irr.first(), Partition()))]
                           [ts.class_index(BiPartition(Partition(merged), Partition()))];
          va[c] = Rat(ta.class_labels[c].second().length() % 2 ? -v : v);
        }
        const CharTable& tb = char_table(gb);
        for (std::size_t c = 0; c < tb.class_labels.size(); ++c) {
          std::vector<int> merged(tb.class_labels[c].first().parts());
          for (int p : tb.class_labels[c].second().parts()) merged.push_back(p);
          std::sort(merged.rbegin(), merged.rend());
          GroupSpec sb{Family::A, b};
          const CharTable& ts = char_table(sb);
          Int v = ts.values[ts.irr_index(BiPartition(irr.second(), Partition()))]
                           [ts.class_index(BiPartition(Partition(merged), Partition()))];
          vb[c] = Rat(v);
        }
      }
      ClassFunction ind = induce_character({{Family::BC, a}, {Family::BC, b}}, {va, vb}, g);
      CHECK(inner_product(ind, irr_class_function(g, irr), g) == Rat(1));
    }
  }
}

TEST_CASE("coinvariant multiplicities") {
  for (int n = 1; n <= 4; ++n)
    for (Family f : {Family::A, Family::BC}) {
      GroupSpec g{f, n};
      CHECK(coinvariant_multiplicity(triv_label(g), g) == QPoly::one());
      CHECK(coinvariant_multiplicity(sgn_label(g), g) ==
            QPoly::t_monomial(Rat(1), static_cast<int>(g.num_reflections())));
      // dimension count: sum of dim * fake degree at t=1 equals |W|
      Rat total(0);
      const CharTable& t = char_table(g);
      BiPartition id_class(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)),
                           Partition());
      for (const auto& irr : t.irr_labels) {
        Int dim = t.values[t.irr_index(irr)][t.class_index(id_class)];
        total += Rat(dim) * coinvariant_multiplicity(irr, g).evaluate(Rat(1));
      }
      CHECK(total == Rat(g.order()));
    }
}

TEST_CASE("omega matrix small cases") {
  GroupSpec a2{Family::A, 2};
  std::vector<BiPartition> labels{bp("2|-"), bp("1,1|-")};
  RatMatrix omega = omega_matrix(a2, labels);
  CHECK(omega.at(0, 0) == QRatFun::one());
  CHECK(omega.at(0, 1) == QRatFun(QPoly::t_monomial(Rat(1), 1)));
  CHECK(omega.at(1, 0) == omega.at(0, 1));
  CHECK(omega.at(1, 1) == QRatFun::one());

  // regular-representation check at t = 1 for BC n=2
  GroupSpec b2{Family::BC, 2};
  const CharTable& t = char_table(b2);
  RatMatrix om2 = omega_matrix(b2, t.irr_labels);
  for (std::size_t i = 0; i < t.irr_labels.size(); ++i) {
    Rat rowsum(0);
    for (std::size_t j = 0; j < t.irr_labels.size(); ++j) {
      Int dim = t.values[j][t.class_index(bp("1,1|-"))];
      rowsum += Rat(dim) * om2.at(i, j).as_polynomial().evaluate(Rat(1));
    }
    Int dim_i = t.values[i][t.class_index(bp("1,1|-"))];
    CHECK(rowsum == Rat(dim_i) * Rat(b2.order()));
  }
}

TEST_CASE("squarefree exterior powers") {
  GroupSpec b2{Family::BC, 2};
  // binomial dimensions and total = 2^n
  Rat total(0);
  const CharTable& t = char_table(b2);
  std::size_t id = t.class_index(bp("1,1|-"));
  for (int k = 0; k <= 2; ++k) total += exterior_plus_character(b2, k)[id];
  CHECK(total == Rat(4));
  CHECK(exterior_plus_character(b2, 0) == irr_class_function(b2, triv_label(b2)));
  // top degree: the monomial e1*e2 is fixed by the swap (no permutation sign
  // in the symmetric algebra) and negated by each flip
  CHECK(exterior_plus_character(b2, 2) == irr_class_function(b2, bp("2|-")));
  // middle degree is the reflection character itself
  CHECK(exterior_plus_character(b2, 1) == reflection_character(b2));
}

TEST_CASE("charge statistic on standard words") {
  CHECK(charge_statistic({1}) == 0);
  CHECK(charge_statistic({1, 2, 3}) == 3);
  CHECK(charge_statistic({3, 2, 1}) == 0);
  CHECK(charge_statistic({2, 1, 3}) == 1);
  CHECK(charge_statistic({3, 1, 2}) == 2);
  CHECK(charge_statistic({2, 1, 1}) == 0);
  CHECK(charge_statistic({1, 1, 2}) == 1);
}

TEST_CASE("graded characters of the type-A standard modules") {
  // lambda = (n): the trivial module
  auto m2 = graded_char_M_lambda(Partition({2}));
  REQUIRE(m2.size() == 1);
  CHECK(m2.at(Partition({2})) == QPoly::one());

  auto m11 = graded_char_M_lambda(Partition({1, 1}));
  REQUIRE(m11.size() == 2);
  CHECK(m11.at(Partition({1, 1})) == QPoly::one());
  CHECK(m11.at(Partition({2})) == QPoly::t_monomial(Rat(1), 1));

  auto m111 = graded_char_M_lambda(Partition({1, 1, 1}));
  REQUIRE(m111.size() == 3);
  CHECK(m111.at(Partition({1, 1, 1})) == QPoly::one());
  CHECK(m111.at(Partition({2, 1})) == QPoly::from_t_coeffs({Rat(0), Rat(1), Rat(1)}));
  CHECK(m111.at(Partition({3})) == QPoly::t_monomial(Rat(1), 3));

  // top coefficient: the full-row multiplicity is t^{a(lambda)}
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      auto m = graded_char_M_lambda(lambda);
      CHECK(m.at(Partition({n})) ==
            QPoly::t_monomial(Rat(1), static_cast<int>(lambda.a_function())));
      CHECK(m.at(lambda).is_one());
    }
}

TEST_CASE("standard module at t = 1 is the induced permutation character") {
  for (int n = 2; n <= 6; ++n) {
    GroupSpec g{Family::A, n};
    for (const auto& lambda : enumerate_partitions(n)) {
      std::vector<SubgroupFactor> factors;
      std::vector<ClassFunction> vals;
      for (int part : lambda.parts()) {
        factors.push_back({Family::A, part});
        vals.emplace_back(enumerate_partitions(part).size(), Rat(1));
      }
      auto ind = decompose(induce_character(factors, vals, g), g);
      auto m = graded_char_M_lambda(lambda);
      std::map<BiPartition, long> att1;
      for (const auto& [mu, poly] : m) {
        Rat v = poly.evaluate(Rat(1));
        att1[BiPartition(mu, Partition())] = static_cast<long>(numerator(v));
      }
      CHECK(ind == att1);
    }
  }
}

TEST_CASE("table cache round trip and corruption recovery") {
  std::string dir = "./weylchar-test-cache";
  std::filesystem::remove_all(dir);
  setenv("KOSTKA_CACHE_DIR", dir.c_str(), 1);
  GroupSpec g{Family::BC, 2};
  CharTable fresh = build_char_table(g);  // builds and writes the cache file
  CharTable loaded = build_char_table(g);  // served from disk
  CHECK(loaded.values == fresh.values);
  // corrupt every cached file and verify the rebuild matches
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(entry.path());
    out << "{\"version\": 1, \"garbage\": true";
  }
  CharTable rebuilt = build_char_table(g);
  CHECK(rebuilt.values == fresh.values);
  unsetenv("KOSTKA_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
