#include "parab/kostant.hpp"

#include "parab/reports.hpp"

#include <doctest.h>

using namespace parab;

namespace {

Root rv(std::vector<int> c) { return Root{std::move(c)}; }

}  // namespace

TEST_CASE("length-2 words: one per Dynkin neighbor") {
  auto w1 = hasse_length2({Family::A, 2}, 1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].j == 2);

  auto w2 = hasse_length2({Family::A, 4}, 2);
  REQUIRE(w2.size() == 2);

  auto w3 = hasse_length2({Family::D, 5}, 3);
  REQUIRE(w3.size() == 3);  // trivalent node: neighbors 2, 4, 5

  for (const LieType& t : all_types_up_to(8)) {
    auto rs = get_root_system(t);
    for (int i = 1; i <= t.rank; ++i)
      CHECK(hasse_length2(t, i).size() == rs->neighbors(i).size());
  }
}

TEST_CASE("phi of a word: {alpha_i, s_i(alpha_j)}") {
  auto w = hasse_length2({Family::A, 2}, 1);
  CHECK(w[0].phi1 == rv({1, 0}));
  CHECK(w[0].phi2 == rv({1, 1}));
  // short node of G2: s_1(alpha_2) = alpha_2 + 3 alpha_1
  auto wg = hasse_length2({Family::G, 2}, 1);
  CHECK(wg[0].phi2 == rv({3, 1}));
  // long node of G2: s_2(alpha_1) = alpha_1 + alpha_2
  auto wl = hasse_length2({Family::G, 2}, 2);
  CHECK(wl[0].phi2 == rv({1, 1}));
}

TEST_CASE("component data for the worked cases") {
  auto a2 = h2_components({Family::A, 2}, 1);
  REQUIRE(a2.size() == 1);
  CHECK(a2[0].tensor_root == rv({1, 0}));  // -s_1 s_2 (theta) = alpha_1
  CHECK(a2[0].homogeneity_r == 3);
  CHECK(a2[0].levi_dim == 2);

  auto b2 = h2_components({Family::B, 2}, 1);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].homogeneity_r == 3);

  auto a4 = h2_components({Family::A, 4}, 2);
  std::multiset<int> rs;
  for (auto& c : a4) rs.insert(c.homogeneity_r);
  CHECK(rs == std::multiset<int>{1, 2});
}

TEST_CASE("classification sweep matches the family rules for every long node, rank <= 8") {
  for (const LieType& t : all_types_up_to(8)) {
    auto rs = get_root_system(t);
    for (int i = 1; i <= t.rank; ++i) {
      if (!rs->is_simple_root_long(i)) continue;
      auto cls = classify_h2_positive(t, i);
      CHECK_MESSAGE(cls.positive_rs == expected_positive_rs(t, i), t.name(), " node ", i);
    }
  }
}

TEST_CASE("named classification examples") {
  CHECK(classify_h2_positive({Family::C, 4}, 4).positive_rs == std::vector<int>{1});
  CHECK(classify_h2_positive({Family::B, 4}, 1).positive_rs == std::vector<int>{2});
  CHECK(classify_h2_positive({Family::D, 3}, 1).positive_rs == std::vector<int>{2, 2});
  CHECK(classify_h2_positive({Family::A, 3}, 2).positive_rs == std::vector<int>{2, 2});
  CHECK(classify_h2_positive({Family::A, 2}, 1).positive_rs == std::vector<int>{3});
  CHECK(classify_h2_positive({Family::G, 2}, 2).positive_rs == std::vector<int>{1});
  CHECK(classify_h2_positive({Family::E, 8}, 8).positive_rs == std::vector<int>{1});
  CHECK(classify_h2_positive({Family::F, 4}, 2).positive_rs.empty());
  CHECK(classify_h2_positive({Family::E, 8}, 1).positive_rs.empty());
}

TEST_CASE("q-degrees of the quotient components") {
  auto a5 = h0_quotient_components(NestedPair({Family::A, 5}, 3));
  for (auto& c : a5)
    if (c.homogeneity_r == 1) CHECK(c.q_degree == 0);

  auto g2 = h0_quotient_components(NestedPair({Family::G, 2}, 2));
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].homogeneity_r == 1);
  CHECK(g2[0].q_degree == -1);

  auto a4 = h0_quotient_components(NestedPair({Family::A, 4}, 2));
  for (auto& c : a4)
    if (c.homogeneity_r == 2) CHECK(c.q_degree == 2);

  for (const LieType& t : all_types_up_to(8)) {
    auto rs = get_root_system(t);
    for (int i = 1; i <= t.rank; ++i) {
      if (!rs->is_simple_root_long(i)) continue;
      NestedPair np(t, i);
      for (const auto& c : h0_quotient_components(np)) {
        auto want = expected_q_degree(np.kind(), c.homogeneity_r);
        if (want) CHECK_MESSAGE(c.q_degree == *want, t.name(), " node ", i);
      }
    }
  }
}

TEST_CASE("Levi dimensions are positive and dominance holds") {
  for (const LieType& t : all_types_up_to(6)) {
    for (int i = 1; i <= t.rank; ++i) {
      for (const auto& c : h2_components(t, i)) {
        CHECK(c.levi_dim >= 1);  // weyl_dim_levi throws if not Levi-dominant
      }
    }
  }
}

TEST_CASE("tensor root is plus or minus a root") {
  for (const LieType& t : all_types_up_to(8)) {
    auto rs = get_root_system(t);
    for (int i = 1; i <= t.rank; ++i)
      for (const auto& c : h2_components(t, i)) CHECK(rs->is_root(c.tensor_root));
  }
}
