#include "parab/nested.hpp"

#include "parab/reports.hpp"

#include <doctest.h>

using namespace parab;

namespace {

std::vector<std::pair<LieType, int>> long_cases(int max_rank) {
  std::vector<std::pair<LieType, int>> out;
  for (const LieType& t : all_types_up_to(max_rank)) {
    auto rs = get_root_system(t);
    for (int i = 1; i <= t.rank; ++i)
      if (rs->is_simple_root_long(i)) out.emplace_back(t, i);
  }
  return out;
}

}  // namespace

TEST_CASE("q crosses alpha and its neighbors") {
  CHECK(NestedPair({Family::A, 3}, 1).q().diagram().sigma == std::set<int>{1, 2});
  CHECK(NestedPair({Family::B, 4}, 3).q().diagram().sigma == std::set<int>{2, 3, 4});
  CHECK(NestedPair({Family::G, 2}, 2).q().diagram().sigma == std::set<int>{1, 2});
  CHECK(NestedPair({Family::D, 5}, 3).q().diagram().sigma == std::set<int>{2, 3, 4, 5});
}

TEST_CASE("depth of q per family") {
  CHECK(NestedPair({Family::C, 3}, 3).depth_q() == 3);
  CHECK(NestedPair({Family::A, 3}, 1).depth_q() == 2);
  CHECK(NestedPair({Family::B, 4}, 3).depth_q() == 6);
  CHECK(NestedPair({Family::G, 2}, 2).depth_q() == 5);
  CHECK(NestedPair({Family::A, 1}, 1).depth_q() == 1);  // degenerate chain end
  for (auto [t, i] : long_cases(8)) {
    auto expected = expected_depth_q(t, i);
    if (!expected) continue;
    CHECK_MESSAGE(NestedPair(t, i).depth_q() == *expected, t.name(), " node ", i);
  }
}

TEST_CASE("component selectors parse and print") {
  CHECK(ComponentSel::parse("q-1F").str() == "q-1F");
  CHECK(ComponentSel::parse("p2").str() == "p2");
  CHECK(ComponentSel::parse("q-4").degree == -4);
  CHECK_THROWS_AS(ComponentSel::parse("q-2F"), std::invalid_argument);
  CHECK_THROWS_AS(ComponentSel::parse("z1"), std::invalid_argument);
}

TEST_CASE("bracket vanishing [q_{-1}^F, q_{-2}] for long roots; G2 short-root witness") {
  for (auto [t, i] : long_cases(8)) {
    NestedPair np(t, i);
    auto rep = np.check_bracket_zero(ComponentSel::parse("q-1F"), ComponentSel::parse("q-2"));
    CHECK_MESSAGE(rep.zero, t.name(), " node ", i);
  }
  NestedPair g2s({Family::G, 2}, 1);
  auto rep = g2s.check_bracket_zero(ComponentSel::parse("q-1F"), ComponentSel::parse("q-2"));
  CHECK_FALSE(rep.zero);
  REQUIRE(rep.witnesses.size() > 0);
  CHECK(rep.witnesses.front().first == Root{{-1, 0}});
  CHECK(rep.witnesses.front().second == Root{{-1, -1}});
}

TEST_CASE("vertical part is abelian; F line is one-dimensional; F/V split") {
  for (auto [t, i] : long_cases(8)) {
    NestedPair np(t, i);
    CHECK(np.check_abelian_v());
    CHECK(np.f_roots(-1).size() == 1);
    auto q1 = np.q().component(-1);
    CHECK(q1.size() == 1 + np.v1_roots(-1).size());
  }
  // negative control: all of q_- for a depth >= 2 parabolic is not abelian
  NestedPair g2(LieType{Family::G, 2}, 2);
  auto all_qm = g2.q().component(-1);
  for (const Root& r : g2.q().component(-2)) all_qm.push_back(r);
  bool abelian = true;
  for (size_t a = 0; a < all_qm.size(); ++a)
    for (size_t b = a + 1; b < all_qm.size(); ++b)
      if (g2.roots().is_root(all_qm[a] + all_qm[b])) abelian = false;
  CHECK_FALSE(abelian);
}

TEST_CASE("bracket with the F line identifies vertical and q_{-2} parts") {
  NestedPair c3({Family::C, 3}, 3);
  CHECK(c3.ff_model_iso());
  CHECK(c3.v1_roots(-1).size() == 2);
  CHECK(c3.q().component(-2).size() == 2);

  NestedPair g2({Family::G, 2}, 2);
  CHECK(g2.ff_model_iso());
  CHECK(g2.v1_roots(-1).size() == 1);
  CHECK(g2.q().component(-2).size() == 1);

  NestedPair e7({Family::E, 7}, 7);
  CHECK(e7.ff_model_iso());
  CHECK(e7.v1_roots(-1).size() == 16);
  CHECK(e7.q().component(-2).size() == 16);

  for (auto [t, i] : long_cases(8)) CHECK_MESSAGE(NestedPair(t, i).ff_model_iso(), t.name());
}

TEST_CASE("filtration levels: p^1 = q^4 in contact and BD3 cases") {
  CHECK(NestedPair({Family::G, 2}, 2).check_p1_eq_q4());
  CHECK(NestedPair({Family::E, 8}, 8).check_p1_eq_q4());
  CHECK(NestedPair({Family::B, 4}, 3).check_p1_eq_q4());
  for (auto [t, i] : long_cases(8)) {
    NestedPair np(t, i);
    if (np.kind() == CaseKind::Contact || np.kind() == CaseKind::BD3)
      CHECK_MESSAGE(np.check_p1_eq_q4(), t.name(), " node ", i);
  }
  CHECK_THROWS_AS(NestedPair({Family::A, 3}, 1).check_p1_eq_q4(), std::logic_error);
}

TEST_CASE("root-level proof obligations across all long cases up to rank 8") {
  for (auto [t, i] : long_cases(8)) {
    NestedPair np(t, i);
    NestedChecks nc = run_nested_checks(np);
    CHECK_MESSAGE(nc.q2_bigrade_split, t.name(), " node ", i);
    CHECK_MESSAGE(nc.q2_pairing_minus_one, t.name(), " node ", i);
    CHECK_MESSAGE(nc.p1_neighbor_sum_bounds, t.name(), " node ", i);
    CHECK_MESSAGE(nc.filtration_partition, t.name(), " node ", i);
    CHECK_MESSAGE(nc.f_q3_bracket_zero, t.name(), " node ", i);
  }
}

TEST_CASE("contact/BD3 bracket vanishings of the deep components") {
  for (auto [t, i] : long_cases(8)) {
    NestedPair np(t, i);
    if (np.kind() != CaseKind::Contact && np.kind() != CaseKind::BD3) continue;
    CHECK(np.check_bracket_zero(ComponentSel::parse("q2"), ComponentSel::parse("q-4")).zero);
    CHECK(np.check_bracket_zero(ComponentSel::parse("q1F"), ComponentSel::parse("q-4")).zero);
  }
  NestedPair f4({Family::F, 4}, 1);
  CHECK(f4.check_bracket_zero(ComponentSel::parse("q2"), ComponentSel::parse("q-4")).zero);
  CHECK(f4.check_bracket_zero(ComponentSel::parse("q1F"), ComponentSel::parse("q-4")).zero);
}

TEST_CASE("bigrade bookkeeping") {
  NestedPair np({Family::B, 4}, 3);
  auto [dp, dq] = np.bigrade(np.roots().highest_root());
  CHECK(dp == 2);
  CHECK(dq == 6);
  auto rep = np.check_bracket_zero(ComponentSel::parse("q-1F"), ComponentSel::parse("q4"));
  CHECK_FALSE(rep.empty_component);
}
