#include "parab/grading.hpp"

#include "parab/reports.hpp"

#include <doctest.h>

#include <random>

using namespace parab;

namespace {

ParabolicGrading make(const LieType& t, std::set<int> sigma) {
  return ParabolicGrading(get_root_system(t), CrossedDiagram{t, std::move(sigma)});
}

}  // namespace

TEST_CASE("ht over crossed nodes") {
  auto a3 = get_root_system({Family::A, 3});
  CHECK(ht_sigma(a3->highest_root(), {}) == 0);
  CHECK(ht_sigma(a3->highest_root(), {1}) == 1);
  auto b4 = get_root_system({Family::B, 4});
  CHECK(ht_sigma(b4->highest_root(), {3}) == 2);
}

TEST_CASE("named gradings: dims and depth") {
  auto g1 = make({Family::A, 4}, {2});
  CHECK(g1.dim(-1) == 6);
  CHECK(g1.depth() == 1);

  auto g2 = make({Family::E, 7}, {7});
  CHECK(g2.dim(-1) == 27);
  CHECK(g2.depth() == 1);

  auto g3 = make({Family::G, 2}, {2});
  CHECK(g3.depth() == 2);
  CHECK(g3.dim(2) == 1);
  CHECK(g3.dim(-1) == 4);
}

TEST_CASE("grading well-formedness across every maximal parabolic, rank <= 8") {
  for (const LieType& t : all_types_up_to(8)) {
    for (int i = 1; i <= t.rank; ++i) {
      auto g = make(t, {i});
      CHECK(g.depth() == ht_sigma(g.roots().highest_root(), {i}));
      int total = 0;
      for (int k = -g.depth(); k <= g.depth(); ++k) {
        total += g.dim(k);
        CHECK(g.dim(k) == g.dim(-k));
      }
      CHECK(total == dim_of(t));
      CHECK(g.minus_part_generated_by_first());
    }
  }
}

TEST_CASE("grading well-formedness on seeded multi-cross subsets") {
  std::mt19937 rng(424242);
  for (const LieType& t : all_types_up_to(8)) {
    std::uniform_int_distribution<int> node(1, t.rank);
    for (int trial = 0; trial < 3; ++trial) {
      std::set<int> sigma{node(rng), node(rng)};
      auto g = make(t, sigma);
      int total = 0;
      for (int k = -g.depth(); k <= g.depth(); ++k) {
        total += g.dim(k);
        CHECK(g.dim(k) == g.dim(-k));
      }
      CHECK(total == dim_of(t));
      CHECK(g.minus_part_generated_by_first());

      LeviType levi = levi_type(g);
      int levi_total = levi.center_dim;
      for (const LieType& f : levi.simple_factors) levi_total += dim_of(f);
      CHECK(levi_total == g.dim(0));
    }
  }
}

TEST_CASE("degree additivity at root level") {
  auto g = make({Family::F, 4}, {1});
  const RootSystem& rs = g.roots();
  std::mt19937 rng(99);
  std::uniform_int_distribution<size_t> pick(0, rs.positive_roots().size() - 1);
  for (int k = 0; k < 500; ++k) {
    Root b = rs.positive_roots()[pick(rng)];
    Root c = -rs.positive_roots()[pick(rng)];
    if (auto s = rs.add_root(b, c)) CHECK(g.degree(*s) == g.degree(b) + g.degree(c));
  }
}

TEST_CASE("Levi types by diagram deletion") {
  CHECK(levi_type(make({Family::B, 4}, {3})).label() == "A2xA1");
  CHECK(levi_type(make({Family::A, 2}, {1})).label() == "A1");
  CHECK(levi_type(make({Family::C, 3}, {3})).label() == "A2");
  CHECK(levi_type(make({Family::B, 5}, {3})).label() == "A2xB2");
  CHECK(levi_type(make({Family::F, 4}, {1})).label() == "C3");
  CHECK(levi_type(make({Family::F, 4}, {4})).label() == "B3");
  CHECK(levi_type(make({Family::E, 7}, {1})).label() == "D6");
  CHECK(levi_type(make({Family::E, 6}, {2})).label() == "A5");
  CHECK(levi_type(make({Family::E, 8}, {8})).label() == "E7");
  CHECK(levi_type(make({Family::D, 7}, {3})).label() == "D4xA2");
  CHECK(levi_type(make({Family::A, 1}, {1})).label() == "0");
  CHECK(levi_type(make({Family::G, 2}, {2})).label() == "A1");
}

TEST_CASE("case classification") {
  CHECK(classify_case({Family::A, 5}, 3) == CaseKind::Symmetric);
  CHECK(classify_case({Family::E, 8}, 8) == CaseKind::Contact);
  CHECK(classify_case({Family::B, 5}, 3) == CaseKind::BD3);
  CHECK(classify_case({Family::D, 5}, 3) == CaseKind::BD3);
  CHECK(classify_case({Family::D, 4}, 3) == CaseKind::Symmetric);
  CHECK(triality_spin_node({Family::D, 4}, 3));
  CHECK_FALSE(triality_spin_node({Family::D, 5}, 3));
  CHECK(classify_case({Family::B, 5}, 5) == CaseKind::ShortRoot);
  CHECK(classify_case({Family::C, 5}, 2) == CaseKind::ShortRoot);
  CHECK(classify_case({Family::C, 5}, 5) == CaseKind::Symmetric);
  CHECK(classify_case({Family::G, 2}, 1) == CaseKind::ShortRoot);
  CHECK(classify_case({Family::G, 2}, 2) == CaseKind::Contact);
  CHECK(classify_case({Family::F, 4}, 1) == CaseKind::Contact);
  CHECK(classify_case({Family::F, 4}, 2) == CaseKind::Other);
  CHECK(classify_case({Family::B, 2}, 1) == CaseKind::Symmetric);
  CHECK(classify_case({Family::B, 3}, 2) == CaseKind::Contact);
  CHECK(classify_case({Family::D, 4}, 2) == CaseKind::Contact);
  CHECK(classify_case({Family::E, 6}, 2) == CaseKind::Contact);
  CHECK(classify_case({Family::E, 7}, 1) == CaseKind::Contact);
  CHECK(classify_case({Family::E, 7}, 2) == CaseKind::Other);
  CHECK(classify_case({Family::E, 6}, 1) == CaseKind::Symmetric);
  CHECK(classify_case({Family::E, 8}, 1) == CaseKind::Other);
}
