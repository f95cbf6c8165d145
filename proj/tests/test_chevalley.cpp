#include "parab/chevalley.hpp"

#include "parab/grading.hpp"

#include <doctest.h>

#include <random>

using namespace parab;

namespace {

Root rv(std::vector<int> c) { return Root{std::move(c)}; }

std::vector<Rat> basis_vec(const ChevalleyBasis& cb, int idx) {
  std::vector<Rat> v(cb.dim(), Rat(0));
  v[idx] = 1;
  return v;
}

bool jacobi_holds(const ChevalleyBasis& cb, int a, int b, int c) {
  // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
  std::vector<Rat> acc(cb.dim(), Rat(0));
  auto add_term = [&](int x, int y, int z) {
    for (const auto& [w, v1] : cb.bracket_basis(y, z))
      for (const auto& [u, v2] : cb.bracket_basis(x, w)) acc[u] += Rat(v1) * v2;
  };
  add_term(a, b, c);
  add_term(b, c, a);
  add_term(c, a, b);
  for (const Rat& v : acc)
    if (v != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("sl2 relations") {
  auto cb = get_chevalley({Family::A, 1});
  Root a = rv({1});
  int e = cb->e_index(a), f = cb->e_index(-a), h = cb->h_index(1);
  auto ef = cb->bracket_basis(e, f);
  REQUIRE(ef.size() == 1);
  CHECK(ef[0] == std::pair<int, long long>{h, 1});
  auto he = cb->bracket_basis(h, e);
  REQUIRE(he.size() == 1);
  CHECK(he[0] == std::pair<int, long long>{e, 2});
  auto hf = cb->bracket_basis(h, f);
  REQUIRE(hf.size() == 1);
  CHECK(hf[0] == std::pair<int, long long>{f, -2});
}

TEST_CASE("A2 constants are +-1 and Jacobi holds exhaustively") {
  auto cb = get_chevalley({Family::A, 2});
  CHECK(std::abs(cb->structure_constant(rv({1, 0}), rv({0, 1}))) == 1);
  for (int a = 0; a < cb->dim(); ++a)
    for (int b = a; b < cb->dim(); ++b)
      for (int c = b; c < cb->dim(); ++c) CHECK(jacobi_holds(*cb, a, b, c));
}

TEST_CASE("G2 root-string magnitudes") {
  auto cb = get_chevalley({Family::G, 2});
  // alpha_1 short: the string of alpha_1+alpha_2 through alpha_1 has p = 1,
  // so |N| = 2.
  CHECK(std::abs(cb->structure_constant(rv({1, 0}), rv({1, 1}))) == 2);
  CHECK(std::abs(cb->structure_constant(rv({1, 0}), rv({0, 1}))) == 1);
  CHECK(std::abs(cb->structure_constant(rv({1, 0}), rv({2, 1}))) == 3);
  CHECK(cb->structure_constant(rv({3, 1}), rv({1, 0})) == 0);
}

TEST_CASE("antisymmetry and the root-string law |N| = p+1") {
  for (LieType t : {LieType{Family::B, 3}, LieType{Family::C, 3}, LieType{Family::D, 4},
                    LieType{Family::G, 2}, LieType{Family::F, 4}}) {
    auto cb = get_chevalley(t);
    const auto& rs = cb->roots();
    std::vector<Root> all;
    for (const Root& b : rs.positive_roots()) {
      all.push_back(b);
      all.push_back(-b);
    }
    for (const Root& b : all)
      for (const Root& g : all) {
        Root s = b + g;
        bool zero = std::all_of(s.c.begin(), s.c.end(), [](int v) { return v == 0; });
        if (zero) continue;
        long long n = cb->structure_constant(b, g);
        CHECK(n == -cb->structure_constant(g, b));
        if (!rs.is_root(s)) {
          CHECK(n == 0);
        } else {
          CHECK(std::abs(n) == rs.string_down(g, b) + 1);
        }
      }
  }
}

TEST_CASE("Jacobi exhaustively for every family at rank <= 4") {
  for (LieType t : {LieType{Family::A, 3}, LieType{Family::B, 4}, LieType{Family::C, 4},
                    LieType{Family::D, 4}, LieType{Family::F, 4}, LieType{Family::G, 2}}) {
    auto cb = get_chevalley(t);
    bool ok = true;
    for (int a = 0; a < cb->dim() && ok; ++a)
      for (int b = a + 1; b < cb->dim() && ok; ++b)
        for (int c = b + 1; c < cb->dim() && ok; ++c)
          if (!jacobi_holds(*cb, a, b, c)) ok = false;
    CHECK_MESSAGE(ok, t.name());
  }
}

TEST_CASE("Jacobi on seeded random triples up to rank 8") {
  for (LieType t : {LieType{Family::A, 8}, LieType{Family::B, 8}, LieType{Family::C, 8},
                    LieType{Family::D, 8}, LieType{Family::E, 8}}) {
    auto cb = get_chevalley(t);
    std::mt19937 rng(20240611u + t.rank + int(family_letter(t.family)));
    std::uniform_int_distribution<int> pick(0, cb->dim() - 1);
    bool ok = true;
    for (int k = 0; k < 10000 && ok; ++k)
      if (!jacobi_holds(*cb, pick(rng), pick(rng), pick(rng))) ok = false;
    CHECK_MESSAGE(ok, t.name());
  }
}

TEST_CASE("coroot expansion: bracket of e_theta with e_-theta") {
  auto cb = get_chevalley({Family::B, 2});
  Root theta = cb->roots().highest_root();
  auto co = cb->coroot(theta);  // theta = a1+2a2 short coroot... theta long: 2/(2)=1
  auto br = cb->bracket_basis(cb->e_index(theta), cb->e_index(-theta));
  REQUIRE(br.size() == co.size() - std::count(co.begin(), co.end(), 0));
  for (const auto& [idx, v] : br) CHECK(v == co[idx]);
  // [h_i, e_theta] = <theta, alpha_i^vee> e_theta
  for (int i = 1; i <= 2; ++i) {
    auto hb = cb->bracket_basis(cb->h_index(i), cb->e_index(theta));
    long long want = cb->roots().pairing(theta, i);
    if (want == 0) {
      CHECK(hb.empty());
    } else {
      REQUIRE(hb.size() == 1);
      CHECK(hb[0].second == want);
    }
  }
}

TEST_CASE("bracket is alternating on vectors") {
  auto cb = get_chevalley({Family::C, 3});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rat> x(cb->dim()), y(cb->dim());
    for (int i = 0; i < cb->dim(); ++i) {
      x[i] = coef(rng);
      y[i] = coef(rng);
    }
    auto xx = cb->bracket(x, x);
    for (const Rat& v : xx) CHECK(v == 0);
    auto xy = cb->bracket(x, y);
    auto yx = cb->bracket(y, x);
    for (int i = 0; i < cb->dim(); ++i) CHECK(xy[i] == -yx[i]);
  }
}

TEST_CASE("Killing form: weight orthogonality and theta pairing") {
  auto cb = get_chevalley({Family::B, 3});
  Root theta = cb->roots().highest_root();
  CHECK(cb->killing(cb->e_index(theta), cb->e_index(theta)) == 0);
  CHECK(cb->killing_pair(theta) != 0);
  // sampled off-pair zeros
  const auto& pos = cb->roots().positive_roots();
  for (size_t a = 0; a < pos.size(); ++a)
    for (size_t b = 0; b < pos.size(); ++b) {
      if (pos[a] + pos[b] == theta) continue;
      CHECK(cb->killing(cb->e_index(pos[a]), cb->e_index(pos[b])) == 0);
    }
}

TEST_CASE("Killing form is ad-invariant (exhaustive rank <= 3, sampled D5)") {
  for (LieType t : {LieType{Family::B, 2}, LieType{Family::A, 2}, LieType{Family::G, 2}}) {
    auto cb = get_chevalley(t);
    const int n = cb->dim();
    std::vector<std::vector<Rat>> K(n, std::vector<Rat>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) K[a][b] = cb->killing(a, b);
    auto check_triple = [&](int a, int b, int c) {
      // B([a,b],c) = B(a,[b,c])
      Rat lhs(0), rhs(0);
      for (const auto& [w, v] : cb->bracket_basis(a, b)) lhs += Rat(v) * K[w][c];
      for (const auto& [w, v] : cb->bracket_basis(b, c)) rhs += Rat(v) * K[a][w];
      return lhs == rhs;
    };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) CHECK(check_triple(a, b, c));
  }
  {
    auto cb = get_chevalley({Family::D, 5});
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, cb->dim() - 1);
    for (int k = 0; k < 2000; ++k) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      Rat lhs(0), rhs(0);
      for (const auto& [w, v] : cb->bracket_basis(a, b)) lhs += Rat(v) * cb->killing(w, c);
      for (const auto& [w, v] : cb->bracket_basis(b, c)) rhs += Rat(v) * cb->killing(a, w);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bracket respects any parabolic grading") {
  auto cb = get_chevalley({Family::B, 3});
  auto rs = cb->roots_ptr();
  for (std::set<int> sigma : {std::set<int>{1}, std::set<int>{2}, std::set<int>{1, 3}}) {
    ParabolicGrading g(rs, CrossedDiagram{{Family::B, 3}, sigma});
    for (int a = 0; a < cb->dim(); ++a)
      for (int b = 0; b < cb->dim(); ++b) {
        int da = ht_sigma(cb->weight_of(a), sigma), db = ht_sigma(cb->weight_of(b), sigma);
        for (const auto& [c, v] : cb->bracket_basis(a, b)) {
          (void)v;
          CHECK(ht_sigma(cb->weight_of(c), sigma) == da + db);
        }
      }
    (void)g;
  }
}

TEST_CASE("Killing nondegeneracy on graded pairings p_i x p_-i") {
  for (LieType t : {LieType{Family::A, 3}, LieType{Family::B, 3}, LieType{Family::C, 3},
                    LieType{Family::G, 2}}) {
    auto cb = get_chevalley(t);
    auto rs = cb->roots_ptr();
    for (int node = 1; node <= t.rank; ++node) {
      ParabolicGrading g(rs, CrossedDiagram{t, {node}});
      for (int i = 0; i <= g.depth(); ++i) {
        std::vector<int> plus_idx, minus_idx;
        for (const Root& b : g.component(i)) plus_idx.push_back(cb->e_index(b));
        for (const Root& b : g.component(-i)) minus_idx.push_back(cb->e_index(b));
        if (i == 0)
          for (int k = 1; k <= t.rank; ++k) {
            plus_idx.push_back(cb->h_index(k));
            minus_idx.push_back(cb->h_index(k));
          }
        QMat m(int(plus_idx.size()), int(minus_idx.size()));
        for (size_t r = 0; r < plus_idx.size(); ++r)
          for (size_t c = 0; c < minus_idx.size(); ++c)
            m.at(int(r), int(c)) = cb->killing(plus_idx[r], minus_idx[c]);
        CHECK(rank_of(m) == int(plus_idx.size()));
      }
    }
  }
}

TEST_CASE("B restricted to p_1 x p_-1 for (A3, alpha_1) has rank 3") {
  auto cb = get_chevalley({Family::A, 3});
  ParabolicGrading g(cb->roots_ptr(), CrossedDiagram{{Family::A, 3}, {1}});
  auto plus = g.component(1);
  auto minus = g.component(-1);
  REQUIRE(plus.size() == 3);
  QMat m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      m.at(r, c) = cb->killing(cb->e_index(plus[r]), cb->e_index(minus[c]));
  CHECK(rank_of(m) == 3);
}
