#include "parab/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace parab {

namespace {

bool is_zero_vec(const Root& r) {
  return std::all_of(r.c.begin(), r.c.end(), [](int v) { return v == 0; });
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(RootSystemPtr rs)
    : rs_(std::move(rs)), rank_(rs_->rank()), nroots_(int(rs_->positive_roots().size())) {
  build_constants();
  build_table();
  killing_pair_.resize(nroots_);
  killing_pair_set_.assign(nroots_, 0);
}

int ChevalleyBasis::e_index(const Root& beta) const {
  if (beta.is_positive()) return rank_ + rs_->root_id(beta);
  return rank_ + nroots_ + rs_->root_id(-beta);
}

Root ChevalleyBasis::weight_of(int idx) const {
  if (idx < rank_) {
    Root z;
    z.c.assign(rank_, 0);
    return z;
  }
  int r = idx - rank_;
  if (r < nroots_) return rs_->positive_roots()[r];
  return -rs_->positive_roots()[r - nroots_];
}

int ChevalleyBasis::sid(const Root& beta, bool& positive) const {
  positive = beta.is_positive();
  return positive ? rs_->root_id(beta) : nroots_ + rs_->root_id(-beta);
}

// The N-table is built in root-height order. Extraspecial pairs get the
// positive sign; every other special pair is solved from a Jacobi relation on
// the quadruple (beta1, -beta, -gamma), with mixed-sign constants rotated to
// positive pairs through the cyclic relation
//   N(x,y)/(z,z) = N(y,z)/(x,x)   for roots x + y + z = 0.
void ChevalleyBasis::build_constants() {
  const auto& pos = rs_->positive_roots();
  nmat_.assign(2 * nroots_, std::vector<long long>(2 * nroots_, 0));

  auto nmat_get = [&](const Root& x, const Root& y) -> long long {
    bool px, py;
    int a = sid(x, px), b = sid(y, py);
    return nmat_[a][b];
  };
  auto nmat_set = [&](const Root& x, const Root& y, long long v) {
    bool px, py;
    int a = sid(x, px), b = sid(y, py);
    nmat_[a][b] = v;
    // antisymmetry and N(-x,-y) = -N(x,y)
    int na = px ? a + nroots_ : a - nroots_;
    int nb = py ? b + nroots_ : b - nroots_;
    nmat_[b][a] = -v;
    nmat_[na][nb] = -v;
    nmat_[nb][na] = v;
  };

  // Resolves N for arbitrary sign patterns from the stored positive pairs.
  std::function<Rat(const Root&, const Root&)> n_any = [&](const Root& x,
                                                           const Root& y) -> Rat {
    if (!rs_->is_root(x) || !rs_->is_root(y)) return Rat(0);
    Root s = x + y;
    if (is_zero_vec(s) || !rs_->is_root(s)) return Rat(0);
    bool px = x.is_positive(), py = y.is_positive();
    if (px == py) return Rat(nmat_get(x, y));
    Root tau = -s;
    return rs_->form(tau, tau) / rs_->form(x, x) * n_any(y, tau);
  };

  for (const Root& xi : pos) {
    if (xi.height() == 1) continue;
    // ordered decompositions beta < gamma with beta + gamma = xi
    std::vector<std::pair<Root, Root>> pairs;
    for (const Root& beta : pos) {
      if (!root_less(beta, xi)) break;
      Root gamma = xi - beta;
      if (!gamma.is_positive() || !rs_->is_root(gamma)) continue;
      if (root_less(beta, gamma)) pairs.emplace_back(beta, gamma);
    }
    if (pairs.empty()) throw std::logic_error("no decomposition of " + xi.str());

    const Root& b1 = pairs.front().first;   // extraspecial: minimal first member
    const Root& g1 = pairs.front().second;
    long long p1 = rs_->string_down(g1, b1);
    nmat_set(b1, g1, p1 + 1);

    for (size_t k = 1; k < pairs.size(); ++k) {
      const Root& beta = pairs[k].first;
      const Root& gamma = pairs[k].second;
      // N(beta1, -xi) via the cyclic relation with (beta1, -xi, gamma1)
      Rat n_b1_mxi = rs_->form(g1, g1) / rs_->form(xi, xi) * Rat(-nmat_get(b1, g1));
      Rat rhs = n_any(-gamma, b1) * n_any(-beta, b1 - gamma) +
                n_any(b1, -beta) * n_any(-gamma, b1 - beta);
      Rat val = rhs / n_b1_mxi;
      if (denominator(val) != 1)
        throw std::logic_error("non-integral structure constant at " + xi.str());
      long long v = (long long)numerator(val);
      long long want = rs_->string_down(gamma, beta) + 1;
      if (v != want && v != -want)
        throw std::logic_error("structure constant magnitude violates root string at " +
                               beta.str() + "," + gamma.str());
      nmat_set(beta, gamma, v);
    }
  }

  // Materialize the mixed-sign constants from the positive-pair table.
  std::vector<Root> all;
  for (const Root& b : pos) {
    all.push_back(b);
    all.push_back(-b);
  }
  for (const Root& x : all)
    for (const Root& y : all) {
      if (x.is_positive() == y.is_positive()) continue;
      Root s = x + y;
      if (is_zero_vec(s) || !rs_->is_root(s)) continue;
      Rat v = n_any(x, y);
      if (denominator(v) != 1)
        throw std::logic_error("non-integral mixed structure constant at " + x.str() + "," +
                               y.str());
      bool px, py;
      nmat_[sid(x, px)][sid(y, py)] = (long long)numerator(v);
    }
}

long long ChevalleyBasis::structure_constant(const Root& beta, const Root& gamma) const {
  Root s = beta + gamma;
  if (is_zero_vec(s) || !rs_->is_root(s)) return 0;
  bool pb, pg;
  return nmat_[sid(beta, pb)][sid(gamma, pg)];
}

std::vector<long long> ChevalleyBasis::coroot(const Root& beta) const {
  Rat len = rs_->form(beta, beta);
  std::vector<long long> c(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rat v = Rat(beta.c[i]) * rs_->form(i + 1, i + 1) / len;
    if (denominator(v) != 1) throw std::logic_error("non-integral coroot coefficient");
    c[i] = (long long)numerator(v);
  }
  return c;
}

void ChevalleyBasis::build_table() {
  const int n = dim();
  table_.assign(size_t(n) * n, {});
  auto put = [&](int a, int b, std::vector<std::pair<int, long long>> v) {
    table_[size_t(a) * n + b] = std::move(v);
  };

  const auto& pos = rs_->positive_roots();
  for (int i = 0; i < rank_; ++i) {
    for (int r = 0; r < nroots_; ++r) {
      for (int sign = 0; sign < 2; ++sign) {
        Root beta = sign ? -pos[r] : pos[r];
        int eb = rank_ + r + sign * nroots_;
        long long k = rs_->pairing(beta, i + 1);
        if (k != 0) {
          put(i, eb, {{eb, k}});
          put(eb, i, {{eb, -k}});
        }
      }
    }
  }
  for (int a = rank_; a < n; ++a) {
    Root beta = weight_of(a);
    for (int b = rank_; b < n; ++b) {
      Root gamma = weight_of(b);
      Root s = beta + gamma;
      if (is_zero_vec(s)) {
        bool bpos = beta.is_positive();
        auto co = coroot(bpos ? beta : gamma);
        std::vector<std::pair<int, long long>> v;
        for (int i = 0; i < rank_; ++i)
          if (co[i] != 0) v.emplace_back(i, bpos ? co[i] : -co[i]);
        put(a, b, std::move(v));
      } else if (rs_->is_root(s)) {
        long long nn = structure_constant(beta, gamma);
        if (nn != 0) put(a, b, {{e_index(s), nn}});
      }
    }
  }
}

const std::vector<std::pair<int, long long>>& ChevalleyBasis::bracket_basis(int a, int b) const {
  return table_[size_t(a) * dim() + b];
}

std::vector<Rat> ChevalleyBasis::bracket(const std::vector<Rat>& x,
                                         const std::vector<Rat>& y) const {
  std::vector<Rat> out(dim(), Rat(0));
  for (int a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      for (const auto& [c, v] : bracket_basis(a, b)) out[c] += x[a] * y[b] * v;
    }
  }
  return out;
}

Rat ChevalleyBasis::killing(int a, int b) const {
  long long sum = 0;
  for (int c = 0; c < dim(); ++c)
    for (const auto& [d, v1] : bracket_basis(b, c))
      for (const auto& [e, v2] : bracket_basis(a, d))
        if (e == c) sum += v1 * v2;
  return Rat(sum);
}

Rat ChevalleyBasis::killing_pair(const Root& beta) const {
  Root b = beta.is_positive() ? beta : -beta;
  int r = rs_->root_id(b);
  if (!killing_pair_set_[r]) {
    killing_pair_[r] = killing(e_index(b), e_index(-b));
    killing_pair_set_[r] = 1;
  }
  return killing_pair_[r];
}

ChevalleyPtr get_chevalley(const LieType& t) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, ChevalleyPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(family_letter(t.family), t.rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto cb = std::make_shared<const ChevalleyBasis>(get_root_system(t));
  cache.emplace(key, cb);
  return cb;
}

}  // namespace parab
