#include "parab/kostant.hpp"

#include <algorithm>
#include <stdexcept>

namespace parab {

std::vector<HasseWord2> hasse_length2(const LieType& t, int i) {
  auto rs = get_root_system(t);
  if (i < 1 || i > t.rank) throw std::invalid_argument("node index out of range");
  std::vector<HasseWord2> out;
  for (int j : rs->neighbors(i)) {
    HasseWord2 w;
    w.i = i;
    w.j = j;
    w.phi1 = rs->simple_root(i);
    w.phi2 = rs->reflect(i, rs->simple_root(j));
    out.push_back(std::move(w));
  }
  return out;
}

Int weyl_dim_levi(const RootSystem& rs, const std::set<int>& sigma,
                  const std::vector<Rat>& lambda) {
  // dim = prod over Levi positive roots of (lambda + rho, beta) / (rho, beta)
  std::vector<Root> levi_pos;
  for (const Root& b : rs.positive_roots())
    if (ht_sigma(b, sigma) == 0) levi_pos.push_back(b);

  std::vector<Rat> rho(rs.rank(), Rat(0));
  for (const Root& b : levi_pos)
    for (int k = 0; k < rs.rank(); ++k) rho[k] += Rat(b.c[k], 2);

  auto pair_form = [&](const std::vector<Rat>& v, const Root& b) {
    Rat s(0);
    for (int x = 0; x < rs.rank(); ++x) {
      if (v[x] == 0) continue;
      for (int y = 0; y < rs.rank(); ++y)
        if (b.c[y] != 0) s += v[x] * b.c[y] * rs.form(x + 1, y + 1);
    }
    return s;
  };

  for (int k = 1; k <= rs.rank(); ++k) {
    if (sigma.count(k)) continue;
    Rat pairing(0);
    Root ak = rs.simple_root(k);
    Rat num = pair_form(lambda, ak);
    pairing = 2 * num / rs.form(k, k);
    if (pairing < 0)
      throw std::logic_error("weight not Levi-dominant at node " + std::to_string(k));
  }

  Rat dim(1);
  for (const Root& b : levi_pos) {
    std::vector<Rat> lam_rho(rs.rank());
    for (int k = 0; k < rs.rank(); ++k) lam_rho[k] = lambda[k] + rho[k];
    dim *= pair_form(lam_rho, b);
    std::vector<Rat> rho_only(rho);
    dim /= pair_form(rho_only, b);
  }
  if (denominator(dim) != 1 || dim <= 0)
    throw std::logic_error("Weyl dimension did not come out a positive integer");
  return numerator(dim);
}

std::vector<H2Component> h2_components(const LieType& t, int i) {
  auto rs = get_root_system(t);
  std::vector<H2Component> out;
  std::set<int> sigma{i};
  for (const HasseWord2& w : hasse_length2(t, i)) {
    H2Component c;
    c.word = w;
    Root wtheta = rs->reflect(w.i, rs->reflect(w.j, rs->highest_root()));
    c.tensor_root = -wtheta;
    c.lowest_weight = w.phi1 + w.phi2 + c.tensor_root;
    c.homogeneity_r = ht_sigma(c.lowest_weight, sigma);

    // Dimension of the Levi module with lowest weight nu: the dual module has
    // highest weight -nu.
    std::vector<Rat> lambda(rs->rank());
    for (int k = 0; k < rs->rank(); ++k) lambda[k] = Rat(-c.lowest_weight.c[k]);
    c.levi_dim = weyl_dim_levi(*rs, sigma, lambda);
    out.push_back(std::move(c));
  }
  return out;
}

H2Classification classify_h2_positive(const LieType& t, int i) {
  H2Classification out;
  out.kind = classify_case(t, i);
  out.total_dim = 0;
  for (const H2Component& c : h2_components(t, i)) {
    out.all_rs.push_back(c.homogeneity_r);
    if (c.homogeneity_r >= 1) out.positive_rs.push_back(c.homogeneity_r);
    out.total_dim += c.levi_dim;
  }
  std::sort(out.positive_rs.begin(), out.positive_rs.end());
  std::sort(out.all_rs.begin(), out.all_rs.end());
  return out;
}

std::vector<H2Component> h0_quotient_components(const NestedPair& np) {
  auto comps = h2_components(np.type(), np.alpha_node());
  const auto& sigma_q = np.q().diagram().sigma;
  for (H2Component& c : comps)
    c.q_degree = ht_sigma(c.word.phi1, sigma_q) + ht_sigma(c.word.phi2, sigma_q) +
                 ht_sigma(c.tensor_root, sigma_q);
  return comps;
}

}  // namespace parab
