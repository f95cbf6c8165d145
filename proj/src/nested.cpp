#include "parab/nested.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace parab {

std::string ComponentSel::str() const {
  std::string s(1, alg);
  s += std::to_string(degree);
  if (refine) s += refine;
  return s;
}

ComponentSel ComponentSel::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'p' && s[0] != 'q'))
    throw std::invalid_argument("bad component selector: " + s);
  ComponentSel sel;
  sel.alg = s[0];
  size_t end = s.size();
  char last = s.back();
  if (last == 'F' || last == 'V') {
    sel.refine = last;
    --end;
  }
  sel.degree = std::stoi(s.substr(1, end - 1));
  if (sel.refine && (sel.alg != 'q' || std::abs(sel.degree) != 1))
    throw std::invalid_argument("F/V refinement only applies to q(+-1): " + s);
  return sel;
}

namespace {

std::set<int> sigma_q_of(const RootSystem& rs, int alpha) {
  std::set<int> s{alpha};
  for (int j : rs.neighbors(alpha)) s.insert(j);
  return s;
}

}  // namespace

NestedPair::NestedPair(LieType t, int alpha_node)
    : type_(t),
      alpha_(alpha_node),
      alpha_long_(false),
      kind_(CaseKind::Other),
      rs_(get_root_system(t)),
      p_(rs_, CrossedDiagram{t, {alpha_node}}),
      q_(rs_, CrossedDiagram{t, sigma_q_of(*rs_, alpha_node)}) {
  alpha_long_ = rs_->is_simple_root_long(alpha_);
  kind_ = classify_case(t, alpha_);
}

std::pair<int, int> NestedPair::bigrade(const Root& beta) const {
  return {p_.degree(beta), q_.degree(beta)};
}

std::vector<Root> NestedPair::f_roots(int sign) const {
  return {sign >= 0 ? alpha() : -alpha()};
}

std::vector<Root> NestedPair::v1_roots(int sign) const {
  std::vector<Root> out;
  for (const Root& b : q_.component(sign >= 0 ? 1 : -1))
    if (p_.degree(b) == 0) out.push_back(b);
  return out;
}

std::vector<Root> NestedPair::component(const ComponentSel& sel) const {
  if (sel.alg == 'p') return p_.component(sel.degree);
  if (!sel.refine) return q_.component(sel.degree);
  if (sel.refine == 'F') return f_roots(sel.degree);
  return v1_roots(sel.degree);
}

BracketReport NestedPair::check_bracket_zero(const ComponentSel& a, const ComponentSel& b) const {
  BracketReport rep;
  rep.pair = {a.str(), b.str()};
  auto ra = component(a), rb = component(b);
  rep.empty_component = ra.empty() || rb.empty();
  for (const Root& x : ra)
    for (const Root& y : rb) {
      Root s = x + y;
      bool zero_sum = std::all_of(s.c.begin(), s.c.end(), [](int v) { return v == 0; });
      if (zero_sum || rs_->is_root(s)) rep.witnesses.emplace_back(x, y);
    }
  rep.zero = rep.witnesses.empty();
  return rep;
}

bool NestedPair::ff_model_iso() const {
  std::set<std::vector<int>> q2_minus;
  for (const Root& r : q_.component(-2)) q2_minus.insert(r.c);
  std::set<std::vector<int>> images;
  Root a = alpha();
  for (const Root& b : v1_roots(-1)) {
    Root img = b - a;
    if (!rs_->is_root(img)) return false;
    images.insert(img.c);
  }
  return images == q2_minus;
}

bool NestedPair::check_abelian_v() const {
  auto v = v1_roots(-1);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (rs_->is_root(v[i] + v[j])) return false;
  return true;
}

bool NestedPair::check_p1_eq_q4() const {
  if (kind_ != CaseKind::Contact && kind_ != CaseKind::BD3)
    throw std::logic_error("p^1 = q^4 is only asserted for contact/BD3 cases; got " +
                           case_name(kind_));
  for (const Root& b : rs_->positive_roots()) {
    if ((p_.degree(b) >= 1) != (q_.degree(b) >= 4)) return false;
    if ((p_.degree(-b) >= 1) != (q_.degree(-b) >= 4)) return false;
  }
  return true;
}

NestedChecks run_nested_checks(const NestedPair& np) {
  NestedChecks out;
  const RootSystem& rs = np.roots();
  const auto& sigma_q = np.q().diagram().sigma;
  std::set<int> nbrs = sigma_q;
  nbrs.erase(np.alpha_node());

  out.q2_bigrade_split = true;
  out.q2_pairing_minus_one = true;
  for (const Root& b : np.q().component(-2)) {
    if (np.p().degree(b) != -1 || ht_sigma(b, nbrs) != -1) out.q2_bigrade_split = false;
    if (rs.pairing(b, np.alpha_node()) != -1) out.q2_pairing_minus_one = false;
  }

  out.p1_neighbor_sum_bounds = true;
  for (const Root& b : np.p().component(-1)) {
    int s = 0;
    for (int j : nbrs) s += -b.c[j - 1];
    if (s < 0 || s > 3) out.p1_neighbor_sum_bounds = false;
  }

  out.filtration_partition = true;
  {
    std::map<int, int> by_qdeg;
    for (const Root& b : np.p().component(-1)) {
      int d = np.q().degree(b);
      if (d < -4 || d > -1) out.filtration_partition = false;
      by_qdeg[d]++;
    }
    // at q-degree -1 the only member is -alpha itself (the F line)
    if (!by_qdeg.count(-1) || by_qdeg[-1] != 1) out.filtration_partition = false;
  }

  out.f_q3_bracket_zero =
      np.check_bracket_zero(ComponentSel{'q', -1, 'F'}, ComponentSel{'q', -3}).zero;
  return out;
}

}  // namespace parab
