#include "parab/grading.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parab {

std::string CrossedDiagram::str() const {
  std::ostringstream os;
  os << type.name() << ":";
  for (int i = 1; i <= type.rank; ++i) os << (sigma.count(i) ? 'x' : '*');
  return os.str();
}

int ht_sigma(const Root& beta, const std::set<int>& sigma) {
  int s = 0;
  for (int i : sigma) s += beta.c[i - 1];
  return s;
}

std::string case_name(CaseKind k) {
  switch (k) {
    case CaseKind::Symmetric: return "symmetric";
    case CaseKind::Contact: return "contact";
    case CaseKind::BD3: return "BD3";
    case CaseKind::Other: return "other";
    case CaseKind::ShortRoot: return "short-root";
  }
  return "?";
}

ParabolicGrading::ParabolicGrading(RootSystemPtr rs, CrossedDiagram d)
    : rs_(std::move(rs)), diagram_(std::move(d)) {
  for (int i : diagram_.sigma)
    if (i < 1 || i > rs_->rank())
      throw std::invalid_argument("crossed node " + std::to_string(i) + " out of range for " +
                                  diagram_.type.name());
  for (const Root& b : rs_->positive_roots()) {
    int deg = degree(b);
    components_[deg].push_back(b);
    components_[-deg].push_back(-b);
    if (deg >= 1) plus_roots_.push_back(b);
  }
  depth_ = degree(rs_->highest_root());
}

const std::vector<Root>& ParabolicGrading::component(int i) const {
  auto it = components_.find(i);
  return it == components_.end() ? empty_ : it->second;
}

int ParabolicGrading::dim(int i) const {
  return int(component(i).size()) + (i == 0 ? rs_->rank() : 0);
}

bool ParabolicGrading::minus_part_generated_by_first() const {
  std::set<std::vector<int>> reached;
  for (const Root& r : component(-1)) reached.insert(r.c);
  for (int k = 2; k <= depth_; ++k) {
    std::set<std::vector<int>> next;
    for (const Root& r : component(-(k - 1))) {
      if (!reached.count(r.c)) continue;
      for (const Root& s : component(-1)) {
        Root sum = r + s;
        if (rs_->is_root(sum)) next.insert(sum.c);
      }
    }
    for (const Root& r : component(-k))
      if (!next.count(r.c)) return false;
    reached.insert(next.begin(), next.end());
  }
  return true;
}

namespace {

// Classifies a connected full subdiagram given by its (1-based ambient) nodes.
LieType classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
  const int k = int(nodes.size());
  if (k == 1) return {Family::A, 1};

  auto bond = [&](int a, int b) { return rs.cartan(a, b) * rs.cartan(b, a); };
  std::vector<std::vector<int>> adj(k);
  int double_edges = 0, triple_edges = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      int m = bond(nodes[a], nodes[b]);
      if (m == 0) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      if (m == 2) ++double_edges;
      if (m == 3) ++triple_edges;
    }

  if (triple_edges) return {Family::G, 2};

  int branch = -1;
  for (int a = 0; a < k; ++a)
    if (adj[a].size() >= 3) branch = a;

  if (double_edges) {
    if (branch >= 0) throw std::logic_error("invalid diagram: branch with double edge");
    // Chain containing one double edge: B (short end), C (long end), or F4.
    int de_a = -1, de_b = -1;
    for (int a = 0; a < k && de_a < 0; ++a)
      for (int b : adj[a])
        if (a < b && bond(nodes[a], nodes[b]) == 2) {
          de_a = a;
          de_b = b;
        }
    bool at_end = adj[de_a].size() == 1 || adj[de_b].size() == 1;
    if (!at_end) return {Family::F, 4};
    if (k == 2) return {Family::B, 2};  // B2 = C2; pick B canonically
    int end = adj[de_a].size() == 1 ? de_a : de_b;
    if (adj[de_a].size() == 1 && adj[de_b].size() == 1)
      throw std::logic_error("invalid diagram: detached double edge");
    bool end_long = rs.is_simple_root_long(nodes[end]);
    return {end_long ? Family::C : Family::B, k};
  }

  if (branch < 0) return {Family::A, k};
  // One branch node, simply laced: D if two of the three arms have length 1.
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("invalid diagram: bad branch");
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
  if (arms[0] == 1 && arms[1] == 2) return {Family::E, k};
  throw std::logic_error("invalid diagram: unrecognized branch arms");
}

}  // namespace

LeviType levi_type(const ParabolicGrading& g) {
  const RootSystem& rs = g.roots();
  const auto& sigma = g.diagram().sigma;
  std::vector<int> remaining;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!sigma.count(i)) remaining.push_back(i);

  LeviType out;
  out.center_dim = int(sigma.size());
  std::set<int> seen;
  for (int start : remaining) {
    if (seen.count(start)) continue;
    std::vector<int> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      comp.push_back(a);
      for (int b : remaining)
        if (!seen.count(b) && rs.cartan(a, b) != 0) {
          seen.insert(b);
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.simple_factors.push_back(classify_component(rs, comp));
  }
  std::sort(out.simple_factors.begin(), out.simple_factors.end(),
            [](const LieType& a, const LieType& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return family_letter(a.family) < family_letter(b.family);
            });
  return out;
}

std::string LeviType::label() const {
  if (simple_factors.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < simple_factors.size(); ++i) {
    if (i) os << "x";
    os << simple_factors[i].name();
  }
  return os.str();
}

bool triality_spin_node(const LieType& t, int i) {
  return t.family == Family::D && t.rank == 4 && (i == 3 || i == 4);
}

CaseKind classify_case(const LieType& t, int i) {
  auto rs = get_root_system(t);
  if (i < 1 || i > t.rank) throw std::invalid_argument("node index out of range");
  if (!rs->is_simple_root_long(i)) return CaseKind::ShortRoot;
  ParabolicGrading g(rs, CrossedDiagram{t, {i}});
  if (g.depth() == 1) return CaseKind::Symmetric;
  if (g.depth() == 2 && g.dim(2) == 1) return CaseKind::Contact;
  if (i == 3 && t.family == Family::B && t.rank >= 4) return CaseKind::BD3;
  if (i == 3 && t.family == Family::D && t.rank >= 5) return CaseKind::BD3;
  return CaseKind::Other;
}

}  // namespace parab
