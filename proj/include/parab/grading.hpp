#pragma once

#include "parab/root_system.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace parab {

/// Dynkin diagram with a set of crossed nodes (1-based indices).
struct CrossedDiagram {
  LieType type;
  std::set<int> sigma;

  std::string str() const;  // e.g. "B4:**x*"
};

/// Sum of the coefficients of beta at the crossed nodes.
int ht_sigma(const Root& beta, const std::set<int>& sigma);

enum class CaseKind { Symmetric, Contact, BD3, Other, ShortRoot };
std::string case_name(CaseKind k);

/// The grading of g induced by a crossed diagram: g = p_{-k} + ... + p_k with
/// p_i spanned by the root spaces of height i (plus the Cartan at i = 0).
class ParabolicGrading {
public:
  ParabolicGrading(RootSystemPtr rs, CrossedDiagram d);

  const CrossedDiagram& diagram() const { return diagram_; }
  const RootSystem& roots() const { return *rs_; }
  RootSystemPtr roots_ptr() const { return rs_; }

  int depth() const { return depth_; }
  int degree(const Root& beta) const { return ht_sigma(beta, diagram_.sigma); }

  /// Roots of degree i (both signs appear, at i and -i respectively).
  const std::vector<Root>& component(int i) const;

  /// dim p_i = #roots of degree i, plus rank at i = 0.
  int dim(int i) const;

  /// Positive roots of positive degree (the nilradical), in canonical order.
  const std::vector<Root>& nilradical_roots() const { return plus_roots_; }

  /// Checks that iterated sums from degree -1 reach every root of degree < -1.
  bool minus_part_generated_by_first() const;

private:
  RootSystemPtr rs_;
  CrossedDiagram diagram_;
  int depth_ = 0;
  std::map<int, std::vector<Root>> components_;
  std::vector<Root> plus_roots_;
  std::vector<Root> empty_;
};

/// Connected components of the diagram with crossed nodes deleted.
struct LeviType {
  std::vector<LieType> simple_factors;
  int center_dim = 0;

  std::string label() const;  // e.g. "A2xA1" ("0" if no factors)
};

LeviType levi_type(const ParabolicGrading& g);

/// Classifies the maximal parabolic (t, alpha_i):
///   ShortRoot  - alpha_i short;
///   Symmetric  - long, depth 1;
///   Contact    - long, depth 2, dim p_2 = 1;
///   BD3        - (B_n, alpha_3) n >= 4 or (D_n, alpha_3) n >= 5;
///   Other      - the rest.
CaseKind classify_case(const LieType& t, int i);

/// True for the triality-ambiguous spin nodes (D4, alpha_3/alpha_4), which
/// classify as Symmetric via the diagram automorphism onto alpha_1.
bool triality_spin_node(const LieType& t, int i);

}  // namespace parab
