#pragma once

#include "parab/grading.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parab {

/// Names a bigraded component of a nested pair: p_k, q_k, or the F/V split of
/// q_{+-1}. Printed/parsed as "p-1", "q2", "q-1F", "q1V", ...
struct ComponentSel {
  char alg;        // 'p' or 'q'
  int degree;
  char refine = 0; // 0, 'F' or 'V' (only for q, degree +-1)

  std::string str() const;
  static ComponentSel parse(const std::string& s);
};

struct BracketReport {
  std::pair<std::string, std::string> pair;
  bool zero = false;
  bool empty_component = false;
  std::vector<std::pair<Root, Root>> witnesses;  // sums that are roots (or zero)
};

/// The nested parabolic pair q <= p attached to (g, alpha): p crosses alpha
/// alone, q crosses alpha together with its Dynkin neighbors.
class NestedPair {
public:
  NestedPair(LieType t, int alpha_node);

  const LieType& type() const { return type_; }
  int alpha_node() const { return alpha_; }
  Root alpha() const { return rs_->simple_root(alpha_); }
  bool alpha_is_long() const { return alpha_long_; }

  const RootSystem& roots() const { return *rs_; }
  const ParabolicGrading& p() const { return p_; }
  const ParabolicGrading& q() const { return q_; }

  /// (ht_alpha, ht_sigma_q) of a root.
  std::pair<int, int> bigrade(const Root& beta) const;

  std::vector<Root> component(const ComponentSel& sel) const;
  std::vector<Root> f_roots(int sign) const;   // {alpha} or {-alpha}
  std::vector<Root> v1_roots(int sign) const;  // q_{+-1}^V

  /// ht_{Sigma_q}(theta).
  int depth_q() const { return q_.depth(); }

  BracketReport check_bracket_zero(const ComponentSel& a, const ComponentSel& b) const;

  /// True iff beta -> beta - alpha maps q_{-1}^V bijectively onto the roots of
  /// q_{-2}, every image being a root.
  bool ff_model_iso() const;

  /// True iff no two roots of q_{-1}^V sum to a root (p_0 ∩ q_- abelian).
  bool check_abelian_v() const;

  /// True iff {ht_alpha >= 1} = {ht_q >= 4} as root sets. Contract error
  /// unless the case is Contact or BD3.
  bool check_p1_eq_q4() const;

  CaseKind kind() const { return kind_; }

private:
  LieType type_;
  int alpha_;
  bool alpha_long_;
  CaseKind kind_;
  RootSystemPtr rs_;
  ParabolicGrading p_, q_;
};

/// Root-level proof obligations attached to the pair; each named check is an
/// exact statement about root arithmetic.
struct NestedChecks {
  bool q2_bigrade_split = false;      // every q_{-2} root has ht_alpha = ht_nbrs = -1
  bool q2_pairing_minus_one = false;  // <beta, alpha^vee> = -1 on q_{-2} (long alpha)
  bool p1_neighbor_sum_bounds = false;// neighbor-coefficient sums of p_{-1} lie in [0,3]
  bool filtration_partition = false;  // p_{-1} roots split into q-degrees -1F,-2,-3,-4
  bool f_q3_bracket_zero = false;     // [q_{-1}^F, q_{-3}] = 0
};

NestedChecks run_nested_checks(const NestedPair& np);

}  // namespace parab
