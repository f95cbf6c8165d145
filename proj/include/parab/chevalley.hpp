#pragma once

#include "parab/root_system.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace parab {

/// A basis vector index refers to: h_1..h_n (0..n-1), then e_beta for positive
/// roots (n..n+m-1 in canonical root order), then e_{-beta} (n+m..n+2m-1).
class ChevalleyBasis {
public:
  explicit ChevalleyBasis(RootSystemPtr rs);

  const RootSystem& roots() const { return *rs_; }
  RootSystemPtr roots_ptr() const { return rs_; }

  int dim() const { return rank_ + 2 * nroots_; }
  int rank() const { return rank_; }

  int h_index(int i) const { return i - 1; }       // 1-based node
  int e_index(const Root& beta) const;             // either sign
  bool is_cartan_index(int idx) const { return idx < rank_; }

  /// Weight of a basis vector: the root for e_beta, zero for h_i.
  Root weight_of(int idx) const;

  /// Structure constant N_{beta,gamma} for roots with beta + gamma a root;
  /// 0 if beta + gamma is neither a root nor zero. beta + gamma = 0 is not
  /// an N-constant (the bracket is a coroot) and must not be asked for.
  long long structure_constant(const Root& beta, const Root& gamma) const;

  /// Coroot of beta expressed in the h_i basis (integer coefficients).
  std::vector<long long> coroot(const Root& beta) const;

  /// [basis_a, basis_b] as a sparse vector of (index, coefficient).
  const std::vector<std::pair<int, long long>>& bracket_basis(int a, int b) const;

  /// Bilinear extension of the bracket to rational coefficient vectors.
  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  /// Killing form on basis vectors, computed as the literal trace form.
  Rat killing(int a, int b) const;

  /// B(e_beta, e_{-beta}) for a positive root beta.
  Rat killing_pair(const Root& beta) const;

private:
  RootSystemPtr rs_;
  int rank_, nroots_;
  // N over ordered pairs of root ids with signs: key (sid_a, sid_b) where
  // sid = id for positive, id + m for negative.
  std::vector<std::vector<long long>> nmat_;
  std::vector<std::vector<std::pair<int, long long>>> table_;  // dim x dim
  mutable std::vector<Rat> killing_pair_;                      // memo, per positive root
  mutable std::vector<char> killing_pair_set_;

  int sid(const Root& beta, bool& positive) const;
  void build_constants();
  void build_table();
};

using ChevalleyPtr = std::shared_ptr<const ChevalleyBasis>;

/// Shared, memoized construction (bases are immutable).
ChevalleyPtr get_chevalley(const LieType& t);

}  // namespace parab
