#pragma once

#include "parab/exact.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace parab {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_letter(Family f);
Family family_from_letter(char c);

/// A simple Lie algebra type, Bourbaki numbering throughout.
struct LieType {
  Family family;
  int rank;

  bool operator==(const LieType&) const = default;
  std::string name() const;  // e.g. "B4"
};

/// Throws std::invalid_argument naming the violated range if (family, rank)
/// is not a valid simple type. D3 is accepted (isomorphic to A3).
void validate(const LieType& t);

int dim_of(const LieType& t);                 // dim of the Lie algebra
int positive_root_count(const LieType& t);    // classical count

/// A root written over the simple-root basis. Zero is excluded; coordinates
/// are all >= 0 (positive root) or all <= 0 (negative root).
struct Root {
  std::vector<int> c;

  bool operator==(const Root&) const = default;
  bool is_positive() const;
  int height() const;
  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  std::string str() const;  // e.g. "a1+2a2"
};

/// Ordering by (height, lexicographic); fixes the canonical root enumeration
/// and the Chevalley extraspecial-pair order.
bool root_less(const Root& a, const Root& b);

class RootSystem {
public:
  explicit RootSystem(LieType t);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan(i, j) = <alpha_j, alpha_i^vee>, nodes 1-based.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

  /// Symmetrized invariant form (alpha_i, alpha_j), long roots of square 2.
  const Rat& form(int i, int j) const { return form_[i - 1][j - 1]; }
  Rat form(const Root& a, const Root& b) const;

  /// Positive roots in (height, lex) order; index i is the root id.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return highest_; }
  Root simple_root(int i) const;

  bool is_root(const std::vector<int>& v) const;
  bool is_root(const Root& r) const { return is_root(r.c); }

  /// Id of a positive root; throws std::domain_error if not one.
  int root_id(const Root& r) const;

  /// <beta, alpha_i^vee>; beta need not be a root.
  int pairing(const Root& beta, int i) const;

  /// Simple reflection s_i(beta); beta must be a root.
  Root reflect(int i, const Root& beta) const;

  /// beta + gamma if it is a root, std::nullopt otherwise.
  std::optional<Root> add_root(const Root& beta, const Root& gamma) const;

  bool is_long(const Root& beta) const;

  /// Largest k >= 0 with beta - k*alpha a root (the down-string length).
  int string_down(const Root& beta, const Root& alpha) const;

  /// Dynkin neighbors of node i (1-based).
  std::vector<int> neighbors(int i) const;

  bool is_simple_root_long(int i) const;

private:
  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rat>> form_;
  std::vector<Rat> d_;  // (alpha_i, alpha_i)/2
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> id_;  // positive root -> id
  Root highest_;

  void build_cartan();
  void enumerate_roots();
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Shared, memoized construction (root systems are immutable).
RootSystemPtr get_root_system(const LieType& t);

}  // namespace parab
