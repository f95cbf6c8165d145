#pragma once

#include "parab/grading.hpp"
#include "parab/nested.hpp"

#include <map>
#include <string>
#include <vector>

namespace parab {

/// A length-2 element s_i s_j of the Hasse diagram of the maximal parabolic at
/// node i; j runs over the Dynkin neighbors of i. phi = {alpha_i, s_i(alpha_j)}.
struct HasseWord2 {
  int i = 0;
  int j = 0;
  Root phi1, phi2;
};

/// Predicted irreducible piece of the second homology of the nilradical with
/// adjoint coefficients: lowest-weight wedge e_{phi1} ^ e_{phi2} tensor
/// e_{-s_i s_j(theta)}, its grading degree r, the q-grading degree of the same
/// vector in the nested pair, and the dimension of the generated Levi module.
struct H2Component {
  HasseWord2 word;
  Root tensor_root;        // -s_i s_j(theta); a root of either sign
  int homogeneity_r = 0;   // p-grading degree of the whole triple
  int q_degree = 0;        // q-grading degree of the whole triple
  Int levi_dim;            // Weyl dimension of the component
  Root lowest_weight;      // phi1 + phi2 + tensor_root
};

/// One word per Dynkin neighbor of node i. Throws std::invalid_argument for
/// anything but a maximal parabolic request.
std::vector<HasseWord2> hasse_length2(const LieType& t, int i);

std::vector<H2Component> h2_components(const LieType& t, int i);

struct H2Classification {
  CaseKind kind;
  std::vector<int> positive_rs;  // sorted multiset of r >= 1
  std::vector<int> all_rs;       // sorted multiset over all words
  Int total_dim;                 // sum of levi_dim over all components
};

H2Classification classify_h2_positive(const LieType& t, int i);

/// The same components tagged with q-degrees for the nested pair of (t, i).
std::vector<H2Component> h0_quotient_components(const NestedPair& np);

/// Weyl dimension of the irreducible module of the degree-0 (Levi) subalgebra
/// of the grading by sigma, with highest weight lambda given over the
/// simple-root basis (rational coordinates). lambda must be Levi-dominant.
Int weyl_dim_levi(const RootSystem& rs, const std::set<int>& sigma,
                  const std::vector<Rat>& lambda);

}  // namespace parab
