#pragma once

#include "parab/grading.hpp"
#include "parab/homology.hpp"
#include "parab/kostant.hpp"
#include "parab/nested.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace parab {

using ordered_json = nlohmann::ordered_json;

/// Expected positive homogeneity multiset of the second-homology components
/// for a long simple root, by classification family (golden rule).
std::vector<int> expected_positive_rs(const LieType& t, int i);

/// Expected depth of q by classification family (golden rule); nullopt when
/// no family claim applies.
std::optional<int> expected_depth_q(const LieType& t, int i);

/// Expected q-degree of a positive-homogeneity component (golden rule):
/// 0 for symmetric r=1, 2 for r=2, -1 for contact/BD3 r=1.
std::optional<int> expected_q_degree(CaseKind kind, int r);

/// All valid simple types of rank <= max_rank, classical and exceptional.
std::vector<LieType> all_types_up_to(int max_rank);

ordered_json info_report(const CrossedDiagram& d);
ordered_json nested_report(const LieType& t, int i);
ordered_json kostant_report(const LieType& t, int i);
ordered_json classify_report(int max_rank);
ordered_json oracle_report(const LieType& t, int i, long long cap);

/// True iff every entry of every "checks" object in the report is true.
bool report_checks_pass(const ordered_json& j);

}  // namespace parab
