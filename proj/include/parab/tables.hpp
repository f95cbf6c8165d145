#pragma once

#include "parab/grading.hpp"

#include <string>
#include <vector>

namespace parab {

/// One emitted row of the appendix-style tables: everything but vmrt_name is
/// recomputed from root data.
struct TableRow {
  std::string g_label;
  std::string p_diagram;       // crossed-diagram mask form
  std::string q_diagram;
  std::string levi_ss;         // semisimple Levi label of p
  int ambient_proj_dim = 0;    // dim p_{-1} - 1
  int cone_dim = 0;            // dim q_{-1}^V
  std::string vmrt_name;       // golden embedding name
  bool triality_note = false;  // spin node of D4 (diagram-automorphic images)
};

/// The instantiation points of a table: (type, node, vmrt name) triples.
struct TableCase {
  LieType type;
  int node;
  std::string vmrt_name;
};

/// Compiled-in case lists for tables 1-3 (parametrized families instantiated
/// at three ranks or more).
std::vector<TableCase> table_cases(int which);

TableRow compute_row(const LieType& t, int node, const std::string& vmrt_name);

std::vector<TableRow> emit_table(int which);

/// Renders rows to json/text/latex. JSON output is byte-stable across runs.
std::string render_table(const std::vector<TableRow>& rows, const std::string& format,
                         int which);

/// Compares emitted rows against the fixture file; returns human-readable
/// mismatch descriptions (empty means clean).
std::vector<std::string> check_against_fixtures(const std::string& fixtures_path, int which);

}  // namespace parab
