#include "parab/tables.hpp"

#include "parab/nested.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace parab {

using ordered_json = nlohmann::ordered_json;

std::vector<TableCase> table_cases(int which) {
  std::vector<TableCase> out;
  auto add = [&](Family f, int rank, int node, const std::string& name) {
    out.push_back(TableCase{LieType{f, rank}, node, name});
  };
  switch (which) {
    case 1:
      for (int n : {1, 3, 6}) add(Family::A, n, 1, "linear");
      add(Family::A, 3, 2, "Segre");
      add(Family::A, 4, 2, "Segre");
      add(Family::A, 5, 3, "Segre");
      add(Family::A, 7, 3, "Segre");
      for (int n : {2, 3, 5}) add(Family::B, n, 1, "quadric");
      for (int n : {3, 4, 5}) add(Family::C, n, n, "Veronese");
      for (int n : {3, 4, 6}) add(Family::D, n, 1, "quadric");
      for (int n : {5, 6, 7}) {
        add(Family::D, n, n, "Pluecker");
        add(Family::D, n, n - 1, "Pluecker");
      }
      add(Family::E, 6, 6, "spinor");
      add(Family::E, 7, 7, "Severi");
      break;
    case 2:
      for (int n : {4, 5, 6}) add(Family::B, n, 3, "Segre");
      for (int n : {5, 6, 7}) add(Family::D, n, 3, "Segre");
      break;
    case 3:
      for (int n : {3, 4, 5}) add(Family::B, n, 2, "Segre");
      add(Family::D, 4, 2, "Segre");
      for (int n : {5, 6, 7}) add(Family::D, n, 2, "Segre");
      add(Family::E, 6, 2, "Grassmannian");
      add(Family::E, 7, 1, "spinor");
      add(Family::E, 8, 8, "exceptional");
      add(Family::F, 4, 1, "Lagrangian");
      add(Family::G, 2, 2, "twisted cubic");
      break;
    default:
      throw std::invalid_argument("table index must be 1, 2 or 3");
  }
  return out;
}

TableRow compute_row(const LieType& t, int node, const std::string& vmrt_name) {
  NestedPair np(t, node);
  TableRow row;
  row.g_label = t.name();
  row.p_diagram = np.p().diagram().str();
  row.q_diagram = np.q().diagram().str();
  row.levi_ss = levi_type(np.p()).label();
  row.ambient_proj_dim = np.p().dim(-1) - 1;
  row.cone_dim = int(np.v1_roots(-1).size());
  row.vmrt_name = vmrt_name;
  row.triality_note = triality_spin_node(t, node);
  return row;
}

std::vector<TableRow> emit_table(int which) {
  std::vector<TableRow> rows;
  for (const TableCase& c : table_cases(which)) rows.push_back(compute_row(c.type, c.node, c.vmrt_name));
  return rows;
}

namespace {

ordered_json row_to_json(const TableRow& r) {
  ordered_json j;
  j["g"] = r.g_label;
  j["p"] = r.p_diagram;
  j["q"] = r.q_diagram;
  j["levi_ss"] = r.levi_ss;
  j["ambient_proj_dim"] = r.ambient_proj_dim;
  j["cone_dim"] = r.cone_dim;
  j["vmrt"] = r.vmrt_name;
  if (r.triality_note) j["triality"] = true;
  return j;
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, const std::string& format,
                         int which) {
  if (format == "json") {
    ordered_json j;
    j["table"] = which;
    j["rows"] = ordered_json::array();
    for (const TableRow& r : rows) j["rows"].push_back(row_to_json(r));
    return j.dump(2) + "\n";
  }
  if (format == "text") {
    std::ostringstream os;
    os << "table " << which << "\n";
    os << "g      p               q               levi       P(p_-1)  dim C_o  vmrt\n";
    for (const TableRow& r : rows) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%-6s %-15s %-15s %-10s %7d  %7d  %s\n",
                    r.g_label.c_str(), r.p_diagram.c_str(), r.q_diagram.c_str(),
                    r.levi_ss.c_str(), r.ambient_proj_dim, r.cone_dim, r.vmrt_name.c_str());
      os << buf;
    }
    return os.str();
  }
  if (format == "latex") {
    std::ostringstream os;
    os << "% table " << which << "\n";
    os << "\\begin{tabular}{|l|l|l|l|r|r|l|}\n\\hline\n";
    os << "$\\mathfrak{g}$ & $\\mathfrak{p}$ & $\\mathfrak{q}$ & Levi & "
          "$\\dim\\mathbb{P}(\\mathfrak{p}_{-1})$ & $\\dim\\mathcal{C}_o$ & embedding\\\\\n"
          "\\hline\n";
    for (const TableRow& r : rows)
      os << r.g_label << " & " << r.p_diagram << " & " << r.q_diagram << " & " << r.levi_ss
         << " & " << r.ambient_proj_dim << " & " << r.cone_dim << " & " << r.vmrt_name
         << "\\\\\n";
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
  }
  throw std::invalid_argument("format must be json, text or latex");
}

std::vector<std::string> check_against_fixtures(const std::string& fixtures_path, int which) {
  std::vector<std::string> problems;
  std::ifstream in(fixtures_path);
  if (!in) return {"cannot open fixtures file: " + fixtures_path};
  nlohmann::json fx;
  in >> fx;
  std::string key = "table" + std::to_string(which);
  if (!fx.contains(key)) return {"fixtures missing " + key};

  auto rows = emit_table(which);
  const auto& want = fx[key];
  if (want.size() != rows.size()) {
    problems.push_back(key + ": row count " + std::to_string(rows.size()) + " != fixture " +
                       std::to_string(want.size()));
    return problems;
  }
  for (size_t k = 0; k < rows.size(); ++k) {
    const TableRow& r = rows[k];
    const auto& w = want[k];
    auto complain = [&](const std::string& field, const std::string& got,
                        const std::string& exp) {
      problems.push_back(key + "[" + std::to_string(k) + "] (" + r.g_label + "): " + field +
                         " = " + got + ", fixture " + exp);
    };
    if (w.at("g") != r.g_label)
      complain("g", r.g_label, w.at("g").get<std::string>());
    if (w.at("p") != r.p_diagram)
      complain("p", r.p_diagram, w.at("p").get<std::string>());
    if (w.at("q") != r.q_diagram)
      complain("q", r.q_diagram, w.at("q").get<std::string>());
    if (w.at("levi_ss") != r.levi_ss)
      complain("levi_ss", r.levi_ss, w.at("levi_ss").get<std::string>());
    if (w.at("ambient_proj_dim") != r.ambient_proj_dim)
      complain("ambient_proj_dim", std::to_string(r.ambient_proj_dim),
               w.at("ambient_proj_dim").dump());
    if (w.at("cone_dim") != r.cone_dim)
      complain("cone_dim", std::to_string(r.cone_dim), w.at("cone_dim").dump());
    if (w.at("vmrt") != r.vmrt_name)
      complain("vmrt", r.vmrt_name, w.at("vmrt").get<std::string>());
  }
  return problems;
}

}  // namespace parab
