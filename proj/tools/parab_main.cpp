#include "parab/diagram_io.hpp"
#include "parab/reports.hpp"
#include "parab/tables.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 2;
constexpr int kExitUsage = 3;
constexpr int kExitCapRefusal = 4;

parab::CrossedDiagram resolve_case(const std::string& target, const std::string& crosses) {
  parab::CrossedDiagram d = parab::parse_diagram(target);
  if (!crosses.empty()) {
    std::stringstream ss(crosses);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      size_t used = 0;
      int node = std::stoi(tok, &used);
      if (used != tok.size()) throw parab::ParseError("bad cross index '" + tok + "'", 1);
      if (node < 1 || node > d.type.rank)
        throw parab::ParseError("cross index " + tok + " out of range", 1);
      d.sigma.insert(node);
    }
  }
  return d;
}

int single_cross(const parab::CrossedDiagram& d) {
  if (d.sigma.size() != 1)
    throw parab::ParseError("expected exactly one crossed node, got " +
                                std::to_string(d.sigma.size()),
                            1);
  return *d.sigma.begin();
}

int emit(const parab::ordered_json& j) {
  std::cout << j.dump(2) << std::endl;
  return parab::report_checks_pass(j) ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure computations for parabolic gradings, nested pairs and "
               "nilradical homology"};
  app.require_subcommand(1);

  std::string target, crosses, format = "json", fixtures;
  int max_rank = 8, which = 1;
  long long cap = 200000;

  auto* info = app.add_subcommand("info", "grading of a crossed diagram");
  info->add_option("diagram", target, "e.g. B4:**x* or B4")->required();
  info->add_option("--cross", crosses, "comma-separated node indices");

  auto* nested = app.add_subcommand("nested", "nested pair q <= p of a single node");
  nested->add_option("diagram", target)->required();
  nested->add_option("--cross", crosses);

  auto* kostant = app.add_subcommand("kostant", "predicted H2 components of a single node");
  kostant->add_option("diagram", target)->required();
  kostant->add_option("--cross", crosses);

  auto* classify = app.add_subcommand("classify", "sweep all long-root maximal parabolics");
  classify->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8));

  auto* oracle = app.add_subcommand("oracle", "exact Hodge oracle vs predictions");
  oracle->add_option("diagram", target)->required();
  oracle->add_option("--cross", crosses);
  oracle->add_option("--cap", cap, "chain-space size cap");

  auto* tables = app.add_subcommand("tables", "emit the classification tables");
  tables->add_option("--which", which)->check(CLI::Range(1, 3));
  tables->add_option("--format", format)->check(CLI::IsMember({"json", "text", "latex"}));
  tables->add_option("--fixtures", fixtures, "verify against a fixtures file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) return emit(parab::info_report(resolve_case(target, crosses)));
    if (nested->parsed()) {
      auto d = resolve_case(target, crosses);
      return emit(parab::nested_report(d.type, single_cross(d)));
    }
    if (kostant->parsed()) {
      auto d = resolve_case(target, crosses);
      return emit(parab::kostant_report(d.type, single_cross(d)));
    }
    if (classify->parsed()) return emit(parab::classify_report(max_rank));
    if (oracle->parsed()) {
      auto d = resolve_case(target, crosses);
      return emit(parab::oracle_report(d.type, single_cross(d), cap));
    }
    if (tables->parsed()) {
      if (!fixtures.empty()) {
        auto problems = parab::check_against_fixtures(fixtures, which);
        std::cout << parab::render_table(parab::emit_table(which), format, which);
        if (!problems.empty()) {
          for (const auto& p : problems) std::cerr << "mismatch: " << p << "\n";
          return kExitCheckFailure;
        }
        return kExitOk;
      }
      std::cout << parab::render_table(parab::emit_table(which), format, which);
      return kExitOk;
    }
  } catch (const parab::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitCapRefusal;
  } catch (const parab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
