// taitkit command-line harness. Exit codes: 0 pass, 1 check failure,
// 2 input error, 3 inconclusive (limits hit).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "taitkit/taitkit.h"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

struct TableDeleter {
  void operator()(tk_table* t) const { tk_table_free(t); }
};
struct DiagramDeleter {
  void operator()(tk_diagram* d) const { tk_diagram_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { tk_string_free(s); }
};
using Table = std::unique_ptr<tk_table, TableDeleter>;
using DiagramPtr = std::unique_ptr<tk_diagram, DiagramDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

int report(tk_status st) {
  std::cerr << "taitkit: " << tk_status_name(st) << ": " << tk_last_error_message() << "\n";
  return kInputError;
}

bool write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text << "\n";
  if (!out) {
    std::cerr << "taitkit: IoError: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int load(const std::string& path, Table& table) {
  tk_table* raw = nullptr;
  if (tk_status st = tk_table_load(path.c_str(), &raw); st != TK_OK) return report(st);
  table.reset(raw);
  return kPass;
}

int entry(const Table& table, const std::string& name, DiagramPtr& out) {
  const size_t index = tk_table_find(table.get(), name.c_str());
  if (index == static_cast<size_t>(-1)) {
    std::cerr << "taitkit: no table entry named '" << name << "'\n";
    return kInputError;
  }
  tk_diagram* raw = nullptr;
  if (tk_status st = tk_table_diagram(table.get(), index, &raw); st != TK_OK) return report(st);
  out.reset(raw);
  return kPass;
}

int cmd_invariants(const std::string& input, const std::string& output) {
  Table table;
  if (int rc = load(input, table)) return rc;
  char* json = nullptr;
  int all_pass = 0;
  if (tk_status st = tk_invariants_report(table.get(), &json, &all_pass); st != TK_OK) return report(st);
  String guard(json);
  if (!write_file(output, json)) return kInputError;
  if (!all_pass) {
    std::cerr << "taitkit: identity checks failed (see report)\n";
    return kCheckFailure;
  }
  return kPass;
}

int cmd_orbit(const std::string& input, const std::string& name, size_t max_nodes, int max_depth,
              const std::string& output, const std::string& dot) {
  Table table;
  if (int rc = load(input, table)) return rc;
  DiagramPtr d;
  if (int rc = entry(table, name, d)) return rc;
  char* json = nullptr;
  char* graph = nullptr;
  int truncated = 0;
  if (tk_status st = tk_flype_orbit(d.get(), max_nodes, max_depth, &json, dot.empty() ? nullptr : &graph, &truncated);
      st != TK_OK)
    return report(st);
  String json_guard(json), graph_guard(graph);
  if (!write_file(output, json)) return kInputError;
  if (graph && !write_file(dot, graph)) return kInputError;
  if (truncated) {
    std::cerr << "taitkit: orbit truncated by limits\n";
    return kInconclusive;
  }
  return kPass;
}

int cmd_flype_check(const std::string& input, const std::string& a, const std::string& b, size_t max_nodes,
                    int max_depth) {
  Table table;
  if (int rc = load(input, table)) return rc;
  DiagramPtr da, db;
  if (int rc = entry(table, a, da)) return rc;
  if (int rc = entry(table, b, db)) return rc;
  tk_relation relation{};
  int truncated = 0;
  char* text = nullptr;
  if (tk_status st = tk_flype_related(da.get(), db.get(), max_nodes, max_depth, &relation, &truncated, &text);
      st != TK_OK)
    return report(st);
  String guard(text);
  std::cout << text << "\n";
  return relation == TK_NOT_RELATED_WITHIN && truncated ? kInconclusive : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chessboard forms, slopes and flype orbits of link diagrams"};
  app.require_subcommand(1);

  std::string input, output = "-", name, a, b, dot;
  size_t max_nodes = 10000;
  int max_depth = 64;

  auto* inv = app.add_subcommand("invariants", "Check the chessboard identities on every table entry");
  inv->add_option("--input", input, "Table JSON")->required();
  inv->add_option("--output", output, "Report JSON (default stdout)");

  auto* orbit = app.add_subcommand("orbit", "Enumerate the flype orbit of a table entry");
  orbit->add_option("--input", input, "Table JSON")->required();
  orbit->add_option("--name", name, "Entry name")->required();
  orbit->add_option("--max-nodes", max_nodes, "Node limit")->check(CLI::PositiveNumber);
  orbit->add_option("--max-depth", max_depth, "Depth limit")->check(CLI::NonNegativeNumber);
  orbit->add_option("--output", output, "Orbit JSON (default stdout)");
  orbit->add_option("--dot", dot, "Also write the flype graph in DOT format");

  auto* check = app.add_subcommand("flype-check", "Decide whether two entries are flype-related");
  check->add_option("--input", input, "Table JSON")->required();
  check->add_option("--a", a, "First entry")->required();
  check->add_option("--b", b, "Second entry")->required();
  check->add_option("--max-nodes", max_nodes, "Node limit")->check(CLI::PositiveNumber);
  check->add_option("--max-depth", max_depth, "Depth limit")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  if (*inv) return cmd_invariants(input, output);
  if (*orbit) return cmd_orbit(input, name, max_nodes, max_depth, output, dot);
  return cmd_flype_check(input, a, b, max_nodes, max_depth);
}
