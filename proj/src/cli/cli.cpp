#include "transportlab/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "command.hpp"
#include "transportlab/core/error.hpp"

namespace transportlab::cli {

std::vector<std::string> cells_as_strings(const std::vector<Rational>& entries) {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(to_string(e));
  return out;
}

namespace {

using Handler = std::function<Output(const Options&)>;

enum class Reads { Instance, Nothing };

struct Spec {
  const char* name;
  const char* help;
  Handler handler;
  Reads reads = Reads::Instance;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& out, const CsvRows& rows) {
  for (const auto& row : rows) {
    for (std::size_t a = 0; a < row.size(); ++a) out << (a ? "," : "") << csv_field(row[a]);
    out << '\n';
  }
}

Json read_input(const std::string& path, std::istream& in) {
  if (path == "-") return Json::parse(in);
  std::ifstream file(path);
  if (!file) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  return Json::parse(file);
}

int exit_code_of(const Error& e) {
  if (e.is_guard()) return kGuard;
  if (e.kind() == ErrorKind::Infeasible) return kFalse;
  return kInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on transportation polytopes", "transportlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Options o;
  std::string path = "-";

  const std::vector<Spec> specs{
      {"feasible", "Decide whether the polytope is non-empty", cmd_feasible},
      {"dimension", "Dimension and constraint rank", cmd_dimension},
      {"nw-vertex", "Northwest-corner vertex (2way, axial)", cmd_nw_vertex},
      {"vertices", "Enumerate all vertices", cmd_vertices},
      {"graph", "Vertex-edge graph (json, csv or dot)", cmd_graph},
      {"diameter", "Graph diameter and its upper bound", cmd_diameter},
      {"facets", "Cells whose zero set is a facet (2way)", cmd_facets},
      {"hurkens", "Pivot walk between two vertices (2way)", cmd_hurkens},
      {"birkhoff", "Combinatorics of the Birkhoff polytope B_p", cmd_birkhoff, Reads::Nothing},
      {"count", "Number of integer tables (2way)", cmd_count},
      {"range", "Integer values taken by one cell (2way)", cmd_range},
      {"moves", "Basic Markov moves for the table shape (2way)", cmd_moves},
      {"connect", "Check that the moves connect all integer tables (2way)", cmd_connect},
      {"sample", "Random integer table by a Markov walk (2way)", cmd_sample},
      {"magic", "Number of p x p semi-magic squares with line sum t", cmd_magic, Reads::Nothing},
      {"volume", "Ehrhart polynomial and normalized volume of B_p", cmd_volume, Reads::Nothing},
      {"reduce-junginger", "Planar problem equivalent to an axial one", cmd_reduce_junginger},
      {"encode-universality", "Axial encoding of {y >= 0 : A y = b}", cmd_encode_universality},
      {"verify-encoding", "Check an encoding against its source system", cmd_verify_encoding},
      {"survey-table1", "Vertex counts of random generic 2-way polytopes",
       [](const Options& opt) { return cmd_survey(1, opt); }, Reads::Nothing},
      {"survey-table2", "Vertex counts of random generic axial polytopes",
       [](const Options& opt) { return cmd_survey(2, opt); }, Reads::Nothing},
      {"survey-table3", "Vertex counts of random generic planar polytopes",
       [](const Options& opt) { return cmd_survey(3, opt); }, Reads::Nothing},
  };

  std::vector<std::pair<CLI::App*, const Spec*>> subs;
  for (const auto& spec : specs) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    const std::string name = spec.name;
    std::vector<std::string> formats{"json", "csv"};
    if (name == "graph") formats.push_back("dot");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    if (spec.reads == Reads::Instance) sub->add_option("input", path, "Instance file, or - for standard input");

    if (name == "birkhoff" || name == "magic" || name == "volume") sub->add_option("--p", o.p)->required();
    if (name == "magic") sub->add_option("--t", o.t)->required();
    if (name == "range") sub->add_option("--cell", o.cell, "Cell as i,j (0-based)")->required();
    if (name == "sample") {
      sub->add_option("--steps", o.steps)->required();
      sub->add_option("--seed", o.seed)->required();
    }
    if (name == "hurkens") {
      sub->add_option("--from", o.from, "Index of the start vertex (default 0)");
      sub->add_option("--to", o.to, "Index of the target vertex (default last)");
    }
    if (name == "reduce-junginger") {
      sub->add_option("--M", o.M, "Penalty (default from the margins and costs)");
      sub->add_option("--penalty", o.penalty)->check(CLI::IsMember({"one-in-range", "two-in-range"}));
    }
    if (name == "encode-universality") {
      sub->add_option("--bound", o.bound, "Vertex bound U (default max(1, sum |b|))");
      sub->add_flag("--no-validate", o.no_validate, "Skip the check that U bounds every vertex");
    }
    if (name.rfind("survey-", 0) == 0) {
      sub->add_option("--trials", o.trials)->capture_default_str();
      sub->add_option("--seed", o.seed)->capture_default_str();
      sub->add_option("--shape", o.shapes, "Shapes such as 2x3 or 2x2x3");
    }
    subs.emplace_back(sub, &spec);
  }

  std::vector<const char*> argv{"transportlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  const Spec* chosen = nullptr;
  for (const auto& [sub, spec] : subs) {
    if (sub->parsed()) chosen = spec;
  }

  try {
    if (chosen->reads == Reads::Instance) o.input = read_input(path, in);
    const Output result = chosen->handler(o);
    if (result.text) {
      out << *result.text;
    } else if (o.format == "csv" && result.csv) {
      write_csv(out, *result.csv);
    } else {
      out << result.json.dump(2) << '\n';
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_of(e);
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace transportlab::cli
