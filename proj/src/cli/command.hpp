#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transportlab/core/json_io.hpp"

namespace transportlab::cli {

using CsvRows = std::vector<std::vector<std::string>>;

/// What a command produced. `csv` is set for tabular results; `text`
/// replaces everything for formats such as DOT.
struct Output {
  Json json;
  std::optional<CsvRows> csv;
  std::optional<std::string> text;
  int exit_code = 0;
};

/// Parsed flags shared by the subcommands; each one reads what it needs.
struct Options {
  std::string format = "json";
  Json input;
  long p = 0;
  long t = 0;
  std::string cell;
  std::uint64_t steps = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::vector<std::string> shapes;
  std::optional<long> from, to;
  std::optional<std::string> M;
  std::string penalty = "one-in-range";
  std::optional<std::string> bound;
  bool no_validate = false;
};

Output cmd_feasible(const Options& o);
Output cmd_dimension(const Options& o);
Output cmd_nw_vertex(const Options& o);
Output cmd_vertices(const Options& o);
Output cmd_graph(const Options& o);
Output cmd_diameter(const Options& o);
Output cmd_facets(const Options& o);
Output cmd_hurkens(const Options& o);
Output cmd_birkhoff(const Options& o);

Output cmd_count(const Options& o);
Output cmd_range(const Options& o);
Output cmd_moves(const Options& o);
Output cmd_connect(const Options& o);
Output cmd_sample(const Options& o);
Output cmd_magic(const Options& o);
Output cmd_volume(const Options& o);

Output cmd_reduce_junginger(const Options& o);
Output cmd_encode_universality(const Options& o);
Output cmd_verify_encoding(const Options& o);

Output cmd_survey(int table, const Options& o);

/// Flattened entries of a table as exact strings.
std::vector<std::string> cells_as_strings(const std::vector<Rational>& entries);

}  // namespace transportlab::cli
