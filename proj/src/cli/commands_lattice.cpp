#include <string>

#include "command.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/lattice/counting.hpp"
#include "transportlab/lattice/ehrhart.hpp"
#include "transportlab/lattice/markov.hpp"

namespace transportlab::cli {
namespace {

IntMargins2 int_margins(const Options& o, const char* command) {
  const auto inst = instance_from_json(o.input);
  const auto* m = std::get_if<Margins2>(&inst);
  if (!m) fail(ErrorKind::InvalidInput, std::string(command) + " needs a 2way instance");
  return IntMargins2::from(*m);
}

CsvRows table_rows(const IntTable2& x) {
  CsvRows rows;
  for (std::size_t i = 0; i < x.p; ++i) {
    auto& row = rows.emplace_back();
    for (std::size_t j = 0; j < x.q; ++j) row.push_back(std::to_string(x(i, j)));
  }
  return rows;
}

std::pair<std::size_t, std::size_t> parse_cell(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) fail(ErrorKind::InvalidInput, "--cell expects i,j");
  try {
    std::size_t used = 0;
    const auto i = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const auto rest = text.substr(comma + 1);
    const auto j = std::stoul(rest, &used);
    if (used != rest.size() || rest.empty() || text[0] == '-' || rest[0] == '-') throw std::invalid_argument(text);
    return {i, j};
  } catch (const std::logic_error&) {
    fail(ErrorKind::InvalidInput, "--cell expects two non-negative integers i,j");
  }
}

std::size_t checked_p(long p) {
  if (p < 1) fail(ErrorKind::InvalidInput, "--p must be >= 1");
  return static_cast<std::size_t>(p);
}

}  // namespace

Output cmd_count(const Options& o) {
  const auto m = int_margins(o, "count");
  Output out;
  const auto n = count_tables(m);
  out.json = {{"count", to_json(n)}};
  out.csv = CsvRows{{"count"}, {to_string(n)}};
  return out;
}

Output cmd_range(const Options& o) {
  const auto m = int_margins(o, "range");
  const auto [i, j] = parse_cell(o.cell);
  const auto [lo, hi] = integer_range(m, i, j);
  Output out;
  out.json = {{"cell", {i, j}}, {"lo", to_json(lo)}, {"hi", to_json(hi)}};
  out.csv = CsvRows{{"i", "j", "lo", "hi"}, {std::to_string(i), std::to_string(j), to_string(lo), to_string(hi)}};
  return out;
}

Output cmd_moves(const Options& o) {
  const auto m = int_margins(o, "moves");
  const auto basis = graver_moves(m.p(), m.q());
  Json moves = Json::array();
  CsvRows rows{{"i1", "i2", "j1", "j2"}};
  for (const auto& mv : basis.moves) {
    moves.push_back({{"plus", {{mv.i1, mv.j1}, {mv.i2, mv.j2}}}, {"minus", {{mv.i1, mv.j2}, {mv.i2, mv.j1}}}});
    rows.push_back({std::to_string(mv.i1), std::to_string(mv.i2), std::to_string(mv.j1), std::to_string(mv.j2)});
  }
  Output out;
  out.json = {{"p", basis.p}, {"q", basis.q}, {"count", basis.moves.size()}, {"moves", moves}};
  out.csv = rows;
  return out;
}

Output cmd_connect(const Options& o) {
  const auto m = int_margins(o, "connect");
  const auto tables = enumerate_tables(m);
  const bool connected = moves_connect(m);
  Output out;
  out.json = {{"tables", tables.size()}, {"connected", connected}};
  out.exit_code = connected ? 0 : 1;
  return out;
}

Output cmd_sample(const Options& o) {
  const auto m = int_margins(o, "sample");
  const auto x = sample_table(m, o.steps, o.seed);
  Output out;
  out.json = {{"steps", o.steps}, {"seed", o.seed}, {"table", to_json(x)}};
  out.csv = table_rows(x);
  return out;
}

Output cmd_magic(const Options& o) {
  const auto p = checked_p(o.p);
  if (o.t < 0) fail(ErrorKind::InvalidInput, "--t must be >= 0");
  const auto n = semi_magic_count(p, o.t);
  Output out;
  out.json = {{"p", p}, {"t", o.t}, {"count", to_json(n)}};
  out.csv = CsvRows{{"p", "t", "count"}, {std::to_string(p), std::to_string(o.t), to_string(n)}};
  return out;
}

Output cmd_volume(const Options& o) {
  const auto p = checked_p(o.p);
  if (p > 5) fail(ErrorKind::TooLarge, "Birkhoff volumes are limited to p <= 5");
  const auto samples = birkhoff_samples(p);
  const std::size_t dim = (p - 1) * (p - 1);
  const auto poly = ehrhart_interpolate(samples, dim);
  const auto volume = birkhoff_normalized_volume(p);
  Output out;
  out.json = {{"p", p},
              {"dimension", dim},
              {"normalized_volume", to_json(volume)},
              {"ehrhart", to_json(poly)},
              {"samples", to_json(samples)}};
  out.csv = CsvRows{{"p", "normalized_volume"}, {std::to_string(p), to_string(volume)}};
  return out;
}

}  // namespace transportlab::cli
