#include <map>
#include <random>
#include <set>
#include <string>

#include "command.hpp"
#include "transportlab/core/constraint_system.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/core/random.hpp"
#include "transportlab/polytope2/feasibility.hpp"
#include "transportlab/polytope2/vertices.hpp"
#include "transportlab/polytope3/multiway.hpp"

namespace transportlab::cli {
namespace {

using CountSet = std::set<std::size_t>;

CountSet span(std::size_t lo, std::size_t hi) {
  CountSet s;
  for (std::size_t n = lo; n <= hi; ++n) s.insert(n);
  return s;
}

CountSet join(CountSet a, const CountSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

// Published vertex-count sets of non-degenerate polytopes, by shape.
const std::map<std::string, CountSet>& reference(int table) {
  static const CountSet two_by_five = join({5, 8, 11, 12}, span(14, 30));
  static const std::map<std::string, CountSet> classical{
      {"2x3", {3, 4, 5, 6}},
      {"2x4", {4, 6, 8, 10, 12}},
      {"2x5", two_by_five},
      {"3x3", {9, 12, 15, 18}},
      {"3x4", {16, 21, 24, 26, 27, 29, 31, 32, 34, 36, 37, 39, 40, 41, 42, 44, 45, 46, 48, 49, 50, 52, 53,
               54, 56, 57, 58, 60, 61, 62, 63, 64, 66, 67, 68, 70, 71, 72, 74, 75, 76, 78, 80, 84, 90, 96}},
      {"4x4", join({108, 116, 124, 128, 296, 300, 304, 312, 320, 340, 360},
                   [] {
                     CountSet s;
                     for (std::size_t n = 136; n <= 288; n += 4) s.insert(n);
                     return s;
                   }())},
  };
  static const std::map<std::string, CountSet> axial{
      {"2x2x2", {8, 11, 14}},
      {"2x2x3", join({18, 24, 30, 32, 84, 86, 96, 108},
                     [] {
                       CountSet s;
                       for (std::size_t n = 36; n <= 80; n += 2) s.insert(n);
                       return s;
                     }())},
  };
  static const std::map<std::string, CountSet> planar{
      {"2x2x2", {2}},
      {"2x2x3", {3, 4, 5, 6}},
      {"2x2x4", {4, 6, 8, 10, 12}},
      {"2x2x5", two_by_five},
      {"2x3x3", join({5, 8, 9}, span(11, 59))},
  };
  return table == 1 ? classical : table == 2 ? axial : planar;
}

std::vector<std::string> default_shapes(int table) {
  if (table == 1) return {"2x3", "2x4", "3x3"};
  if (table == 2) return {"2x2x2"};
  return {"2x2x3"};
}

Shape parse_shape(const std::string& text, std::size_t parts) {
  Shape shape;
  std::size_t* dims[] = {&shape.p, &shape.q, &shape.s};
  std::size_t pos = 0;
  for (std::size_t a = 0; a < parts; ++a) {
    const auto x = text.find('x', pos);
    const auto piece = text.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorKind::InvalidInput, "bad shape '" + text + "'");
    }
    *dims[a] = std::stoul(piece);
    if ((x == std::string::npos) != (a + 1 == parts)) fail(ErrorKind::InvalidInput, "bad shape '" + text + "'");
    pos = x + 1;
  }
  return shape;
}

constexpr long kMaxMargin = 1000;

std::vector<Rational> uniform_margins(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t a = 0; a < n; ++a) out.emplace_back(uniform_int(rng, 1, kMaxMargin));
  return out;
}

// Uniform composition of total into n positive parts.
std::vector<Rational> composition(std::mt19937_64& rng, long total, std::size_t n) {
  std::set<long> cuts;
  while (cuts.size() + 1 < n) cuts.insert(uniform_int(rng, 1, total - 1));
  std::vector<Rational> parts;
  long prev = 0;
  for (const long c : cuts) {
    parts.emplace_back(c - prev);
    prev = c;
  }
  parts.emplace_back(total - prev);
  return parts;
}

long total_of(const std::vector<Rational>& v) { return to_int64(sum(v)); }

// Draws until the margins are non-degenerate and returns the vertex count.
std::size_t two_way_trial(std::mt19937_64& rng, Shape shape) {
  for (;;) {
    Margins2 m{uniform_margins(rng, shape.p), {}};
    const long total = total_of(m.u);
    if (total < static_cast<long>(shape.q)) continue;
    m.v = composition(rng, total, shape.q);
    if (!is_generic(m)) continue;
    return enumerate_vertices(m).vertices.size();
  }
}

template <class Margins>
std::optional<std::size_t> count_if_nondegenerate(const Margins& m) {
  const auto rank = build_constraint_system(m).expected_rank();
  const auto vs = enumerate_vertices_3way(m);
  for (const auto& x : vs) {
    if (x.support_size() != rank) return std::nullopt;
  }
  return vs.size();
}

std::size_t axial_trial(std::mt19937_64& rng, Shape shape) {
  for (;;) {
    AxialMargins m{uniform_margins(rng, shape.p), {}, {}};
    const long total = total_of(m.u);
    if (total < static_cast<long>(std::max(shape.q, shape.s))) continue;
    m.v = composition(rng, total, shape.q);
    m.w = composition(rng, total, shape.s);
    if (const auto n = count_if_nondegenerate(m)) return *n;
  }
}

// 2-margins of a random positive table, so the polytope is never empty.
std::size_t planar_trial(std::mt19937_64& rng, Shape shape) {
  for (;;) {
    Table3 x(shape.p, shape.q, shape.s);
    for (auto& e : x.entries) e = uniform_int(rng, 1, kMaxMargin);
    if (const auto n = count_if_nondegenerate(x.planar_margins())) return *n;
  }
}

}  // namespace

Output cmd_survey(int table, const Options& o) {
  const auto& refs = reference(table);
  const auto shapes = o.shapes.empty() ? default_shapes(table) : o.shapes;
  if (o.trials == 0) fail(ErrorKind::InvalidInput, "--trials must be >= 1");
  Json results = Json::array();
  CsvRows rows{{"shape", "vertices", "frequency", "in_reference"}};
  bool all_subset = true;
  for (const auto& name : shapes) {
    const auto it = refs.find(name);
    if (it == refs.end()) fail(ErrorKind::InvalidInput, "no reference row for shape '" + name + "'");
    const auto shape = parse_shape(name, table == 1 ? 2 : 3);
    std::mt19937_64 rng(o.seed);
    std::map<std::size_t, std::size_t> freq;
    for (std::size_t t = 0; t < o.trials; ++t) {
      const std::size_t n = table == 1   ? two_way_trial(rng, shape)
                            : table == 2 ? axial_trial(rng, shape)
                                         : planar_trial(rng, shape);
      ++freq[n];
    }
    Json observed = Json::array(), frequencies = Json::object();
    bool subset = true;
    for (const auto& [n, c] : freq) {
      observed.push_back(n);
      frequencies[std::to_string(n)] = c;
      const bool known = it->second.count(n) > 0;
      subset = subset && known;
      rows.push_back({name, std::to_string(n), std::to_string(c), known ? "1" : "0"});
    }
    Json missing = Json::array();
    for (const auto n : it->second) {
      if (!freq.count(n)) missing.push_back(n);
    }
    all_subset = all_subset && subset;
    results.push_back({{"shape", name},
                       {"trials", o.trials},
                       {"observed", observed},
                       {"frequencies", frequencies},
                       {"reference", it->second},
                       {"missing", missing},
                       {"subset", subset}});
  }
  Output out;
  out.json = {{"table", table}, {"seed", o.seed}, {"shapes", results}, {"subset", all_subset}};
  out.csv = rows;
  out.exit_code = all_subset ? 0 : 1;
  return out;
}

}  // namespace transportlab::cli
