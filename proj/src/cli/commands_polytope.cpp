#include <string>
#include <variant>

#include "command.hpp"
#include "transportlab/core/constraint_system.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope2/birkhoff.hpp"
#include "transportlab/polytope2/facets.hpp"
#include "transportlab/polytope2/feasibility.hpp"
#include "transportlab/polytope2/graph.hpp"
#include "transportlab/polytope2/hurkens.hpp"
#include "transportlab/polytope2/vertices.hpp"
#include "transportlab/polytope3/basis.hpp"
#include "transportlab/polytope3/multiway.hpp"

namespace transportlab::cli {
namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

const char* kind_name(const Instance& inst) {
  return std::visit(Overload{[](const Margins2&) { return "2way"; }, [](const AxialMargins&) { return "axial"; },
                             [](const PlanarMargins&) { return "planar"; }},
                    inst);
}

Margins2 two_way(const Instance& inst, const char* command) {
  if (const auto* m = std::get_if<Margins2>(&inst)) return *m;
  fail(ErrorKind::InvalidInput, std::string(command) + " needs a 2way instance");
}

// Rows of equal totals between the three planar margin matrices.
bool planar_totals_agree(const PlanarMargins& m) {
  for (std::size_t i = 0; i < m.p(); ++i) {
    Rational a = 0, b = 0;
    for (std::size_t j = 0; j < m.q(); ++j) a += m.W(i, j);
    for (std::size_t k = 0; k < m.s(); ++k) b += m.V(i, k);
    if (a != b) return false;
  }
  for (std::size_t j = 0; j < m.q(); ++j) {
    Rational a = 0, b = 0;
    for (std::size_t i = 0; i < m.p(); ++i) a += m.W(i, j);
    for (std::size_t k = 0; k < m.s(); ++k) b += m.U(j, k);
    if (a != b) return false;
  }
  for (std::size_t k = 0; k < m.s(); ++k) {
    Rational a = 0, b = 0;
    for (std::size_t i = 0; i < m.p(); ++i) a += m.V(i, k);
    for (std::size_t j = 0; j < m.q(); ++j) b += m.U(j, k);
    if (a != b) return false;
  }
  return true;
}

struct Enumerated {
  ConstraintSystem system;
  std::vector<Json> tables;
  std::vector<std::vector<Rational>> entries;
  PolytopeGraph graph;
  bool degenerate = false;
  std::optional<VertexSet2> two_way;
};

Enumerated enumerate(const Instance& inst, bool with_graph) {
  Enumerated e;
  std::visit(Overload{[&](const Margins2& m) {
                        if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row and column totals differ");
                        e.system = build_constraint_system(m);
                        auto vs = enumerate_vertices(m);
                        for (const auto& x : vs.vertices) {
                          e.tables.push_back(to_json(x));
                          e.entries.push_back(x.entries);
                        }
                        e.degenerate = vs.degenerate_flag;
                        if (with_graph) e.graph = polytope_graph(vs);
                        e.two_way = std::move(vs);
                      },
                      [&](const auto& m) {
                        e.system = build_constraint_system(m);
                        const auto vs = enumerate_vertices_3way(m);
                        if (vs.empty()) fail(ErrorKind::Infeasible, "the polytope is empty");
                        for (const auto& x : vs) {
                          e.tables.push_back(to_json(x));
                          e.entries.push_back(x.entries);
                          if (x.support_size() < e.system.expected_rank()) e.degenerate = true;
                        }
                        if (with_graph) e.graph = vertex_graph_3way(e.system, vs);
                      }},
             inst);
  return e;
}

CsvRows vertex_rows(const Enumerated& e) {
  CsvRows rows;
  std::vector<std::string> header{"vertex"};
  for (const auto& c : e.system.cells) {
    std::string name = "x_" + std::to_string(c[0]) + "_" + std::to_string(c[1]);
    if (e.system.kind != SystemKind::TwoWay) name += "_" + std::to_string(c[2]);
    header.push_back(name);
  }
  rows.push_back(header);
  for (std::size_t a = 0; a < e.entries.size(); ++a) {
    std::vector<std::string> row{std::to_string(a)};
    for (auto& s : cells_as_strings(e.entries[a])) row.push_back(std::move(s));
    rows.push_back(std::move(row));
  }
  return rows;
}

CsvRows edge_rows(const PolytopeGraph& g) {
  CsvRows rows{{"a", "b"}};
  for (std::size_t a = 0; a < g.n; ++a) {
    for (const auto b : g.adjacency[a]) {
      if (a < b) rows.push_back({std::to_string(a), std::to_string(b)});
    }
  }
  return rows;
}

Json diameter_bound(const Instance& inst) {
  return std::visit(Overload{[](const Margins2& m) { return Json(4 * (m.p() + m.q() - 2)); },
                             [](const AxialMargins& m) {
                               const std::size_t k = m.p() + m.q() + m.s() - 2;
                               return Json(2 * k * k);
                             },
                             [](const PlanarMargins&) { return Json(nullptr); }},
                    inst);
}

}  // namespace

Output cmd_feasible(const Options& o) {
  const auto inst = instance_from_json(o.input);
  const bool ok = std::visit(Overload{[](const Margins2& m) { return is_feasible(m); },
                                      [](const AxialMargins& m) { return axial_feasible(m); },
                                      [](const PlanarMargins& m) {
                                        return planar_totals_agree(m) && !enumerate_vertices_3way(m).empty();
                                      }},
                             inst);
  Output out;
  out.json = {{"kind", kind_name(inst)}, {"feasible", ok}};
  out.exit_code = ok ? 0 : 1;
  return out;
}

Output cmd_dimension(const Options& o) {
  const auto inst = instance_from_json(o.input);
  Output out;
  out.json = {{"kind", kind_name(inst)}};
  std::visit(Overload{[&](const Margins2& m) {
                        if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row and column totals differ");
                        std::size_t p = 0, q = 0;
                        for (const auto& x : m.u) p += sgn(x) > 0;
                        for (const auto& x : m.v) q += sgn(x) > 0;
                        out.json["dimension"] = p == 0 ? 0 : dimension2(p, q);
                        out.json["rank"] = build_constraint_system(m).expected_rank();
                      },
                      [&](const auto& m) {
                        const auto cs = build_constraint_system(m);
                        const auto vs = enumerate_vertices_3way(m);
                        if (vs.empty()) fail(ErrorKind::Infeasible, "the polytope is empty");
                        std::vector<Point> pts;
                        for (const auto& x : vs) pts.push_back(x.entries);
                        out.json["dimension"] = polytope_dimension(cs.A, pts);
                        out.json["rank"] = cs.expected_rank();
                      }},
             inst);
  return out;
}

Output cmd_nw_vertex(const Options& o) {
  const auto inst = instance_from_json(o.input);
  Output out;
  std::vector<Rational> entries;
  std::visit(Overload{[&](const Margins2& m) {
                        if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row and column totals differ");
                        const auto x = northwest_corner(m);
                        out.json = {{"kind", "2way"}, {"table", to_json(x)}};
                        entries = x.entries;
                      },
                      [&](const AxialMargins& m) {
                        const auto x = axial_nw_corner(m);
                        out.json = {{"kind", "axial"}, {"table", to_json(x)}};
                        entries = x.entries;
                      },
                      [&](const PlanarMargins&) {
                        fail(ErrorKind::InvalidInput, "nw-vertex supports 2way and axial instances");
                      }},
             inst);
  out.csv = CsvRows{cells_as_strings(entries)};
  return out;
}

Output cmd_vertices(const Options& o) {
  const auto inst = instance_from_json(o.input);
  const auto e = enumerate(inst, false);
  Output out;
  out.json = {{"kind", kind_name(inst)},
              {"count", e.tables.size()},
              {"degenerate", e.degenerate},
              {"vertices", e.tables}};
  out.csv = vertex_rows(e);
  return out;
}

Output cmd_graph(const Options& o) {
  const auto inst = instance_from_json(o.input);
  const auto e = enumerate(inst, true);
  Output out;
  out.json = edge_list_json(e.graph);
  out.json["vertices"] = e.tables;
  out.csv = edge_rows(e.graph);
  if (o.format == "dot") out.text = to_dot(e.graph);
  return out;
}

Output cmd_diameter(const Options& o) {
  const auto inst = instance_from_json(o.input);
  const auto e = enumerate(inst, true);
  Output out;
  out.json = {{"kind", kind_name(inst)},
              {"vertices", e.graph.n},
              {"edges", e.graph.edge_count()},
              {"diameter", diameter(e.graph)},
              {"bound", diameter_bound(inst)}};
  return out;
}

Output cmd_facets(const Options& o) {
  const auto m = two_way(instance_from_json(o.input), "facets");
  if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row and column totals differ");
  const auto cells = facet_cells(m);
  Json facets = Json::array();
  CsvRows rows{{"i", "j", "facet"}};
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::size_t i = c / m.q(), j = c % m.q();
    if (cells[c]) facets.push_back({i, j});
    rows.push_back({std::to_string(i), std::to_string(j), cells[c] ? "1" : "0"});
  }
  Output out;
  out.json = {{"facet_count", facets.size()}, {"facets", facets}};
  out.csv = rows;
  return out;
}

Output cmd_hurkens(const Options& o) {
  const auto m = two_way(instance_from_json(o.input), "hurkens");
  const auto e = enumerate(m, true);
  const auto& vs = *e.two_way;
  const auto n = static_cast<long>(vs.vertices.size());
  const long from = o.from.value_or(0), to = o.to.value_or(n - 1);
  if (from < 0 || from >= n || to < 0 || to >= n) {
    fail(ErrorKind::InvalidInput, "vertex indices must lie in 0.." + std::to_string(n - 1));
  }
  const auto& start = vs.vertices[static_cast<std::size_t>(from)];
  const auto& target = vs.vertices[static_cast<std::size_t>(to)];
  const auto path = hurkens_walk(m, target, start);
  const auto dist = bfs_distances(e.graph, static_cast<std::size_t>(from))[static_cast<std::size_t>(to)];
  Output out;
  out.json = {{"from", from},
              {"to", to},
              {"length", path.length()},
              {"bfs_distance", dist},
              {"budget", 4 * (m.p() + m.q() - 2)},
              {"path", path.indices(vs)}};
  CsvRows rows{{"step", "vertex"}};
  const auto idx = path.indices(vs);
  for (std::size_t a = 0; a < idx.size(); ++a) rows.push_back({std::to_string(a), std::to_string(idx[a])});
  out.csv = rows;
  return out;
}

Output cmd_birkhoff(const Options& o) {
  if (o.p < 1) fail(ErrorKind::InvalidInput, "--p must be >= 1");
  if (o.p > 5) fail(ErrorKind::TooLarge, "Birkhoff enumeration is limited to p <= 5");
  const auto p = static_cast<std::size_t>(o.p);
  const auto e = enumerate(birkhoff_margins(p), true);
  std::size_t min_degree = e.graph.n, max_degree = 0;
  for (const auto& adj : e.graph.adjacency) {
    min_degree = std::min(min_degree, adj.size());
    max_degree = std::max(max_degree, adj.size());
  }
  Output out;
  out.json = {{"p", p},
              {"dimension", (p - 1) * (p - 1)},
              {"vertices", e.graph.n},
              {"degree", to_json(birkhoff_degree(p))},
              {"min_degree", min_degree},
              {"max_degree", max_degree},
              {"diameter", diameter(e.graph)}};
  return out;
}

}  // namespace transportlab::cli
