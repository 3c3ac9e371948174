#include <string>

#include "command.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope3/junginger.hpp"
#include "transportlab/polytope3/universality.hpp"

namespace transportlab::cli {
namespace {

Json point_sets_json(const PointSets& s) {
  Json vertices = Json::array();
  for (const auto& v : s.vertices) vertices.push_back(to_json(v));
  Json points = Json::array();
  for (const auto& x : s.integer_points) {
    Json row = Json::array();
    for (const auto& e : x) row.push_back(to_json(e));
    points.push_back(std::move(row));
  }
  return {{"vertex_count", s.vertices.size()},
          {"integer_point_count", s.integer_points.size()},
          {"vertices", vertices},
          {"integer_points", points}};
}

JungingerPenalty parse_penalty(const std::string& name) {
  if (name == "one-in-range") return JungingerPenalty::OneInRange;
  if (name == "two-in-range") return JungingerPenalty::TwoInRange;
  fail(ErrorKind::InvalidInput, "--penalty is one-in-range or two-in-range");
}

}  // namespace

Output cmd_reduce_junginger(const Options& o) {
  const auto inst = instance_from_json(o.input);
  const auto* m = std::get_if<AxialMargins>(&inst);
  if (!m) fail(ErrorKind::InvalidInput, "reduce-junginger needs an axial instance");
  AxialProblem problem{*m, std::nullopt};
  if (o.input.contains("cost")) problem.cost = table3_from_json(o.input["cost"]);
  std::optional<Rational> M;
  if (o.M) {
    M = parse_rational(*o.M);
    if (sgn(*M) <= 0) fail(ErrorKind::InvalidInput, "--M must be positive");
  }
  const auto red = junginger_reduce(problem, M, parse_penalty(o.penalty));
  Output out;
  out.json = {{"beta", to_json(red.beta)},
              {"M", to_json(red.M)},
              {"penalty", o.penalty},
              {"instance", to_json(red.planar.margins)},
              {"cost", red.planar.cost ? to_json(*red.planar.cost) : Json(nullptr)}};
  return out;
}

Output cmd_encode_universality(const Options& o) {
  const auto sys = integer_system_from_json(o.input);
  std::optional<BigInt> bound;
  if (o.bound) {
    bound = parse_bigint(*o.bound);
    if (sgn(*bound) <= 0) fail(ErrorKind::InvalidInput, "--bound must be positive");
  }
  Output out;
  out.json = to_json(encode_universality(sys, bound, !o.no_validate));
  return out;
}

Output cmd_verify_encoding(const Options& o) {
  const auto enc = encoding_from_json(o.input);
  const auto source = source_point_sets(enc);
  const auto face = face_point_sets(enc);
  const bool ok = verify_representation(enc, source, face);
  Output out;
  out.json = {{"verified", ok}, {"source", point_sets_json(source)}, {"face", point_sets_json(face)}};
  out.exit_code = ok ? 0 : 1;
  return out;
}

}  // namespace transportlab::cli
