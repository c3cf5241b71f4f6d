#include "expforge/report_json.hpp"

#include <cmath>
#include <limits>

#include "expforge/errors.hpp"
#include "expforge/formats.hpp"

namespace expforge {

using nlohmann::json;

namespace {

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json rows(const std::vector<SizeProfileRow>& rs) {
  json out = json::array();
  for (const auto& r : rs) {
    out.push_back({{"size", r.size}, {"mode", r.mode}, {"evaluated", r.evaluated}, {"min_ratio", num(r.value)},
                   {"witness", r.witness}});
  }
  return out;
}

json sizes(const std::vector<SizeEvidence>& rs) {
  json out = json::array();
  for (const auto& r : rs) {
    out.push_back({{"size", r.size}, {"mode", r.mode}, {"evaluated", r.evaluated}, {"value", num(r.value)},
                   {"witness", r.witness}});
  }
  return out;
}

double real_from(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

std::vector<SizeEvidence> sizes_from(const json& j) {
  std::vector<SizeEvidence> out;
  for (const auto& r : j) {
    out.push_back({r.at("size").get<std::uint32_t>(), r.at("mode").get<std::string>(), r.at("evaluated").get<std::uint64_t>(),
                   real_from(r.at("value")), r.at("witness").get<std::vector<std::uint32_t>>()});
  }
  return out;
}

json check_options(const CheckOptions& o) {
  return {{"size_cap", o.size_cap},
          {"w_cap", o.w_cap},
          {"exhaustive_budget", o.exhaustive_budget},
          {"samples", o.samples},
          {"seed", o.seed}};
}

CheckOptions check_options_from(const json& j) {
  CheckOptions o;
  o.size_cap = j.at("size_cap").get<std::uint32_t>();
  o.w_cap = j.at("w_cap").get<std::uint32_t>();
  o.exhaustive_budget = j.at("exhaustive_budget").get<std::uint64_t>();
  o.samples = j.at("samples").get<std::uint64_t>();
  o.seed = j.at("seed").get<std::uint64_t>();
  return o;
}

BucketFamily family_from(const json& j) {
  BucketFamily f;
  f.universe = j.at("universe").get<std::uint32_t>();
  f.buckets = j.at("buckets").get<std::vector<std::vector<std::uint32_t>>>();
  return f;
}

}  // namespace

json to_json(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json to_json(const BiregularReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"side", to_string(x.side)}, {"vertex", x.vertex}, {"degree", x.degree}, {"expected", x.expected}});
  }
  return {{"d_left", r.d_left}, {"d_right", r.d_right}, {"handshake_ok", r.handshake_ok}, {"violations", v},
          {"passed", r.passed()}};
}

json to_json(const StructuredReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"a", p.a}, {"b", p.b}, {"s", p.s}, {"min_size", p.min_size}, {"max_size", p.max_size},
                     {"sizes_in_window", p.sizes_in_window}});
  }
  json unmatched = json::array();
  for (const auto& [u, v] : r.unmatched) unmatched.push_back({u, v});
  return {{"k", r.k},
          {"D", r.D},
          {"property1", {{"passed", r.degrees_ok}, {"bad_faces", r.bad_faces}, {"bad_middle", r.bad_middle}}},
          {"property2", {{"passed", r.orderings_ok}, {"bad_orderings", r.bad_orderings}}},
          {"property3", {{"passed", r.partition_ok}, {"violations", r.partition_violations}}},
          {"property4", {{"passed", r.special_sets_ok}, {"pairs", pairs}, {"unmatched", unmatched}}},
          {"passed", r.passed()}};
}

json to_json(const BoundExponents& r) {
  return {{"k", r.k},
          {"q", r.q},
          {"tau_exponent", to_json(r.tau)},
          {"lambda_exponent", to_json(r.lambda)},
          {"tau_base", to_json(r.tau_base)},
          {"max_min", to_json(r.max_min)},
          {"argmax_triple", r.argmax},
          {"tau_value", num(r.tau_value)},
          {"lambda_value", num(r.lambda_value)}};
}

json to_json(const ParameterReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"lhs", num(c.lhs)}, {"rhs", num(c.rhs)}, {"passed", c.passed},
                      {"slack", num(c.slack)}});
  }
  return {{"checks", checks},
          {"window_low", num(r.window_low)},
          {"window_high", num(r.window_high)},
          {"window_nonempty", r.window_nonempty},
          {"passed", r.passed()}};
}

json to_json(const ExponentReport& r) {
  return {{"window_low", to_json(r.window_low)},
          {"window_high", to_json(r.window_high)},
          {"x_sup", to_json(r.x_sup)},
          {"feasible", r.feasible},
          {"x_witness", r.x_witness ? to_json(*r.x_witness) : json(nullptr)},
          {"blocking", r.blocking}};
}

json to_json(const SpectralReport& r) {
  return {{"lambda_max", num(r.lambda_max)}, {"lambda_2", num(r.lambda_2)}, {"method", r.method},
          {"tolerance", r.tolerance},        {"iterations", r.iterations}, {"residual", num(r.residual)},
          {"components", r.components}};
}

json to_json(const BucketFamily& f) { return {{"universe", f.universe}, {"buckets", f.buckets}}; }

json to_json(const SpreadEvidence& e) {
  return {{"r", e.r},
          {"w_min", e.w_min},
          {"w_cap", e.w_cap},
          {"size_cap", e.size_cap},
          {"log_D", num(e.log_D)},
          {"bucket_sizes_in_window", e.bucket_sizes_in_window},
          {"vacuous", e.vacuous},
          {"mode", e.mode},
          {"samples", e.samples},
          {"seed", e.seed},
          {"worst_ratio", num(e.worst_ratio)},
          {"witness", {{"S", e.witness_s}, {"W", e.witness_w}}},
          {"sizes", sizes(e.sizes)},
          {"passed", e.passed}};
}

json to_json(const LosslessEvidence& e) {
  return {{"shrink", e.shrink},
          {"shrink_range", e.shrink_range},
          {"certified_max_size", e.certified_max_size},
          {"size_cap", e.size_cap},
          {"mode", e.mode},
          {"samples", e.samples},
          {"seed", e.seed},
          {"min_ratio", num(e.min_ratio)},
          {"min_ratio_certified", num(e.min_ratio_certified)},
          {"witness", e.witness},
          {"sizes", sizes(e.sizes)},
          {"passed", e.passed}};
}

json to_json(const StructuredBipartite& sb) {
  json orderings = json::array();
  for (std::uint32_t u = 0; u < sb.middle_size(); ++u) {
    const auto o = sb.nbr(u);
    orderings.push_back(std::vector<std::uint32_t>(o.begin(), o.end()));
  }
  return {{"schema", kStructuredSchema}, {"k", sb.k}, {"D", sb.D}, {"graph", write_graph(sb.graph)},
          {"part_of", sb.part_of}, {"orderings", orderings}};
}

StructuredBipartite structured_from_json(const json& j) {
  if (j.value("schema", std::string()) != kStructuredSchema) throw DomainError("not a structured/v1 document");
  StructuredBipartite sb;
  sb.k = j.at("k").get<std::uint32_t>();
  sb.D = j.at("D").get<std::uint32_t>();
  sb.graph = parse_graph(j.at("graph").get<std::string>());
  sb.part_of = j.at("part_of").get<std::vector<std::uint32_t>>();
  const auto orderings = j.at("orderings").get<std::vector<std::vector<std::uint32_t>>>();
  if (sb.part_of.size() != sb.middle_size() || orderings.size() != sb.middle_size()) {
    throw DomainError("structured document: part_of and orderings must cover every middle vertex");
  }
  for (const auto& o : orderings) {
    for (auto f : o) {
      if (f >= sb.face_count()) throw DomainError("structured document: ordering names face " + std::to_string(f));
    }
    sb.nbr_order.insert(sb.nbr_order.end(), o.begin(), o.end());
    sb.nbr_offsets.push_back(static_cast<std::uint32_t>(sb.nbr_order.size()));
  }
  for (auto p : sb.part_of) {
    if (p >= sb.k) throw DomainError("structured document: part index out of range");
  }
  compute_special_sets(sb);
  return sb;
}

json make_report(const std::string& kind, json body) {
  return {{"schema", kReportSchema}, {"kind", kind}, {"body", std::move(body)}};
}

json to_json(const GadgetCertificate& c) {
  const auto& p = c.params;
  return {{"params",
           {{"D_L", p.D_L},
            {"D_R", p.D_R},
            {"d_L", p.d_L},
            {"d_R", p.d_R},
            {"right_family", to_json(p.right_family)},
            {"left_family", to_json(p.left_family)},
            {"checks", check_options(p.checks)},
            {"shrink", p.shrink},
            {"shrink_range", p.shrink_range},
            {"simple", p.simple},
            {"seed", p.seed}}},
          {"tries", c.tries},
          {"sample_seed", c.sample_seed},
          {"gadget", write_graph(c.gadget)},
          {"bucket_spread", to_json(c.spread)},
          {"lossless", to_json(c.lossless)},
          {"transpose", {{"bucket_spread", to_json(c.spread_transpose)}, {"lossless", to_json(c.lossless_transpose)}}},
          {"passed", c.passed()}};
}

GadgetCertificate certificate_from_json(const json& j) {
  GadgetCertificate c;
  const auto& p = j.at("params");
  c.params.D_L = p.at("D_L").get<std::uint32_t>();
  c.params.D_R = p.at("D_R").get<std::uint32_t>();
  c.params.d_L = p.at("d_L").get<std::uint32_t>();
  c.params.d_R = p.at("d_R").get<std::uint32_t>();
  c.params.right_family = family_from(p.at("right_family"));
  c.params.left_family = family_from(p.at("left_family"));
  c.params.checks = check_options_from(p.at("checks"));
  c.params.shrink = p.at("shrink").get<double>();
  c.params.shrink_range = p.at("shrink_range").get<double>();
  c.params.simple = p.at("simple").get<bool>();
  c.params.seed = p.at("seed").get<std::uint64_t>();
  c.tries = j.at("tries").get<std::uint32_t>();
  c.sample_seed = j.at("sample_seed").get<std::uint64_t>();
  c.gadget = parse_graph(j.at("gadget").get<std::string>());
  auto spread = [](const json& s) {
    SpreadEvidence e;
    e.r = s.at("r").get<std::uint32_t>();
    e.w_min = s.at("w_min").get<std::uint32_t>();
    e.w_cap = s.at("w_cap").get<std::uint32_t>();
    e.size_cap = s.at("size_cap").get<std::uint32_t>();
    e.log_D = real_from(s.at("log_D"));
    e.bucket_sizes_in_window = s.at("bucket_sizes_in_window").get<bool>();
    e.vacuous = s.at("vacuous").get<bool>();
    e.mode = s.at("mode").get<std::string>();
    e.samples = s.at("samples").get<std::uint64_t>();
    e.seed = s.at("seed").get<std::uint64_t>();
    e.worst_ratio = real_from(s.at("worst_ratio"));
    e.witness_s = s.at("witness").at("S").get<std::vector<std::uint32_t>>();
    e.witness_w = s.at("witness").at("W").get<std::vector<std::uint32_t>>();
    e.sizes = sizes_from(s.at("sizes"));
    e.passed = s.at("passed").get<bool>();
    return e;
  };
  auto lossless = [](const json& s) {
    LosslessEvidence e;
    e.shrink = s.at("shrink").get<double>();
    e.shrink_range = s.at("shrink_range").get<double>();
    e.certified_max_size = s.at("certified_max_size").get<std::uint32_t>();
    e.size_cap = s.at("size_cap").get<std::uint32_t>();
    e.mode = s.at("mode").get<std::string>();
    e.samples = s.at("samples").get<std::uint64_t>();
    e.seed = s.at("seed").get<std::uint64_t>();
    e.min_ratio = real_from(s.at("min_ratio"));
    e.min_ratio_certified = real_from(s.at("min_ratio_certified"));
    e.witness = s.at("witness").get<std::vector<std::uint32_t>>();
    e.sizes = sizes_from(s.at("sizes"));
    e.passed = s.at("passed").get<bool>();
    return e;
  };
  c.spread = spread(j.at("bucket_spread"));
  c.lossless = lossless(j.at("lossless"));
  c.spread_transpose = spread(j.at("transpose").at("bucket_spread"));
  c.lossless_transpose = lossless(j.at("transpose").at("lossless"));
  return c;
}

json to_json(const TryRecord& t) {
  return {{"attempt", t.attempt},
          {"sample_seed", t.sample_seed},
          {"bucket_spread", num(t.spread)},
          {"lossless", num(t.lossless)},
          {"transpose_bucket_spread", num(t.spread_transpose)},
          {"transpose_lossless", num(t.lossless_transpose)},
          {"passed", t.passed}};
}

json to_json(const CollisionReport& r) {
  json blue_red = json::array();
  for (std::size_t i = 0; i < r.u.size(); ++i) {
    blue_red.push_back({{"u", r.u[i]}, {"gamma_degree", r.gamma_degree[i]}, {"blue", r.blue[i]}, {"red", r.red[i]}});
  }
  json c = json::array();
  for (const auto& e : r.collisions) c.push_back({e.u, e.v, e.multiplicity});
  json mass = json::array();
  for (const auto& e : r.collisions) {
    mass.push_back({{"u", e.u}, {"v", e.v}, {"mass_u", e.mass_u}, {"mass_v", e.mass_v},
                    {"special_set_found", e.special_set_found}});
  }
  json sat = json::array();
  for (const auto& s : r.saturated) sat.push_back({{"vertex", s.vertex}, {"part", s.part}, {"degree", s.degree}});
  json gamma = json::array();
  for (const auto& [l, u] : r.gamma_edges) gamma.push_back({l, u});
  return {{"seed", {{"side", to_string(r.seed.side)}, {"members", r.seed.members}}},
          {"transposed", r.transposed},
          {"U", r.u},
          {"gamma_edges", gamma},
          {"threshold", num(r.threshold)},
          {"U_low", r.u_low},
          {"U_high", r.u_high},
          {"ports", blue_red},
          {"C", c},
          {"C_mass", mass},
          {"e_C", r.e_c_total},
          {"e_C_low", r.e_c_low},
          {"e_C_low_high", r.e_c_low_high},
          {"e_C_high", r.e_c_high},
          {"saturation_threshold", num(r.saturation_threshold)},
          {"saturated", sat},
          {"blue_edges", r.blue_edges},
          {"red_edges", r.red_edges},
          {"blue_unique", r.blue_unique},
          {"z_unique", r.z_unique},
          {"blue_unique_matches", r.blue_unique_matches},
          {"multiplicity_violations", r.multiplicity_violations},
          {"skeleton_subgraph", r.skeleton_subgraph}};
}

json to_json(const LowEdgeDiagnostic& d) {
  return {{"e_low", d.e_low},
          {"e_high", d.e_high},
          {"k_times_s", d.k_times_s},
          {"identity_holds", d.identity_holds},
          {"ratio", d.ratio ? num(*d.ratio) : json(nullptr)}};
}

json to_json(const EmlResult& r) {
  return {{"c", r.c},           {"d", r.d},     {"edges", r.edges},   {"alpha", num(r.alpha)},
          {"beta", num(r.beta)}, {"lambda", num(r.lambda)}, {"low", num(r.low)}, {"high", num(r.high)},
          {"actual", r.actual}, {"contained", r.contained}};
}

json to_json(const SmallSetLambda& r) {
  return {{"lambda_U", num(r.lambda_u)}, {"lambda_2", num(r.lambda_2)}, {"lambda_max", num(r.lambda_max)},
          {"d_max", num(r.d_max)},       {"bound", num(r.bound)}};
}

json to_json(const TriangleReport& r) {
  json triples = json::array();
  for (const auto& t : r.per_triple) triples.push_back({{"parts", {t.i0, t.i1, t.i2}}, {"triangles", t.triangles}});
  return {{"faces", r.faces},
          {"U_size", r.u_size},
          {"ratio", num(r.ratio)},
          {"per_triple", triples},
          {"formula_exponent", r.formula_exponent ? to_json(*r.formula_exponent) : json(nullptr)}};
}

json to_json(const TauEstimate& r) {
  return {{"tau", num(r.tau)}, {"witness", r.witness}, {"profile", rows(r.profile)}};
}

json to_json(const Orientation& o) {
  json arcs = json::array();
  for (const auto& [a, b] : o.arcs) arcs.push_back({a, b});
  return {{"max_out_degree", o.max_out_degree}, {"out_degree", o.out_degree}, {"peel_order", o.peel_order},
          {"arcs", arcs}};
}

json to_json(const DegreeProductCheck& c) {
  return {{"d1", num(c.d1)},         {"d2", num(c.d2)},   {"lhs", num(c.lhs)},
          {"lambda", num(c.lambda)}, {"rhs", num(c.rhs)}, {"passed", c.passed}};
}

json to_json(const UneProfile& p) {
  return {{"side", to_string(p.side)}, {"profile", rows(p.rows)}, {"global_min", num(p.global_min)},
          {"witness", p.witness}};
}

}  // namespace expforge
