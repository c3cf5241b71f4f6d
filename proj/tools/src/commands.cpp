#include "commands.hpp"

#include <cmath>
#include <map>

#include "cli_util.hpp"
#include "expforge/cayley.hpp"
#include "expforge/certify.hpp"
#include "expforge/formats.hpp"
#include "expforge/grassmann.hpp"
#include "expforge/parallel.hpp"
#include "expforge/product.hpp"
#include "expforge/report_json.hpp"
#include "expforge/rng.hpp"

namespace expforge::cli {

using nlohmann::json;

namespace {

int finish(const std::string& kind, json body, const Common& c, int code = kExitOk) {
  emit(make_report(kind, std::move(body)), c.report);
  return code;
}

CayleySpec load_spec(const std::string& group, const std::string& gens) {
  if (group.empty() || gens.empty()) throw UsageError("--group and --gens are both required");
  CayleySpec spec{parse_group(read_file(group)), parse_generators(read_file(gens))};
  if (const auto bad = check_group_axioms(spec.group)) throw UsageError(group + ": " + *bad);
  validate_cayley_spec(spec);
  return spec;
}

json generators_json(const std::vector<FaceGenerator>& gens) {
  auto out = json::array();
  for (const auto& g : gens) out.push_back(g.elements);
  return out;
}

std::vector<FaceGenerator> generators_from(const json& doc) {
  std::vector<FaceGenerator> out;
  for (const auto& g : doc.at("generators")) out.push_back({g.get<std::vector<std::uint32_t>>()});
  return out;
}

json class_histogram(const std::vector<std::vector<FaceGenerator>>& classes) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : classes) ++h[c.size()];
  auto out = json::array();
  for (const auto& [size, count] : h) out.push_back({{"size", size}, {"count", count}});
  return out;
}

StructuredBipartite load_structured(const std::string& path) {
  if (path.empty()) throw UsageError("--structured is required");
  const auto doc = read_json(path);
  return structured_from_json(doc.contains("body") ? doc.at("body") : doc);
}

EnumerationOptions enum_options(const EnumOpts& e, const Common& c) {
  EnumerationOptions o;
  o.size_cap = e.size_cap;
  o.exhaustive_budget = e.budget;
  o.samples = e.samples;
  o.seed = e.seed;
  o.workers = resolve_workers(c.workers);
  return o;
}

json structured_summary(const StructuredBipartite& sb) {
  return {{"k", sb.k}, {"D", sb.D}, {"faces", sb.face_count()}, {"middle", sb.middle_size()},
          {"edges", sb.graph.edge_count()}};
}

}  // namespace

int run_building(const BuildingOpts& o, const Common& c) {
  const auto g = building_bipartite(o.k, o.q, o.i, o.j);
  const auto dl = gauss_binom_u64(static_cast<int>(o.k - o.i), static_cast<int>(o.j - o.i), o.q);
  const auto dr = gauss_binom_u64(static_cast<int>(o.j), static_cast<int>(o.i), o.q);
  if (!o.out.empty()) write_file(o.out, write_graph(g));
  if (!o.complex_out.empty()) write_file(o.complex_out, write_complex(building_complex(o.k, o.q).flags));
  json body = {{"k", o.k},
               {"q", o.q},
               {"i", o.i},
               {"j", o.j},
               {"left", g.left_size()},
               {"right", g.right_size()},
               {"edges", g.edge_count()},
               {"degrees", expforge::to_json(validate_biregular(g, static_cast<std::uint32_t>(dl), static_cast<std::uint32_t>(dr)))},
               {"spectral", expforge::to_json(bipartite_lambda2(g))},
               {"lambda_2_formula", link_lambda2_formula(o.k, o.q, o.i, o.j)},
               {"artifacts", {{"graph", o.out}, {"complex", o.complex_out}}}};
  return finish("building", std::move(body), c);
}

int run_cayley(const CayleyOpts& o, const Common& c) {
  const auto spec = load_spec(o.group, o.gens);
  const auto cap = o.cap ? o.cap : kDefaultCayleyCap;
  auto gens = face_generators(spec, cap);
  const auto classes = equivalence_classes(gens, spec);
  const auto cc = build_cayley_complex(spec, gens, cap);
  if (!o.out.empty()) write_file(o.out, write_complex(cc.complex));
  if (!o.generators_out.empty()) emit({{"generators", generators_json(gens)}}, o.generators_out);
  json body = {{"order", spec.group.order()},
               {"k", spec.k()},
               {"face_generators", gens.size()},
               {"classes", class_histogram(classes)},
               {"faces", cc.complex.face_count()},
               {"part_sizes", cc.complex.part_sizes()},
               {"artifacts", {{"complex", o.out}, {"generators", o.generators_out}}}};
  return finish("cayley", std::move(body), c);
}

int run_incidence(const IncidenceOpts& o, const Common& c) {
  StructuredBipartite sb;
  std::string source;
  if (!o.complex.empty()) {
    sb = incidence_graph(parse_complex(read_file(o.complex)));
    source = "complex";
  } else {
    const auto spec = load_spec(o.group, o.gens);
    const auto cc = o.face_gens.empty() ? build_cayley_complex(spec)
                                        : build_cayley_complex(spec, generators_from(read_json(o.face_gens)));
    sb = cayley_incidence_graph(cc);
    source = "cayley";
  }
  if (!o.out.empty()) emit(make_report("base", expforge::to_json(sb)), o.out);
  auto body = structured_summary(sb);
  body["source"] = source;
  body["structured"] = expforge::to_json(verify_structured(sb));
  body["artifacts"] = {{"structured", o.out}};
  return finish("incidence", std::move(body), c);
}

int run_truncate(const TruncateOpts& o, const Common& c) {
  const auto spec = load_spec(o.group, o.gens);
  const auto gens = face_generators(spec);
  const auto classes = equivalence_classes(gens, spec);
  const auto picked = truncate_to_degree(classes, o.degree);
  if (!o.out.empty()) emit({{"generators", generators_json(picked)}}, o.out);
  json body = {{"degree", o.degree},
               {"face_generators", gens.size()},
               {"classes", class_histogram(classes)},
               {"picked", generators_json(picked)},
               {"artifacts", {{"generators", o.out}}}};
  return finish("truncate", std::move(body), c);
}

int run_gadget_search(const GadgetOpts& o, const Common& c) {
  GadgetParams p;
  p.D_L = o.D_L;
  p.D_R = o.D_R;
  p.d_L = o.d_L;
  p.d_R = o.d_R;
  if (o.buckets == 0) throw UsageError("--buckets must be positive");
  p.right_family = equal_buckets(o.D_R, o.buckets);
  p.left_family = equal_buckets(o.D_L, o.left_buckets ? o.left_buckets : o.buckets);
  p.checks.size_cap = o.size_cap;
  p.checks.w_cap = o.w_cap;
  p.checks.exhaustive_budget = o.budget;
  p.checks.samples = o.samples;
  p.checks.seed = o.seed;
  p.checks.workers = resolve_workers(c.workers);
  p.shrink = o.shrink;
  p.shrink_range = o.shrink_range;
  p.simple = !o.multigraph;
  p.seed = o.seed;
  p.validate();
  try {
    const auto cert = search_good_gadget(p, o.max_tries);
    if (!o.out.empty()) emit(make_report("gadget-certificate", expforge::to_json(cert)), o.out);
    auto body = expforge::to_json(cert);
    body["artifacts"] = {{"certificate", o.out}};
    return finish("gadget-search", std::move(body), c);
  } catch (const GadgetSearchFailure& f) {
    auto tries = json::array();
    for (const auto& t : f.tries()) tries.push_back(expforge::to_json(t));
    return finish("gadget-search", {{"passed", false}, {"error", f.what()}, {"tries", tries}}, c);
  }
}

int run_line_product(const LineProductOpts& o, const Common& c) {
  if (o.gadget.empty()) throw UsageError("--gadget is required");
  const auto left = load_structured(o.left);
  const auto right = o.right.empty() ? left : load_structured(o.right);
  const auto inst = line_product(left, right, load_gadget(o.gadget));
  if (!o.out.empty()) write_file(o.out, write_graph(inst.z));
  json body = {{"left", inst.z.left_size()},
               {"right", inst.z.right_size()},
               {"edges", inst.z.edge_count()},
               {"gadget", {{"D_L", inst.gadget.left_size()}, {"D_R", inst.gadget.right_size()}, {"edges", inst.gadget.edge_count()}}},
               {"degrees", expforge::to_json(inst.degrees)},
               {"artifacts", {{"z", o.out}}}};
  return finish("line-product", std::move(body), c);
}

int run_certify_une(const UneOpts& o, const Common& c) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  const auto z = parse_graph(read_file(o.graph));
  const auto opt = enum_options(o.e, c);
  json body = json::object();
  if (o.side == "both" || o.side == "left") body["left"] = expforge::to_json(measure_une(z, Side::left, opt));
  if (o.side == "both" || o.side == "right") body["right"] = expforge::to_json(measure_une(z, Side::right, opt));
  if (body.empty()) throw UsageError("--side must be left, right or both");
  return finish("certify-une", std::move(body), c);
}

int run_certify_triangles(const TriangleOpts& o, const Common& c) {
  if (o.complex.empty()) throw UsageError("--complex is required");
  const auto cx = parse_complex(read_file(o.complex));
  json body = {{"k", cx.k()}, {"faces", cx.face_count()}, {"vertices", cx.vertex_count()}};
  if (!o.u.empty()) body["count"] = expforge::to_json(triangle_face_count(cx, parse_index_list(o.u), o.q));
  if (o.q && cx.k() >= 3) body["exponents"] = expforge::to_json(tau_lambda_formulas(cx.k(), *o.q));
  if (!o.no_tau) body["tau"] = expforge::to_json(triangle_expander_tau(cx, enum_options(o.e, c)));
  return finish("certify-triangles", std::move(body), c);
}

int run_certify_skeleton(const SkeletonOpts& o, const Common& c) {
  const auto sb = load_structured(o.structured);
  const auto skel = skeletonize(sb, parse_side(o.side));
  json body = {{"vertices", skel.size()}, {"edges", skel.edge_count()}, {"spectral", expforge::to_json(top_eigenvalue(skel))}};
  std::vector<Assertion> asserted;
  if (!o.u.empty()) {
    const auto u = parse_index_list(o.u);
    for (auto v : u) {
      if (v >= skel.size()) throw UsageError("--u names vertex " + std::to_string(v) + " outside the skeleton");
    }
    const auto r = small_set_skeleton_lambda(skel, u);
    body["small_set"] = expforge::to_json(r);
    asserted.push_back({"interlacing: lambda(skel[U]) <= lambda_max(skel)", r.lambda_u <= r.lambda_max + 1e-9,
                        {{"U", u}, {"lambda_u", r.lambda_u}, {"lambda_max", r.lambda_max}}});
  }
  body["asserted"] = to_json(asserted);
  return finish("certify-skeleton", std::move(body), c, all_passed(asserted) ? kExitOk : kExitAssertion);
}

int run_eml(const EmlOpts& o, const Common& c) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  const auto g = parse_graph(read_file(o.graph));
  const auto spectral = bipartite_lambda2(g);
  const double lambda = o.lambda.value_or(spectral.lambda_2);
  Rng rng(o.seed);
  std::uint32_t contained = 0;
  json first_failure = nullptr;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::uint32_t t = 0; t < o.pairs; ++t) {
    const auto sa = static_cast<std::uint32_t>(uniform_below(rng, g.left_size() + 1ull));
    const auto sb = static_cast<std::uint32_t>(uniform_below(rng, g.right_size() + 1ull));
    const auto a = VertexSet::of(Side::left, sample_subset(rng, g.left_size(), sa));
    const auto b = VertexSet::of(Side::right, sample_subset(rng, g.right_size(), sb));
    const auto r = eml_bound(g, a, b, lambda);
    if (r.contained) {
      ++contained;
      min_margin = std::min(min_margin, std::min(r.actual - r.low, r.high - r.actual));
    } else if (first_failure.is_null()) {
      first_failure = {{"A", a.members}, {"B", b.members}, {"result", expforge::to_json(r)}};
    }
  }
  const auto dp = degree_product_check(g);
  std::vector<Assertion> asserted{
      {"expander mixing containment", contained == o.pairs, first_failure},
      {"(d1-1)(d2-1) <= lambda^2", dp.passed, expforge::to_json(dp)}};
  json body = {{"lambda", lambda},
               {"lambda_source", o.lambda ? "flag" : "second singular value"},
               {"spectral", expforge::to_json(spectral)},
               {"pairs", o.pairs},
               {"contained", contained},
               {"min_margin", std::isfinite(min_margin) ? json(min_margin) : json(nullptr)},
               {"seed", o.seed},
               {"degree_product", expforge::to_json(dp)},
               {"asserted", to_json(asserted)}};
  return finish("eml", std::move(body), c, all_passed(asserted) ? kExitOk : kExitAssertion);
}

int run_orient(const OrientOpts& o, const Common& c) {
  SymmetricGraph g;
  if (!o.structured.empty()) {
    g = skeletonize(load_structured(o.structured), parse_side(o.side));
  } else if (!o.graph.empty()) {
    g = skeletonize(parse_graph(read_file(o.graph)), parse_side(o.side));
  } else {
    throw UsageError("one of --structured or --graph is required");
  }
  const auto orient = bounded_outdegree_orientation(g);
  const auto spectral = top_eigenvalue(g);
  const auto bound = static_cast<std::uint32_t>(std::ceil(spectral.lambda_max - 1e-9));
  std::vector<Assertion> asserted{{"max outdegree <= ceil(lambda_max)", orient.max_out_degree <= bound,
                                   {{"max_out_degree", orient.max_out_degree}, {"bound", bound}}}};
  json body = {{"vertices", g.size()},
               {"edges", g.edge_count()},
               {"spectral", expforge::to_json(spectral)},
               {"orientation", expforge::to_json(orient)},
               {"asserted", to_json(asserted)}};
  return finish("orient", std::move(body), c, all_passed(asserted) ? kExitOk : kExitAssertion);
}

int run_validate_params(const ParamOpts& o, const Common& c) {
  if (o.k < 3) throw UsageError("--k must be at least 3");
  if (o.D.empty()) throw UsageError("--D (exponent of the base degree) is required");
  const auto formulas = tau_lambda_formulas(o.k, 2);
  ExponentInput in;
  in.k = o.k;
  in.tau = o.tau.empty() ? formulas.tau : parse_rational(o.tau);
  in.lambda = o.lambda.empty() ? formulas.lambda : parse_rational(o.lambda);
  in.D = parse_rational(o.D);
  in.s_min = o.s_min.empty() ? Rational(o.k - 1) : parse_rational(o.s_min);
  in.s_max = o.s_max.empty() ? Rational(o.k * o.k / 4) : parse_rational(o.s_max);
  if (!o.d.empty()) in.d = parse_rational(o.d);
  const auto rep = validate_parameter_exponents(in);
  json body = {{"input",
                {{"k", in.k},
                 {"tau", expforge::to_json(in.tau)},
                 {"lambda", expforge::to_json(in.lambda)},
                 {"D", expforge::to_json(in.D)},
                 {"s_min", expforge::to_json(in.s_min)},
                 {"s_max", expforge::to_json(in.s_max)},
                 {"d", in.d ? expforge::to_json(*in.d) : json(nullptr)}}},
               {"exponents", expforge::to_json(rep)}};
  if (o.q) {
    const double q = *o.q;
    auto at = [&](const Rational& e) { return std::pow(q, boost::rational_cast<double>(e)); };
    ParameterInput num;
    num.k = o.k;
    num.q = q;
    num.tau = at(in.tau);
    num.lambda = at(in.lambda);
    num.D = at(in.D);
    num.s_min = at(in.s_min);
    num.s_max = at(in.s_max);
    num.delta = o.delta.value_or(rep.x_witness ? std::pow(q, -boost::rational_cast<double>(*rep.x_witness)) : 1.0 / (2 * o.k));
    const double mid = at((rep.window_low + rep.window_high) / 2);
    num.d_left = o.d_left.value_or(in.d ? at(*in.d) : mid);
    num.d_right = o.d_right.value_or(num.d_left);
    body["numeric"] = expforge::to_json(validate_parameters(num));
    body["numeric"]["q"] = q;
    body["numeric"]["delta"] = num.delta;
  }
  return finish("validate-params", std::move(body), c);
}

}  // namespace expforge::cli
