#include <algorithm>
#include <cmath>
#include <filesystem>

#include "cli_util.hpp"
#include "commands.hpp"
#include "expforge/cayley.hpp"
#include "expforge/certify.hpp"
#include "expforge/formats.hpp"
#include "expforge/grassmann.hpp"
#include "expforge/parallel.hpp"
#include "expforge/product.hpp"
#include "expforge/report_json.hpp"
#include "expforge/rng.hpp"

namespace expforge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Salts for the seeded stages.
enum : std::uint64_t { kSaltGadget = 1, kSaltChecks, kSaltUne, kSaltCollisions, kSaltEml, kSaltInterlace };

template <class T>
T field(const json& obj, const char* key, T fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config field '") + key + "' has the wrong type");
  }
}

json section(const json& cfg, const char* key) {
  if (!cfg.contains(key)) return json::object();
  if (!cfg.at(key).is_object()) throw UsageError(std::string("config section '") + key + "' must be an object");
  return cfg.at(key);
}

double required_positive(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key)) throw UsageError(std::string(where) + "." + key + " is required");
  const auto v = field<double>(obj, key, 0);
  if (!(v > 0)) throw UsageError(std::string(where) + "." + key + " must be positive");
  return v;
}

std::string resolve(const fs::path& dir, const json& base, const char* key) {
  const auto rel = field<std::string>(base, key, "");
  if (rel.empty()) throw UsageError(std::string("base.") + key + " is required");
  const fs::path p = fs::path(rel).is_absolute() ? fs::path(rel) : dir / rel;
  if (!fs::exists(p)) throw UsageError("base." + std::string(key) + " names a missing file: " + p.string());
  return p.string();
}

struct Base {
  StructuredBipartite sb;
  CliqueComplex complex;
  json summary;
};

Base load_base(const json& b, const fs::path& dir) {
  const auto type = field<std::string>(b, "type", "");
  Base out;
  if (type == "complete") {
    out.complex = complete_partite_complex(field<std::uint32_t>(b, "k", 0), field<std::uint32_t>(b, "part", 0));
    out.sb = incidence_graph(out.complex);
  } else if (type == "building") {
    out.complex = building_complex(field<std::uint32_t>(b, "k", 0), field<std::uint32_t>(b, "q", 0)).flags;
    out.sb = incidence_graph(out.complex);
  } else if (type == "complex") {
    out.complex = parse_complex(read_file(resolve(dir, b, "complex")));
    out.sb = incidence_graph(out.complex);
  } else if (type == "cayley") {
    CayleySpec spec{parse_group(read_file(resolve(dir, b, "group"))), parse_generators(read_file(resolve(dir, b, "gens")))};
    if (const auto bad = check_group_axioms(spec.group)) throw UsageError("base.group: " + *bad);
    validate_cayley_spec(spec);
    auto gens = face_generators(spec);
    if (const auto degree = field<std::uint32_t>(b, "degree", 0)) {
      gens = truncate_to_degree(equivalence_classes(gens, spec), degree);
    }
    const auto cc = build_cayley_complex(spec, std::move(gens));
    out.complex = cc.complex;
    out.sb = cayley_incidence_graph(cc);
  } else {
    throw UsageError("base.type must be complete, building, complex or cayley");
  }
  out.summary = b;
  out.summary["k"] = out.sb.k;
  out.summary["D"] = out.sb.D;
  out.summary["faces"] = out.sb.face_count();
  out.summary["middle"] = out.sb.middle_size();
  out.summary["structured"] = expforge::to_json(verify_structured(out.sb));
  return out;
}

// Every middle vertex must feed a gadget side of size D.
void require_uniform_middle(const StructuredBipartite& sb) {
  for (std::uint32_t u = 0; u < sb.middle_size(); ++u) {
    if (sb.nbr(u).size() != sb.D) {
      throw UsageError("middle vertex " + std::to_string(u) + " has degree " + std::to_string(sb.nbr(u).size()) +
                       ", the line product needs every middle degree equal to " + std::to_string(sb.D));
    }
  }
}

std::vector<std::uint32_t> random_subset(Rng& rng, std::uint32_t n, std::uint32_t cap) {
  const auto top = std::min(cap, n);
  const auto size = 1 + static_cast<std::uint32_t>(uniform_below(rng, top));
  return sample_subset(rng, n, size);
}

struct CollisionTally {
  std::uint32_t runs = 0;
  std::uint32_t blue_matches = 0;
  std::uint32_t skeleton_ok = 0;
  std::uint32_t multiplicity_ok = 0;
  std::uint32_t identity_ok = 0;
  std::uint64_t collision_edges = 0;
  std::uint64_t saturated = 0;
  std::optional<double> min_low_ratio;
  json first_failure = nullptr;
};

void tally(CollisionTally& t, const CollisionReport& r, const LowEdgeDiagnostic& d) {
  ++t.runs;
  t.blue_matches += r.blue_unique_matches;
  t.skeleton_ok += r.skeleton_subgraph;
  t.multiplicity_ok += r.multiplicity_violations == 0;
  t.identity_ok += d.identity_holds;
  t.collision_edges += r.collisions.size();
  t.saturated += r.saturated.size();
  if (d.ratio) t.min_low_ratio = t.min_low_ratio ? std::min(*t.min_low_ratio, *d.ratio) : *d.ratio;
  const bool ok = r.blue_unique_matches && r.skeleton_subgraph && r.multiplicity_violations == 0 && d.identity_holds;
  if (!ok && t.first_failure.is_null()) t.first_failure = {{"report", expforge::to_json(r)}, {"low_edges", expforge::to_json(d)}};
}

json tally_json(const CollisionTally& t) {
  return {{"runs", t.runs},
          {"blue_unique_matches", t.blue_matches},
          {"skeleton_subgraph", t.skeleton_ok},
          {"multiplicity_within_mass", t.multiplicity_ok},
          {"low_high_identity", t.identity_ok},
          {"collision_edges", t.collision_edges},
          {"saturated_vertices", t.saturated},
          {"min_low_edge_ratio", t.min_low_ratio ? json(*t.min_low_ratio) : json(nullptr)}};
}

json eml_sweep(const BipartiteMultigraph& g, double lambda, std::uint32_t pairs, std::uint64_t seed, Assertion& out) {
  Rng rng(seed);
  std::uint32_t contained = 0;
  json failure = nullptr;
  for (std::uint32_t t = 0; t < pairs; ++t) {
    const auto a = VertexSet::of(Side::left, sample_subset(rng, g.left_size(), static_cast<std::uint32_t>(uniform_below(rng, g.left_size() + 1ull))));
    const auto b = VertexSet::of(Side::right, sample_subset(rng, g.right_size(), static_cast<std::uint32_t>(uniform_below(rng, g.right_size() + 1ull))));
    const auto r = eml_bound(g, a, b, lambda);
    if (r.contained) {
      ++contained;
    } else if (failure.is_null()) {
      failure = {{"A", a.members}, {"B", b.members}, {"result", expforge::to_json(r)}};
    }
  }
  out.passed = contained == pairs;
  out.witness = failure;
  return {{"lambda", lambda}, {"pairs", pairs}, {"contained", contained}};
}

}  // namespace

int run_pipeline(const PipelineOpts& o, const Common& c) {
  if (o.config.empty()) throw UsageError("--config is required");
  if (o.out.empty()) throw UsageError("--out is required");
  const auto cfg = read_json(o.config);
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  if (!cfg.contains("seed") || !cfg.at("seed").is_number_unsigned()) {
    throw UsageError("config.seed is required (a non-negative integer)");
  }
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const auto workers = resolve_workers(c.workers);
  const auto dir = fs::path(o.config).parent_path();

  const auto gadget_cfg = section(cfg, "gadget");
  const auto product_cfg = section(cfg, "product");
  const auto certify_cfg = section(cfg, "certify");
  const double tau = required_positive(product_cfg, "tau", "product");
  const double delta = required_positive(product_cfg, "delta", "product");
  const double lambda = required_positive(product_cfg, "lambda", "product");

  auto base = load_base(section(cfg, "base"), dir);
  require_uniform_middle(base.sb);
  const auto D = base.sb.D;

  // Gadget.
  GadgetParams p;
  p.D_L = D;
  p.D_R = D;
  p.d_L = field<std::uint32_t>(gadget_cfg, "d_L", 0);
  p.d_R = field<std::uint32_t>(gadget_cfg, "d_R", p.d_L);
  const auto buckets = field<std::uint32_t>(gadget_cfg, "buckets", 1);
  if (buckets == 0 || buckets > D) throw UsageError("gadget.buckets must lie in [1, D] with D = " + std::to_string(D));
  p.right_family = equal_buckets(D, buckets);
  p.left_family = equal_buckets(D, buckets);
  p.checks.size_cap = field<std::uint32_t>(gadget_cfg, "size_cap", 4);
  p.checks.w_cap = field<std::uint32_t>(gadget_cfg, "w_cap", 4);
  p.checks.exhaustive_budget = field<std::uint64_t>(gadget_cfg, "budget", 5'000'000);
  p.checks.samples = field<std::uint64_t>(gadget_cfg, "samples", 2000);
  p.checks.seed = mix_seed(seed, kSaltChecks);
  p.checks.workers = workers;
  p.shrink = field<double>(gadget_cfg, "shrink", 0.9);
  p.shrink_range = field<double>(gadget_cfg, "shrink_range", 0.1);
  p.simple = field<bool>(gadget_cfg, "simple", true);
  p.seed = mix_seed(seed, kSaltGadget);
  p.validate();
  const auto max_tries = field<std::uint32_t>(gadget_cfg, "max_tries", 20);

  json gadget_doc;
  json gadget_summary;
  BipartiteMultigraph gadget;
  try {
    const auto cert = search_good_gadget(p, max_tries);
    gadget = cert.gadget;
    gadget_doc = make_report("gadget-certificate", expforge::to_json(cert));
    gadget_summary = {{"certified", true},
                      {"spread", cert.spread.worst_ratio},
                      {"lossless", cert.lossless.min_ratio_certified},
                      {"spread_transpose", cert.spread_transpose.worst_ratio},
                      {"lossless_transpose", cert.lossless_transpose.min_ratio_certified}};
  } catch (const GadgetSearchFailure& f) {
    // Carry on with an uncertified sample; the product still composes.
    gadget = sample_biregular(D, D, p.d_L, p.d_R, mix_seed(p.seed, 0), p.simple);
    auto tries = json::array();
    for (const auto& t : f.tries()) tries.push_back(expforge::to_json(t));
    gadget_doc = make_report("gadget-uncertified", {{"graph", write_graph(gadget)}, {"tries", tries}});
    gadget_summary = {{"certified", false}, {"tries", f.tries().size()}};
  }

  // Product.
  const auto inst = line_product(base.sb, base.sb, gadget);
  std::vector<Assertion> asserted;
  asserted.push_back({"Z degrees are (k d_L, k d_R)", inst.degrees.passed(), expforge::to_json(inst.degrees)});

  // Certification.
  EnumerationOptions eo;
  eo.size_cap = field<std::uint32_t>(certify_cfg, "size_cap", 4);
  eo.exhaustive_budget = field<std::uint64_t>(certify_cfg, "budget", 2'000'000);
  eo.samples = field<std::uint64_t>(certify_cfg, "samples", 2000);
  eo.seed = mix_seed(seed, kSaltUne);
  eo.workers = workers;
  const auto une_left = measure_une(inst.z, Side::left, eo);
  const auto une_right = measure_une(inst.z, Side::right, eo);

  const auto samples = field<std::uint32_t>(certify_cfg, "collision_samples", 100);
  CollisionTally left_tally, right_tally;
  Rng crng(mix_seed(seed, kSaltCollisions));
  for (std::uint32_t t = 0; t < samples; ++t) {
    const auto side = t % 2 ? Side::right : Side::left;
    const auto s = VertexSet::of(side, random_subset(crng, inst.z.size(side), eo.size_cap));
    const auto r = analyze_collisions(inst, s, tau, delta, lambda);
    tally(side == Side::left ? left_tally : right_tally, r, edges_into_low_diagnostic(r, base.sb.k, delta));
  }
  for (const auto* t : {&left_tally, &right_tally}) {
    const auto n = t->runs;
    const char* where = t == &left_tally ? " (S in L)" : " (S in R)";
    asserted.push_back({std::string("blue unique count equals |UN_Z(S)|") + where, t->blue_matches == n, t->first_failure});
    asserted.push_back({std::string("collision graph inside skeleton of G_R") + where, t->skeleton_ok == n, t->first_failure});
    asserted.push_back({std::string("collision multiplicity within special-set mass") + where, t->multiplicity_ok == n, t->first_failure});
    asserted.push_back({std::string("e_low + e_high = k|S|") + where, t->identity_ok == n, t->first_failure});
  }

  const auto skel = skeletonize(base.sb, Side::right);
  const auto skel_spec = top_eigenvalue(skel);
  const auto orient = bounded_outdegree_orientation(skel);
  const auto bound = static_cast<std::uint32_t>(std::ceil(skel_spec.lambda_max - 1e-9));
  asserted.push_back({"max outdegree <= ceil(lambda_max) on the middle skeleton", orient.max_out_degree <= bound,
                      {{"max_out_degree", orient.max_out_degree}, {"bound", bound}}});

  const auto base_dp = degree_product_check(base.sb.graph);
  asserted.push_back({"(d1-1)(d2-1) <= lambda^2 on the base", base_dp.passed, expforge::to_json(base_dp)});
  const auto z_dp = degree_product_check(inst.z);
  asserted.push_back({"(d1-1)(d2-1) <= lambda^2 on Z", z_dp.passed, expforge::to_json(z_dp)});

  const auto eml_pairs = field<std::uint32_t>(certify_cfg, "eml_pairs", 200);
  const auto base_spec = bipartite_lambda2(base.sb.graph);
  const auto z_spec = bipartite_lambda2(inst.z);
  Assertion eml_base{"expander mixing containment on the base"}, eml_z{"expander mixing containment on Z"};
  const auto eml_base_json = eml_sweep(base.sb.graph, base_spec.lambda_2, eml_pairs, mix_seed(seed, kSaltEml), eml_base);
  const auto eml_z_json = eml_sweep(inst.z, z_spec.lambda_2, eml_pairs, mix_seed(seed, kSaltEml + 100), eml_z);
  asserted.push_back(eml_base);
  asserted.push_back(eml_z);

  Rng irng(mix_seed(seed, kSaltInterlace));
  const auto u = random_subset(irng, skel.size(), std::max<std::uint32_t>(1, skel.size() / 4));
  const auto small = small_set_skeleton_lambda(skel, u);
  asserted.push_back({"lambda(skel[U]) <= lambda_max(skel)", small.lambda_u <= small.lambda_max + 1e-9,
                      {{"U", u}, {"lambda_u", small.lambda_u}, {"lambda_max", small.lambda_max}}});

  json report_body = {
      {"seed", seed},
      {"base", base.summary},
      {"gadget", gadget_summary},
      {"product",
       {{"tau", tau},
        {"delta", delta},
        {"lambda", lambda},
        {"z", {{"left", inst.z.left_size()}, {"right", inst.z.right_size()}, {"edges", inst.z.edge_count()}}},
        {"degrees", expforge::to_json(inst.degrees)}}},
      {"certify",
       {{"une", {{"left", expforge::to_json(une_left)}, {"right", expforge::to_json(une_right)}}},
        {"collisions", {{"left", tally_json(left_tally)}, {"right", tally_json(right_tally)}}},
        {"skeleton", {{"spectral", expforge::to_json(skel_spec)}, {"orientation_max_out", orient.max_out_degree}, {"small_set", expforge::to_json(small)}}},
        {"degree_product", {{"base", expforge::to_json(base_dp)}, {"z", expforge::to_json(z_dp)}}},
        {"eml", {{"base", eml_base_json}, {"z", eml_z_json}}}}},
      {"artifacts", {{"base", "base.json"}, {"gadget", "gadget.json"}, {"z", "z.bgf"}}},
      {"asserted", to_json(asserted)},
      {"passed", all_passed(asserted)}};

  fs::create_directories(o.out);
  const fs::path out(o.out);
  emit(make_report("base", expforge::to_json(base.sb)), (out / "base.json").string());
  emit(gadget_doc, (out / "gadget.json").string());
  write_file((out / "z.bgf").string(), write_graph(inst.z));
  const auto report = make_report("pipeline", std::move(report_body));
  emit(report, (out / "report.json").string());
  if (!c.report.empty()) emit(report, c.report);
  return all_passed(asserted) ? kExitOk : kExitAssertion;
}

}  // namespace expforge::cli
