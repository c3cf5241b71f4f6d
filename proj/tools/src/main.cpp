#include <iostream>

#include <CLI11.hpp>

#include "cli_util.hpp"
#include "commands.hpp"
#include "expforge/errors.hpp"

using namespace expforge::cli;

namespace {

void add_enum(CLI::App* sub, EnumOpts& e) {
  sub->add_option("--size-cap", e.size_cap, "largest set size")->capture_default_str();
  sub->add_option("--budget", e.budget, "subsets per size before sampling")->capture_default_str();
  sub->add_option("--samples", e.samples, "random subsets per sampled size")->capture_default_str();
  sub->add_option("--seed", e.seed, "sampling seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expforge: unique-neighbor expanders from the tripartite line product"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--report", common.report, "write the JSON report here instead of stdout");
  app.add_option("--workers", common.workers, "worker threads (default: EXPFORGE_WORKERS or hardware)");

  BuildingOpts building;
  auto* sb = app.add_subcommand("building", "incidence graph between i- and j-dimensional subspaces of F_q^k");
  sb->add_option("--k", building.k)->capture_default_str();
  sb->add_option("--q", building.q)->capture_default_str();
  sb->add_option("--i", building.i)->capture_default_str();
  sb->add_option("--j", building.j)->capture_default_str();
  sb->add_option("--out", building.out, "BGF output");
  sb->add_option("--complex-out", building.complex_out, "flag complex as CXF");

  CayleyOpts cayley;
  auto* sc = app.add_subcommand("cayley", "Cayley complex from a group table and generator parts");
  sc->add_option("--group", cayley.group, "GTF file")->required();
  sc->add_option("--gens", cayley.gens, "generator parts file")->required();
  sc->add_option("--out", cayley.out, "CXF output");
  sc->add_option("--generators-out", cayley.generators_out, "face generators as JSON");
  sc->add_option("--cap", cayley.cap, "enumeration cap");

  IncidenceOpts incidence;
  auto* si = app.add_subcommand("incidence", "structured bipartite graph (faces vs vertices)");
  si->add_option("--complex", incidence.complex, "CXF input");
  si->add_option("--group", incidence.group, "GTF file (Cayley input)");
  si->add_option("--gens", incidence.gens, "generator parts file (Cayley input)");
  si->add_option("--face-gens", incidence.face_gens, "JSON with a \"generators\" list (truncated complex)");
  si->add_option("--out", incidence.out, "structured JSON output");

  TruncateOpts truncate;
  auto* st = app.add_subcommand("truncate", "pick face generator classes summing to a target degree");
  st->add_option("--group", truncate.group)->required();
  st->add_option("--gens", truncate.gens)->required();
  st->add_option("--degree", truncate.degree)->required();
  st->add_option("--out", truncate.out, "JSON with a \"generators\" list");

  GadgetOpts gadget;
  auto* sg = app.add_subcommand("gadget-search", "sample and certify a biregular gadget");
  sg->add_option("--D-L", gadget.D_L)->required();
  sg->add_option("--D-R", gadget.D_R)->required();
  sg->add_option("--d-L", gadget.d_L)->required();
  sg->add_option("--d-R", gadget.d_R)->required();
  sg->add_option("--buckets", gadget.buckets, "buckets on the right side")->capture_default_str();
  sg->add_option("--left-buckets", gadget.left_buckets, "buckets on the left side (default: --buckets)");
  sg->add_option("--size-cap", gadget.size_cap)->capture_default_str();
  sg->add_option("--w-cap", gadget.w_cap)->capture_default_str();
  sg->add_option("--max-tries", gadget.max_tries)->capture_default_str();
  sg->add_option("--budget", gadget.budget)->capture_default_str();
  sg->add_option("--samples", gadget.samples)->capture_default_str();
  sg->add_option("--seed", gadget.seed)->required();
  sg->add_option("--shrink", gadget.shrink)->capture_default_str();
  sg->add_option("--shrink-range", gadget.shrink_range)->capture_default_str();
  sg->add_flag("--multigraph", gadget.multigraph, "allow parallel edges");
  sg->add_option("--out", gadget.out, "certificate JSON");

  LineProductOpts lp;
  auto* sl = app.add_subcommand("line-product", "compose two structured graphs through a gadget");
  sl->add_option("--left", lp.left, "structured JSON for G_L")->required();
  sl->add_option("--right", lp.right, "structured JSON for G_R (default: --left)");
  sl->add_option("--gadget", lp.gadget, "BGF or certificate JSON")->required();
  sl->add_option("--out", lp.out, "BGF output for Z");

  UneOpts une;
  auto* su = app.add_subcommand("certify-une", "unique-neighbor profile of a bipartite graph");
  su->add_option("--graph", une.graph, "BGF input")->required();
  su->add_option("--side", une.side, "left, right or both")->capture_default_str();
  add_enum(su, une.e);

  TriangleOpts tri;
  auto* sr = app.add_subcommand("certify-triangles", "faces meeting a vertex set in three or more parts");
  sr->add_option("--complex", tri.complex, "CXF input")->required();
  sr->add_option("--u", tri.u, "vertex list, e.g. 0,3,5");
  sr->add_option("--q", tri.q, "field size, adds the reference exponent");
  sr->add_flag("--no-tau", tri.no_tau, "skip the tau search");
  add_enum(sr, tri.e);

  SkeletonOpts skel;
  auto* sk = app.add_subcommand("certify-skeleton", "skeleton spectrum and small-set eigenvalue");
  sk->add_option("--structured", skel.structured, "structured JSON")->required();
  sk->add_option("--side", skel.side, "left (faces) or right (middle)")->capture_default_str();
  sk->add_option("--u", skel.u, "vertex list for the small-set check");

  EmlOpts eml;
  auto* se = app.add_subcommand("eml", "expander mixing containment on random pairs");
  se->add_option("--graph", eml.graph, "BGF input")->required();
  se->add_option("--pairs", eml.pairs)->capture_default_str();
  se->add_option("--seed", eml.seed)->capture_default_str();
  se->add_option("--lambda", eml.lambda, "override the second singular value");

  OrientOpts orient;
  auto* so = app.add_subcommand("orient", "peeling orientation of a skeleton");
  so->add_option("--structured", orient.structured, "structured JSON");
  so->add_option("--graph", orient.graph, "BGF input");
  so->add_option("--side", orient.side)->capture_default_str();

  ParamOpts params;
  auto* sp = app.add_subcommand("validate-params", "degree window from base exponents");
  sp->add_option("--k", params.k)->required();
  sp->add_option("--D", params.D, "exponent of the base degree")->required();
  sp->add_option("--tau", params.tau, "exponent (default: closed form)");
  sp->add_option("--lambda", params.lambda, "exponent (default: closed form)");
  sp->add_option("--s-min", params.s_min, "exponent (default: k-1)");
  sp->add_option("--s-max", params.s_max, "exponent (default: floor(k^2/4))");
  sp->add_option("--d", params.d, "gadget degree exponent to test");
  sp->add_option("--q", params.q, "evaluate numerically at this q");
  sp->add_option("--delta", params.delta);
  sp->add_option("--d-left", params.d_left);
  sp->add_option("--d-right", params.d_right);

  PipelineOpts pipeline;
  auto* sq = app.add_subcommand("pipeline", "base, gadget, product and certification from one config");
  sq->add_option("--config", pipeline.config, "JSON config")->required();
  sq->add_option("--out", pipeline.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (sb->parsed()) return run_building(building, common);
    if (sc->parsed()) return run_cayley(cayley, common);
    if (si->parsed()) return run_incidence(incidence, common);
    if (st->parsed()) return run_truncate(truncate, common);
    if (sg->parsed()) return run_gadget_search(gadget, common);
    if (sl->parsed()) return run_line_product(lp, common);
    if (su->parsed()) return run_certify_une(une, common);
    if (sr->parsed()) return run_certify_triangles(tri, common);
    if (sk->parsed()) return run_certify_skeleton(skel, common);
    if (se->parsed()) return run_eml(eml, common);
    if (so->parsed()) return run_orient(orient, common);
    if (sp->parsed()) return run_validate_params(params, common);
    if (sq->parsed()) return run_pipeline(pipeline, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const expforge::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const expforge::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
