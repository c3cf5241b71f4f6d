#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace expforge::cli {

struct Common {
  std::string report;  // empty: stdout
  unsigned workers = 0;
};

struct BuildingOpts {
  std::uint32_t k = 3, q = 2, i = 1, j = 2;
  std::string out;
  std::string complex_out;
};

struct CayleyOpts {
  std::string group, gens, out, generators_out;
  std::uint64_t cap = 0;
};

struct IncidenceOpts {
  std::string complex, group, gens, face_gens, out;
};

struct TruncateOpts {
  std::string group, gens, out;
  std::uint32_t degree = 0;
};

struct GadgetOpts {
  std::uint32_t D_L = 0, D_R = 0, d_L = 0, d_R = 0;
  std::uint32_t buckets = 1, left_buckets = 0;
  std::uint32_t size_cap = 8, w_cap = 8, max_tries = 20;
  std::uint64_t budget = 50'000'000, samples = 2000, seed = 0;
  double shrink = 0.9, shrink_range = 0.1;
  bool multigraph = false;
  std::string out;
};

struct LineProductOpts {
  std::string left, right, gadget, out;
};

struct EnumOpts {
  std::uint32_t size_cap = 4;
  std::uint64_t budget = 2'000'000, samples = 2000, seed = 1;
};

struct UneOpts {
  std::string graph, side = "both";
  EnumOpts e;
};

struct TriangleOpts {
  std::string complex, u;
  std::optional<std::uint64_t> q;
  EnumOpts e;
  bool no_tau = false;
};

struct SkeletonOpts {
  std::string structured, side = "right", u;
};

struct EmlOpts {
  std::string graph;
  std::uint32_t pairs = 500;
  std::uint64_t seed = 1;
  std::optional<double> lambda;
};

struct OrientOpts {
  std::string graph, structured, side = "right";
};

struct ParamOpts {
  std::uint32_t k = 0;
  std::string tau, lambda, D, s_min, s_max, d;
  std::optional<double> q, delta, d_left, d_right;
};

struct PipelineOpts {
  std::string config, out;
};

int run_building(const BuildingOpts& o, const Common& c);
int run_cayley(const CayleyOpts& o, const Common& c);
int run_incidence(const IncidenceOpts& o, const Common& c);
int run_truncate(const TruncateOpts& o, const Common& c);
int run_gadget_search(const GadgetOpts& o, const Common& c);
int run_line_product(const LineProductOpts& o, const Common& c);
int run_certify_une(const UneOpts& o, const Common& c);
int run_certify_triangles(const TriangleOpts& o, const Common& c);
int run_certify_skeleton(const SkeletonOpts& o, const Common& c);
int run_eml(const EmlOpts& o, const Common& c);
int run_orient(const OrientOpts& o, const Common& c);
int run_validate_params(const ParamOpts& o, const Common& c);
int run_pipeline(const PipelineOpts& o, const Common& c);

}  // namespace expforge::cli
