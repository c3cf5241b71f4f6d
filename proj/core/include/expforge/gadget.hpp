#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expforge/bipartite.hpp"
#include "expforge/errors.hpp"

namespace expforge {

// Subsets of a universe [n] used as buckets. Buckets may overlap; the
// checks only need membership.
struct BucketFamily {
  std::uint32_t universe = 0;
  std::vector<std::vector<std::uint32_t>> buckets;

  std::uint32_t count() const noexcept { return static_cast<std::uint32_t>(buckets.size()); }
  // Throws DomainError on an empty family or an index >= universe.
  void validate() const;
};

// r contiguous buckets whose sizes differ by at most one.
BucketFamily equal_buckets(std::uint32_t universe, std::uint32_t r);

// Configuration model: left half-edges matched to a seeded uniform
// permutation of right half-edges. With `simple`, parallel edges are then
// removed by degree-preserving switches. Throws DomainError if
// D_L d_L != D_R d_R, ResourceError if switching stalls.
BipartiteMultigraph sample_biregular(std::uint32_t left, std::uint32_t right, std::uint32_t d_left,
                                     std::uint32_t d_right, std::uint64_t seed, bool simple = false);

struct CheckOptions {
  std::uint32_t size_cap = 8;  // largest |S|
  std::uint32_t w_cap = 8;     // recorded only: every admissible |W| is checked exactly
  std::uint64_t exhaustive_budget = 50'000'000;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct SizeEvidence {
  std::uint32_t size = 0;
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t evaluated = 0;
  double value = 0;
  std::vector<std::uint32_t> witness;
};

struct SpreadEvidence {
  std::uint32_t r = 0;
  std::uint32_t w_min = 0;
  std::uint32_t w_cap = 0;
  std::uint32_t size_cap = 0;
  double log_D = 0;
  bool bucket_sizes_in_window = true;
  bool vacuous = false;  // w_min > r: no admissible W exists
  std::string mode;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double worst_ratio = 0;
  std::vector<std::uint32_t> witness_s;
  std::vector<std::uint32_t> witness_w;
  std::vector<SizeEvidence> sizes;
  bool passed = false;
};

// max over S (1 <= |S| <= min(cap, D_R/d_L)) and W (|W| >= r ln D / d_L) of
// sum_{i in W} |N(S) ∩ A_i| / (32 |W| max{d_L |S| / r, ln D}), D = D_L + D_R.
// For fixed S and |W| the best W is the |W| fullest buckets, so W is exact.
SpreadEvidence check_bucket_spread(const BipartiteMultigraph& h, const BucketFamily& family, const CheckOptions& opt);

struct LosslessEvidence {
  double shrink = 0.9;
  double shrink_range = 0.1;
  std::uint32_t certified_max_size = 0;  // pass is judged on 1..this
  std::uint32_t size_cap = 0;
  std::string mode;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double min_ratio = 1;           // over every checked size
  double min_ratio_certified = 1;  // over the certified sizes
  std::vector<std::uint32_t> witness;
  std::vector<SizeEvidence> sizes;
  bool passed = false;
};

// min |N(S)| / (d_L |S|); passes iff it is >= shrink for every
// |S| <= max(1, floor(shrink_range D_R / d_L)).
LosslessEvidence check_lossless(const BipartiteMultigraph& h, double shrink, double shrink_range,
                                const CheckOptions& opt);

struct GadgetParams {
  std::uint32_t D_L = 0;
  std::uint32_t D_R = 0;
  std::uint32_t d_L = 0;
  std::uint32_t d_R = 0;
  BucketFamily right_family;  // on [D_R], for H
  BucketFamily left_family;   // on [D_L], for H^T
  CheckOptions checks;
  double shrink = 0.9;
  double shrink_range = 0.1;
  bool simple = true;
  std::uint64_t seed = 1;

  // Throws DomainError on a handshake violation or malformed families.
  void validate() const;
};

struct GadgetCertificate {
  GadgetParams params;
  BipartiteMultigraph gadget;
  std::uint32_t tries = 0;
  std::uint64_t sample_seed = 0;
  SpreadEvidence spread;
  LosslessEvidence lossless;
  SpreadEvidence spread_transpose;
  LosslessEvidence lossless_transpose;

  bool passed() const noexcept {
    return spread.passed && lossless.passed && spread_transpose.passed && lossless_transpose.passed;
  }
};

struct TryRecord {
  std::uint32_t attempt = 0;
  std::uint64_t sample_seed = 0;
  double spread = 0;
  double lossless = 0;
  double spread_transpose = 0;
  double lossless_transpose = 0;
  bool passed = false;
};

class GadgetSearchFailure : public ResourceError {
 public:
  GadgetSearchFailure(const std::string& what, std::vector<TryRecord> tries)
      : ResourceError(what), tries_(std::move(tries)) {}
  const std::vector<TryRecord>& tries() const noexcept { return tries_; }

 private:
  std::vector<TryRecord> tries_;
};

// Checks H and H^T; the check seed of every property is params.checks.seed.
GadgetCertificate certify_gadget(const GadgetParams& params, BipartiteMultigraph gadget);

// Samples with seeds mix_seed(params.seed, attempt) until all four checks
// pass. Throws GadgetSearchFailure after max_tries.
GadgetCertificate search_good_gadget(const GadgetParams& params, std::uint32_t max_tries);

// Re-runs the checks on the stored gadget; true iff every worst ratio
// matches bit for bit.
bool replay_certificate(const GadgetCertificate& cert);

// max(0, d1 (1-p)^{s-1} - sqrt(4 p (1-p)^{s-1} n1 ln n1)).
double un_lower_bound_formula(double d1, double p, std::uint32_t n1, std::uint32_t s);

}  // namespace expforge
