#include "expforge/gadget.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "expforge/rng.hpp"
#include "subset_walk.hpp"

namespace expforge {

void BucketFamily::validate() const {
  if (buckets.empty()) throw DomainError("bucket family is empty");
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    for (auto x : buckets[i]) {
      if (x >= universe) {
        throw DomainError("bucket " + std::to_string(i) + " holds " + std::to_string(x) + " outside [" +
                          std::to_string(universe) + "]");
      }
    }
  }
}

BucketFamily equal_buckets(std::uint32_t universe, std::uint32_t r) {
  if (r == 0 || r > universe) throw DomainError("need 1 <= r <= universe for equal buckets");
  BucketFamily f;
  f.universe = universe;
  f.buckets.resize(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    const auto lo = static_cast<std::uint32_t>(static_cast<std::uint64_t>(universe) * i / r);
    const auto hi = static_cast<std::uint32_t>(static_cast<std::uint64_t>(universe) * (i + 1) / r);
    for (auto x = lo; x < hi; ++x) f.buckets[i].push_back(x);
  }
  return f;
}

BipartiteMultigraph sample_biregular(std::uint32_t left, std::uint32_t right, std::uint32_t d_left,
                                     std::uint32_t d_right, std::uint64_t seed, bool simple) {
  if (static_cast<std::uint64_t>(left) * d_left != static_cast<std::uint64_t>(right) * d_right) {
    throw DomainError("handshake violated: " + std::to_string(left) + "*" + std::to_string(d_left) +
                      " != " + std::to_string(right) + "*" + std::to_string(d_right));
  }
  if (simple && (d_left > right || d_right > left)) throw DomainError("no simple graph with these degrees");
  const std::size_t m = static_cast<std::size_t>(left) * d_left;
  Rng rng(seed);
  std::vector<std::uint32_t> stubs(m);
  for (std::size_t e = 0; e < m; ++e) stubs[e] = static_cast<std::uint32_t>(e / d_right);
  shuffle_in_place(stubs, rng);
  std::vector<BipartiteMultigraph::Edge> edges(m);
  for (std::size_t e = 0; e < m; ++e) edges[e] = {static_cast<std::uint32_t>(e / d_left), stubs[e]};

  if (simple && m > 0) {
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> present;
    for (const auto& e : edges) present.emplace(e.left, e.right);
    auto count = [&](std::uint32_t l, std::uint32_t r) { return present.count({l, r}); };
    const std::uint64_t max_attempts = 1000ull * m + 10000;
    std::uint64_t attempts = 0;
    // Swaps the right ends of edges e and f if that creates no parallel edge.
    auto try_switch = [&](std::size_t e, std::size_t f) {
      const auto [l1, r1] = edges[e];
      const auto [l2, r2] = edges[f];
      if (l1 == l2 || r1 == r2 || count(l1, r2) > 0 || count(l2, r1) > 0) return false;
      present.erase(present.find({l1, r1}));
      present.erase(present.find({l2, r2}));
      present.emplace(l1, r2);
      present.emplace(l2, r1);
      edges[e].right = r2;
      edges[f].right = r1;
      return true;
    };
    for (std::size_t e = 0; e < m; ++e) {
      std::uint32_t misses = 0;
      while (count(edges[e].left, edges[e].right) > 1) {
        if (++attempts > max_attempts) throw ResourceError("could not remove parallel edges by switching");
        if (try_switch(e, static_cast<std::size_t>(uniform_below(rng, m)))) continue;
        // Dense cases can leave e without a partner; stir elsewhere and retry.
        if (++misses % 64 == 0) {
          try_switch(static_cast<std::size_t>(uniform_below(rng, m)), static_cast<std::size_t>(uniform_below(rng, m)));
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return BipartiteMultigraph(left, right, std::move(edges));
}

namespace {

std::string mode_of(const std::vector<detail::SizeResult>& res) {
  bool ex = false;
  bool sa = false;
  for (const auto& r : res) (r.exhaustive ? ex : sa) = true;
  if (ex && sa) return "mixed";
  return sa ? "sampled" : "exhaustive";
}

std::vector<SizeEvidence> to_evidence(const std::vector<detail::SizeResult>& res) {
  std::vector<SizeEvidence> out;
  for (const auto& r : res) {
    if (!r.found) continue;
    out.push_back({r.size, r.exhaustive ? "exhaustive" : "sampled", r.evaluated, r.value, r.witness});
  }
  return out;
}

std::uint32_t uniform_degree(const BipartiteMultigraph& h, Side side) {
  const auto n = h.size(side);
  if (n == 0) throw DomainError("gadget side is empty");
  const auto d = h.degree(side, 0);
  for (std::uint32_t v = 1; v < n; ++v) {
    if (h.degree(side, v) != d) throw DomainError("gadget is not biregular");
  }
  return static_cast<std::uint32_t>(d);
}

// Distinct neighbors of the current S, counted per bucket.
class SpreadState {
 public:
  SpreadState(const BipartiteMultigraph& h, const BucketFamily& f, std::uint32_t d_left, std::uint32_t w_min,
              double log_d)
      : h_(&h), d_left_(d_left), w_min_(w_min), log_d_(log_d), hits_(h.right_size(), 0), in_bucket_(f.count(), 0) {
    member_offsets_.assign(static_cast<std::size_t>(f.universe) + 1, 0);
    for (const auto& b : f.buckets) {
      for (auto x : b) ++member_offsets_[x + 1];
    }
    for (std::uint32_t x = 0; x < f.universe; ++x) member_offsets_[x + 1] += member_offsets_[x];
    members_.resize(member_offsets_.back());
    auto pos = member_offsets_;
    for (std::uint32_t i = 0; i < f.count(); ++i) {
      for (auto x : f.buckets[i]) members_[pos[x]++] = i;
    }
    scratch_.resize(f.count());
  }

  void add(std::uint32_t v) {
    for (auto r : h_->left_neighbors(v)) {
      if (hits_[r]++ == 0) bump(r, +1);
    }
  }
  void remove(std::uint32_t v) {
    for (auto r : h_->left_neighbors(v)) {
      if (--hits_[r] == 0) bump(r, -1);
    }
  }
  double score(std::size_t s) { return best(s, nullptr); }
  std::vector<std::uint32_t> detail(std::size_t s) {
    std::vector<std::uint32_t> w;
    best(s, &w);
    return w;
  }

 private:
  void bump(std::uint32_t r, int by) {
    for (auto i = member_offsets_[r]; i < member_offsets_[r + 1]; ++i) in_bucket_[members_[i]] += by;
  }

  double best(std::size_t s, std::vector<std::uint32_t>* w_out) {
    const auto r = static_cast<std::uint32_t>(in_bucket_.size());
    std::iota(scratch_.begin(), scratch_.end(), 0u);
    std::sort(scratch_.begin(), scratch_.end(), [&](std::uint32_t a, std::uint32_t b) {
      return in_bucket_[a] != in_bucket_[b] ? in_bucket_[a] > in_bucket_[b] : a < b;
    });
    const double scale = std::max(static_cast<double>(d_left_) * static_cast<double>(s) / r, log_d_);
    double worst = 0;
    std::uint32_t worst_w = 0;
    std::int64_t prefix = 0;
    for (std::uint32_t w = 1; w <= r; ++w) {
      prefix += in_bucket_[scratch_[w - 1]];
      if (w < w_min_) continue;
      const double ratio = static_cast<double>(prefix) / (32.0 * w * scale);
      if (worst_w == 0 || ratio > worst) {
        worst = ratio;
        worst_w = w;
      }
    }
    if (w_out) {
      w_out->assign(scratch_.begin(), scratch_.begin() + worst_w);
      std::sort(w_out->begin(), w_out->end());
    }
    return worst;
  }

  const BipartiteMultigraph* h_;
  std::uint32_t d_left_;
  std::uint32_t w_min_;
  double log_d_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::int64_t> in_bucket_;
  std::vector<std::uint32_t> member_offsets_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> scratch_;
};

class LosslessState {
 public:
  LosslessState(const BipartiteMultigraph& h, std::uint32_t d_left)
      : h_(&h), d_left_(d_left), hits_(h.right_size(), 0) {}
  void add(std::uint32_t v) {
    for (auto r : h_->left_neighbors(v)) distinct_ += hits_[r]++ == 0;
  }
  void remove(std::uint32_t v) {
    for (auto r : h_->left_neighbors(v)) distinct_ -= --hits_[r] == 0;
  }
  double score(std::size_t s) const { return static_cast<double>(distinct_) / (static_cast<double>(d_left_) * s); }
  std::vector<std::uint32_t> detail(std::size_t) const { return {}; }

 private:
  const BipartiteMultigraph* h_;
  std::uint32_t d_left_;
  std::vector<std::uint32_t> hits_;
  std::uint64_t distinct_ = 0;
};

detail::WalkOptions walk_options(const CheckOptions& opt, std::uint32_t max_size, bool maximize) {
  detail::WalkOptions w;
  w.min_size = 1;
  w.max_size = max_size;
  w.exhaustive_budget = opt.exhaustive_budget;
  w.samples = opt.samples;
  w.seed = opt.seed;
  w.workers = opt.workers;
  w.maximize = maximize;
  return w;
}

}  // namespace

SpreadEvidence check_bucket_spread(const BipartiteMultigraph& h, const BucketFamily& family, const CheckOptions& opt) {
  family.validate();
  if (family.universe != h.right_size()) throw DomainError("bucket family universe differs from the gadget's right side");
  const auto d_left = uniform_degree(h, Side::left);
  SpreadEvidence ev;
  ev.r = family.count();
  ev.log_D = std::log(static_cast<double>(h.left_size()) + h.right_size());
  ev.w_min = static_cast<std::uint32_t>(std::max(1.0, std::ceil(ev.r * ev.log_D / d_left)));
  ev.w_cap = opt.w_cap;
  ev.size_cap = std::max(1u, std::min(opt.size_cap, d_left ? h.right_size() / d_left : 0u));
  ev.samples = opt.samples;
  ev.seed = opt.seed;
  for (const auto& b : family.buckets) {
    // D_R/(2r) <= |B| <= 2 D_R / r
    const auto sz = static_cast<std::uint64_t>(b.size());
    if (2 * ev.r * sz < h.right_size() || ev.r * sz > 2ull * h.right_size()) ev.bucket_sizes_in_window = false;
  }
  if (ev.w_min > ev.r) {
    ev.vacuous = true;
    ev.mode = "exhaustive";
    ev.passed = true;
    return ev;
  }
  const SpreadState proto(h, family, d_left, ev.w_min, ev.log_D);
  const auto res = detail::walk_subsets(proto, h.left_size(), walk_options(opt, ev.size_cap, true));
  ev.mode = mode_of(res);
  ev.sizes = to_evidence(res);
  bool any = false;
  for (const auto& r : res) {
    if (!r.found) continue;
    if (!any || r.value > ev.worst_ratio) {
      any = true;
      ev.worst_ratio = r.value;
      ev.witness_s = r.witness;
      ev.witness_w = r.detail;
    }
  }
  ev.passed = ev.worst_ratio <= 1.0;
  return ev;
}

LosslessEvidence check_lossless(const BipartiteMultigraph& h, double shrink, double shrink_range,
                                const CheckOptions& opt) {
  if (!(shrink > 0 && shrink < 1)) throw DomainError("shrink must lie in (0, 1)");
  if (!(shrink_range > 0)) throw DomainError("shrink_range must be positive");
  const auto d_left = uniform_degree(h, Side::left);
  LosslessEvidence ev;
  ev.shrink = shrink;
  ev.shrink_range = shrink_range;
  ev.certified_max_size = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::floor(shrink_range * h.right_size() / d_left)));
  ev.size_cap = std::max(opt.size_cap, ev.certified_max_size);
  ev.samples = opt.samples;
  ev.seed = opt.seed;
  const LosslessState proto(h, d_left);
  const auto res = detail::walk_subsets(proto, h.left_size(), walk_options(opt, ev.size_cap, false));
  ev.mode = mode_of(res);
  ev.sizes = to_evidence(res);
  bool any = false;
  for (const auto& r : res) {
    if (!r.found) continue;
    if (!any || r.value < ev.min_ratio) {
      any = true;
      ev.min_ratio = r.value;
      ev.witness = r.witness;
    }
    if (r.size <= ev.certified_max_size) ev.min_ratio_certified = std::min(ev.min_ratio_certified, r.value);
  }
  ev.passed = ev.min_ratio_certified >= shrink;
  return ev;
}

void GadgetParams::validate() const {
  if (D_L == 0 || D_R == 0 || d_L == 0 || d_R == 0) throw DomainError("gadget sizes and degrees must be positive");
  if (static_cast<std::uint64_t>(D_L) * d_L != static_cast<std::uint64_t>(D_R) * d_R) {
    throw DomainError("handshake violated: D_L d_L != D_R d_R");
  }
  right_family.validate();
  left_family.validate();
  if (right_family.universe != D_R) throw DomainError("right bucket family must live on [D_R]");
  if (left_family.universe != D_L) throw DomainError("left bucket family must live on [D_L]");
}

GadgetCertificate certify_gadget(const GadgetParams& params, BipartiteMultigraph gadget) {
  GadgetCertificate cert;
  cert.params = params;
  cert.gadget = std::move(gadget);
  const auto transposed = cert.gadget.transposed();
  cert.spread = check_bucket_spread(cert.gadget, params.right_family, params.checks);
  cert.lossless = check_lossless(cert.gadget, params.shrink, params.shrink_range, params.checks);
  cert.spread_transpose = check_bucket_spread(transposed, params.left_family, params.checks);
  cert.lossless_transpose = check_lossless(transposed, params.shrink, params.shrink_range, params.checks);
  return cert;
}

GadgetCertificate search_good_gadget(const GadgetParams& params, std::uint32_t max_tries) {
  params.validate();
  std::vector<TryRecord> records;
  for (std::uint32_t attempt = 1; attempt <= max_tries; ++attempt) {
    const auto sample_seed = mix_seed(params.seed, attempt);
    auto h = sample_biregular(params.D_L, params.D_R, params.d_L, params.d_R, sample_seed, params.simple);
    auto cert = certify_gadget(params, std::move(h));
    cert.tries = attempt;
    cert.sample_seed = sample_seed;
    if (cert.passed()) return cert;
    records.push_back({attempt, sample_seed, cert.spread.worst_ratio, cert.lossless.min_ratio_certified,
                       cert.spread_transpose.worst_ratio, cert.lossless_transpose.min_ratio_certified, false});
  }
  throw GadgetSearchFailure("no good gadget within " + std::to_string(max_tries) + " tries", std::move(records));
}

bool replay_certificate(const GadgetCertificate& cert) {
  const auto again = certify_gadget(cert.params, cert.gadget);
  return again.spread.worst_ratio == cert.spread.worst_ratio &&
         again.lossless.min_ratio == cert.lossless.min_ratio &&
         again.spread_transpose.worst_ratio == cert.spread_transpose.worst_ratio &&
         again.lossless_transpose.min_ratio == cert.lossless_transpose.min_ratio &&
         again.spread.witness_s == cert.spread.witness_s && again.lossless.witness == cert.lossless.witness;
}

double un_lower_bound_formula(double d1, double p, std::uint32_t n1, std::uint32_t s) {
  if (!(p > 0 && p < 1)) throw DomainError("p must lie in (0, 1)");
  if (s == 0) throw DomainError("set size must be positive");
  if (n1 == 0) throw DomainError("n1 must be positive");
  const double keep = std::pow(1.0 - p, static_cast<double>(s) - 1.0);
  const double correction = std::sqrt(4.0 * p * keep * n1 * std::log(static_cast<double>(n1)));
  return std::max(0.0, d1 * keep - correction);
}

}  // namespace expforge
