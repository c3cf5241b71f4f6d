#include "expforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "expforge/errors.hpp"

namespace expforge {

SymmetricGraph::SymmetricGraph(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw DomainError("parallel edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::uint32_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adj_.resize(offsets_.back());
  auto pos = offsets_;
  for (const auto& [u, v] : edges_) {
    adj_[pos[u]++] = v;
    adj_[pos[v]++] = u;
  }
  for (std::uint32_t v = 0; v < n_; ++v) std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

std::span<const std::uint32_t> SymmetricGraph::neighbors(std::uint32_t v) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
}

std::size_t SymmetricGraph::max_degree() const {
  std::size_t d = 0;
  for (std::uint32_t v = 0; v < n_; ++v) d = std::max<std::size_t>(d, offsets_[v + 1] - offsets_[v]);
  return d;
}

bool SymmetricGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

SymmetricGraph induced_subgraph(const SymmetricGraph& g, std::span<const std::uint32_t> keep) {
  std::vector<std::uint32_t> pos(g.size(), 0xffffffffu);
  for (std::uint32_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.size()) throw DomainError("vertex " + std::to_string(keep[i]) + " out of range");
    pos[keep[i]] = i;
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < keep.size(); ++i) {
    for (auto w : g.neighbors(keep[i])) {
      if (pos[w] != 0xffffffffu && pos[w] > i) edges.emplace_back(i, pos[w]);
    }
  }
  return SymmetricGraph(static_cast<std::uint32_t>(keep.size()), std::move(edges));
}

namespace {

std::uint32_t count_components(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint32_t comps = n;
  for (const auto& [u, v] : edges) {
    const auto a = find(u);
    const auto b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

// Top two eigenpairs of a symmetric PSD operator by power iteration with
// deflation. apply(x, y) writes y = M x.
template <class Apply>
void power_pair(std::size_t n, Apply apply, const SpectralOptions& opt, double& mu1, double& mu2,
                std::uint64_t& iters, double& residual) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  auto run = [&](const Eigen::VectorXd* deflate, double& mu, Eigen::VectorXd& v) {
    v.resize(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = unif(rng);
    if (deflate) v -= deflate->dot(v) * *deflate;
    if (v.norm() == 0) {
      mu = 0;
      return;
    }
    v.normalize();
    Eigen::VectorXd w(static_cast<Eigen::Index>(n));
    mu = 0;
    for (std::uint64_t it = 0; it < opt.max_iterations; ++it) {
      ++iters;
      apply(v, w);
      if (deflate) w -= deflate->dot(w) * *deflate;
      const double next = v.dot(w);
      const double nw = w.norm();
      if (nw == 0) {
        mu = 0;
        residual = 0;
        return;
      }
      const bool done = it > 0 && std::abs(next - mu) <= opt.tolerance * std::max(1.0, std::abs(next));
      mu = next;
      residual = (w - mu * v).norm();
      v = w / nw;
      if (done) return;
    }
    std::ostringstream msg;
    msg << "power iteration did not converge after " << opt.max_iterations << " iterations (residual " << residual
        << ")";
    throw ResourceError(msg.str());
  };
  Eigen::VectorXd v1;
  Eigen::VectorXd v2;
  run(nullptr, mu1, v1);
  double top_residual = residual;
  if (n > 1 && mu1 > 0) {
    run(&v1, mu2, v2);
  } else {
    mu2 = 0;
  }
  residual = top_residual;
}

}  // namespace

SpectralReport top_eigenvalue(const SymmetricGraph& g, const SpectralOptions& opt) {
  const auto n = g.size();
  if (n == 0) throw DomainError("eigenvalue of an empty graph");
  SpectralReport rep;
  rep.tolerance = opt.tolerance;
  rep.components = count_components(n, g.edges());
  if (n <= opt.dense_limit) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
      a(u, v) = 1;
      a(v, u) = 1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) throw ResourceError("dense eigensolver failed");
    const auto& ev = es.eigenvalues();  // ascending
    rep.lambda_max = ev[n - 1];
    rep.lambda_2 = n > 1 ? ev[n - 2] : 0.0;
    rep.method = "dense";
    rep.residual = (a * es.eigenvectors().col(n - 1) - rep.lambda_max * es.eigenvectors().col(n - 1)).norm();
    return rep;
  }
  // A + c I is PSD for c = max degree, so power iteration finds the top end.
  const double shift = static_cast<double>(g.max_degree());
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y = shift * x;
    for (const auto& [u, v] : g.edges()) {
      y[u] += x[v];
      y[v] += x[u];
    }
  };
  double mu1 = 0;
  double mu2 = 0;
  power_pair(n, apply, opt, mu1, mu2, rep.iterations, rep.residual);
  rep.lambda_max = mu1 - shift;
  rep.lambda_2 = n > 1 ? mu2 - shift : 0.0;
  rep.method = "iterative";
  return rep;
}

SpectralReport bipartite_lambda2(const BipartiteMultigraph& g, const SpectralOptions& opt) {
  const auto nl = g.left_size();
  const auto nr = g.right_size();
  if (nl == 0 || nr == 0) throw DomainError("singular values of an empty biadjacency matrix");
  SpectralReport rep;
  rep.tolerance = opt.tolerance;
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> joined;
    joined.reserve(g.edge_count());
    for (const auto& e : g.edges()) joined.emplace_back(e.left, nl + e.right);
    rep.components = count_components(nl + nr, joined);
  }
  if (nl + nr <= opt.dense_limit) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(nl, nr);
    for (const auto& e : g.edges()) b(e.left, e.right) += 1;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();  // descending
    rep.lambda_max = sv[0];
    rep.lambda_2 = sv.size() > 1 ? sv[1] : 0.0;
    rep.method = "dense";
    rep.residual = (b * svd.matrixV().col(0) - rep.lambda_max * svd.matrixU().col(0)).norm();
    return rep;
  }
  // Work on B^T B over the right side.
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    Eigen::VectorXd mid = Eigen::VectorXd::Zero(nl);
    for (const auto& e : g.edges()) mid[e.left] += x[e.right];
    y = Eigen::VectorXd::Zero(nr);
    for (const auto& e : g.edges()) y[e.right] += mid[e.left];
  };
  double mu1 = 0;
  double mu2 = 0;
  power_pair(nr, apply, opt, mu1, mu2, rep.iterations, rep.residual);
  rep.lambda_max = std::sqrt(std::max(mu1, 0.0));
  rep.lambda_2 = std::sqrt(std::max(mu2, 0.0));
  rep.method = "iterative";
  return rep;
}

}  // namespace expforge
