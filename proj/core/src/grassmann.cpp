#include "expforge/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "expforge/errors.hpp"

namespace expforge {

BigInt q_integer(int n, std::uint64_t q) {
  BigInt sum = 0;
  BigInt term = 1;
  for (int t = 0; t < n; ++t) {
    sum += term;
    term *= q;
  }
  return sum;
}

BigInt gauss_binom(int k, int i, std::uint64_t q) {
  if (k < 0 || i < 0 || i > k) {
    throw DomainError("gauss_binom: need 0 <= i <= k, got k=" + std::to_string(k) + " i=" + std::to_string(i));
  }
  if (q < 2) throw DomainError("gauss_binom: q must be at least 2");
  BigInt num = 1;
  BigInt den = 1;
  for (int t = 1; t <= i; ++t) {
    num *= q_integer(k - i + t, q);
    den *= q_integer(t, q);
  }
  return num / den;
}

std::uint64_t gauss_binom_u64(int k, int i, std::uint64_t q) {
  const BigInt v = gauss_binom(k, i, q);
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("gauss_binom(" + std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(q) +
                        ") does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

std::uint32_t reduce_rows(const PrimePowerField& field, std::uint32_t cols, std::vector<PrimePowerField::Elem>& rows) {
  const std::uint32_t nrows = cols == 0 ? 0 : static_cast<std::uint32_t>(rows.size() / cols);
  auto at = [&](std::uint32_t r, std::uint32_t c) -> PrimePowerField::Elem& { return rows[r * cols + c]; };
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < cols && rank < nrows; ++c) {
    std::uint32_t pivot = rank;
    while (pivot < nrows && at(pivot, c) == 0) ++pivot;
    if (pivot == nrows) continue;
    if (pivot != rank) {
      for (std::uint32_t t = 0; t < cols; ++t) std::swap(at(pivot, t), at(rank, t));
    }
    const auto scale = field.inv(at(rank, c));
    for (std::uint32_t t = 0; t < cols; ++t) at(rank, t) = field.mul(at(rank, t), scale);
    for (std::uint32_t r = 0; r < nrows; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      const auto factor = at(r, c);
      for (std::uint32_t t = 0; t < cols; ++t) at(r, t) = field.sub(at(r, t), field.mul(factor, at(rank, t)));
    }
    ++rank;
  }
  rows.resize(static_cast<std::size_t>(rank) * cols);
  return rank;
}

Subspace::Subspace(const PrimePowerField& field, std::uint32_t ambient, std::vector<Elem> rows)
    : ambient_(ambient), basis_(std::move(rows)) {
  if (ambient_ == 0 ? !basis_.empty() : basis_.size() % ambient_ != 0) {
    throw DomainError("subspace rows do not match ambient dimension " + std::to_string(ambient));
  }
  for (auto e : basis_) {
    if (e >= field.order()) throw DomainError("subspace entry outside the field");
  }
  dim_ = reduce_rows(field, ambient_, basis_);
}

std::vector<std::uint32_t> Subspace::pivots() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < dim_; ++r) {
    std::uint32_t c = 0;
    while (basis_[r * ambient_ + c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

bool is_subspace_of(const PrimePowerField& field, const Subspace& small, const Subspace& big) {
  if (small.ambient_dim() != big.ambient_dim()) return false;
  if (small.dim() > big.dim()) return false;
  auto rows = big.basis();
  rows.insert(rows.end(), small.basis().begin(), small.basis().end());
  return reduce_rows(field, big.ambient_dim(), rows) == big.dim();
}

namespace {

// Enumerates RREF matrices of rank i with k columns, any 0 <= i <= k.
std::vector<Subspace> enumerate_rref(const PrimePowerField& field, std::uint32_t k, std::uint32_t i) {
  using Elem = PrimePowerField::Elem;
  const std::uint32_t q = field.order();
  std::vector<Subspace> out;
  std::vector<std::uint32_t> pivots(i);
  for (std::uint32_t r = 0; r < i; ++r) pivots[r] = r;

  while (true) {
    // Free cells: row r, columns right of its pivot that are not pivots.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
    for (std::uint32_t r = 0; r < i; ++r) {
      for (std::uint32_t c = pivots[r] + 1; c < k; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cells.emplace_back(r, c);
      }
    }
    std::vector<Elem> base(static_cast<std::size_t>(i) * k, 0);
    for (std::uint32_t r = 0; r < i; ++r) base[r * k + pivots[r]] = 1;
    std::vector<Elem> values(free_cells.size(), 0);
    while (true) {
      auto rows = base;
      for (std::size_t t = 0; t < free_cells.size(); ++t) {
        rows[free_cells[t].first * k + free_cells[t].second] = values[t];
      }
      out.emplace_back(field, k, std::move(rows));
      std::size_t t = 0;
      while (t < values.size() && ++values[t] == q) values[t++] = 0;
      if (t == values.size()) break;
    }
    // Next pivot combination.
    std::uint32_t r = i;
    while (r > 0 && pivots[r - 1] == k - i + (r - 1)) --r;
    if (r == 0) break;
    ++pivots[r - 1];
    for (std::uint32_t t = r; t < i; ++t) pivots[t] = pivots[t - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_cap(std::uint32_t k, std::uint32_t i, std::uint32_t q, std::uint64_t cap) {
  const BigInt count = gauss_binom(static_cast<int>(k), static_cast<int>(i), q);
  if (count > cap) {
    throw ResourceError("enumerating " + count.str() + " subspaces of dimension " + std::to_string(i) + " in F_" +
                        std::to_string(q) + "^" + std::to_string(k) + " exceeds the subspace cap " +
                        std::to_string(cap));
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const PrimePowerField& field, std::uint32_t k, std::uint32_t i,
                                          std::uint64_t cap) {
  if (i == 0 || i >= k) {
    throw DomainError("enumerate_subspaces: need 0 < i < k, got k=" + std::to_string(k) + " i=" + std::to_string(i));
  }
  check_cap(k, i, field.order(), cap);
  return enumerate_rref(field, k, i);
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t k, std::uint32_t i, std::uint32_t q, std::uint64_t cap) {
  return enumerate_subspaces(PrimePowerField(q), k, i, cap);
}

namespace {

// Edges (index in lower, index in upper) for containment between two lists
// of subspaces of dimensions i < j; each upper subspace is expanded into its
// dim-i subspaces and looked up, so the cost is |upper| * [j choose i]_q.
std::vector<BipartiteMultigraph::Edge> containment_edges(const PrimePowerField& field, std::uint32_t k,
                                                         const std::vector<Subspace>& lower,
                                                         const std::vector<Subspace>& upper, std::uint32_t i,
                                                         std::uint32_t j) {
  using Elem = PrimePowerField::Elem;
  std::map<std::vector<Elem>, std::uint32_t> index;
  for (std::uint32_t t = 0; t < lower.size(); ++t) index.emplace(lower[t].basis(), t);
  const auto coords = enumerate_rref(field, j, i);
  std::vector<BipartiteMultigraph::Edge> edges;
  edges.reserve(upper.size() * coords.size());
  for (std::uint32_t w = 0; w < upper.size(); ++w) {
    const auto& wb = upper[w].basis();
    for (const auto& c : coords) {
      std::vector<Elem> rows(static_cast<std::size_t>(i) * k, 0);
      for (std::uint32_t r = 0; r < i; ++r) {
        for (std::uint32_t t = 0; t < j; ++t) {
          const auto coef = c.basis()[r * j + t];
          if (coef == 0) continue;
          for (std::uint32_t col = 0; col < k; ++col) {
            rows[r * k + col] = field.add(rows[r * k + col], field.mul(coef, wb[t * k + col]));
          }
        }
      }
      const Subspace sub(field, k, std::move(rows));
      edges.push_back({index.at(sub.basis()), w});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

BipartiteMultigraph building_bipartite(std::uint32_t k, std::uint32_t q, std::uint32_t i, std::uint32_t j,
                                       std::uint64_t cap) {
  if (!(1 <= i && i < j && j + 1 <= k)) {
    throw DomainError("building_bipartite: need 1 <= i < j <= k-1, got k=" + std::to_string(k) +
                      " i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  const PrimePowerField field(q);
  const auto lower = enumerate_subspaces(field, k, i, cap);
  const auto upper = enumerate_subspaces(field, k, j, cap);
  auto edges = containment_edges(field, k, lower, upper, i, j);
  return BipartiteMultigraph(static_cast<std::uint32_t>(lower.size()), static_cast<std::uint32_t>(upper.size()),
                             std::move(edges));
}

BuildingComplex building_complex(std::uint32_t k, std::uint32_t q, std::uint64_t cap) {
  if (k < 2) throw DomainError("building_complex: need k >= 2");
  const PrimePowerField field(q);
  BuildingComplex b;
  b.k = k;
  b.q = q;
  for (std::uint32_t d = 1; d < k; ++d) b.parts.push_back(enumerate_subspaces(field, k, d, cap));

  std::vector<std::uint32_t> sizes;
  std::vector<std::uint32_t> offsets{0};
  for (const auto& part : b.parts) {
    sizes.push_back(static_cast<std::uint32_t>(part.size()));
    offsets.push_back(offsets.back() + sizes.back());
  }
  // up[d][v]: dim-(d+2) subspaces containing the v-th dim-(d+1) subspace.
  std::vector<std::vector<std::vector<std::uint32_t>>> up(k - 2);
  for (std::uint32_t d = 0; d + 2 < k; ++d) {
    up[d].resize(b.parts[d].size());
    for (const auto& e : containment_edges(field, k, b.parts[d], b.parts[d + 1], d + 1, d + 2)) {
      up[d][e.left].push_back(e.right);
    }
  }
  std::vector<std::vector<std::uint32_t>> flags;
  std::vector<std::uint32_t> chain;
  auto extend = [&](auto&& self, std::uint32_t depth, std::uint32_t v) -> void {
    chain.push_back(offsets[depth] + v);
    if (depth + 2 == k) {
      flags.push_back(chain);
    } else {
      for (auto w : up[depth][v]) self(self, depth + 1, w);
    }
    chain.pop_back();
  };
  BigInt flag_count = 1;
  for (std::uint32_t t = 1; t <= k; ++t) flag_count *= q_integer(static_cast<int>(t), q);
  if (flag_count > cap) {
    throw ResourceError("building with " + flag_count.str() + " flags exceeds the cap " + std::to_string(cap));
  }
  for (std::uint32_t v = 0; v < b.parts[0].size(); ++v) extend(extend, 0, v);
  b.flags = CliqueComplex::from_global_faces(std::move(sizes), std::move(flags));
  return b;
}

double link_lambda2_formula(std::uint32_t k, std::uint32_t q, std::uint32_t i, std::uint32_t j) {
  if (!(1 <= i && i < j && j + 1 <= k)) {
    throw DomainError("link_lambda2_formula: need 1 <= i < j <= k-1");
  }
  const int ki = static_cast<int>(k), ii = static_cast<int>(i), jj = static_cast<int>(j);
  const BigInt product = gauss_binom(jj - 1, jj - ii, q) * gauss_binom(ki - ii - 1, jj - ii, q);
  return std::sqrt(std::pow(static_cast<double>(q), jj - ii) * product.convert_to<double>());
}

BigInt chain_extension_count(std::uint32_t k, std::uint32_t q, std::uint32_t i0, std::uint32_t i1, std::uint32_t i2) {
  if (!(i0 < i1 && i1 < i2 && i2 < k)) {
    throw DomainError("chain_extension_count: need 0 <= i0 < i1 < i2 < k");
  }
  if (q < 2) throw DomainError("chain_extension_count: q must be at least 2");
  const int a = static_cast<int>(i1 - i0);
  const int b = static_cast<int>(i2 - i0);
  const int n = static_cast<int>(k);
  // Grow the chain one dimension at a time: below rho_a, pick a line of the
  // remaining quotient; between rho_a and rho_b likewise; then up to F_q^k.
  // Choosing a (t+1)-space between a fixed t-space and a fixed m-space has
  // [m-t choose 1]_q options.
  BigInt count = 1;
  for (int t = 0; t + 1 < a; ++t) count *= gauss_binom(a - t, 1, q);
  for (int t = a; t + 1 < b; ++t) count *= gauss_binom(b - t, 1, q);
  for (int t = b; t + 1 < n; ++t) count *= gauss_binom(n - t, 1, q);
  return count;
}

}  // namespace expforge
