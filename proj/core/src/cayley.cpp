#include "expforge/cayley.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "expforge/errors.hpp"

namespace expforge {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

// Generator part of each element: t for S_t, 0 for the identity, kNone else.
std::vector<std::uint32_t> part_lookup(const CayleySpec& spec) {
  std::vector<std::uint32_t> part(spec.group.order(), kNone);
  part[spec.group.identity()] = 0;
  for (std::uint32_t t = 0; t < spec.parts.size(); ++t) {
    for (auto s : spec.parts[t]) part[s] = t + 1;
  }
  return part;
}

}  // namespace

void validate_cayley_spec(const CayleySpec& spec) {
  const auto n = spec.group.order();
  const auto k = spec.k();
  std::vector<std::uint32_t> part(n, kNone);
  for (std::uint32_t t = 0; t < spec.parts.size(); ++t) {
    for (auto s : spec.parts[t]) {
      if (s >= n) throw DomainError("generator " + std::to_string(s) + " outside a group of order " + std::to_string(n));
      if (s == spec.group.identity()) throw DomainError("identity listed as a generator in S_" + std::to_string(t + 1));
      if (part[s] != kNone) throw DomainError("generator " + std::to_string(s) + " appears more than once");
      part[s] = t + 1;
    }
  }
  for (std::uint32_t t = 1; t < k; ++t) {
    for (auto s : spec.parts[t - 1]) {
      const auto inv = spec.group.inverse(s);
      if (part[inv] != k - t) {
        throw DomainError("S is not symmetric: inverse of " + std::to_string(s) + " in S_" + std::to_string(t) +
                          " is not in S_" + std::to_string(k - t));
      }
    }
  }
}

bool is_face_generator(const CayleySpec& spec, const FaceGenerator& sigma) {
  const auto k = spec.k();
  const auto& g = spec.group;
  if (sigma.elements.size() != k || sigma.elements[0] != g.identity()) return false;
  const auto part = part_lookup(spec);
  for (std::uint32_t t = 1; t < k; ++t) {
    const auto s = sigma.elements[t];
    if (s >= g.order() || part[s] != t) return false;
  }
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const auto ratio = g.op(g.inverse(sigma.elements[a]), sigma.elements[b]);
      if (part[ratio] == kNone || ratio == g.identity()) return false;
    }
  }
  return true;
}

std::vector<FaceGenerator> face_generators(const CayleySpec& spec, std::uint64_t cap) {
  validate_cayley_spec(spec);
  const auto k = spec.k();
  const auto& g = spec.group;
  const auto part = part_lookup(spec);
  auto in_s = [&](std::uint32_t x) { return x != g.identity() && part[x] != kNone; };

  std::vector<std::vector<std::uint32_t>> sorted_parts = spec.parts;
  for (auto& p : sorted_parts) std::sort(p.begin(), p.end());

  std::vector<FaceGenerator> out;
  std::vector<std::uint32_t> cur(k, g.identity());
  std::uint64_t visited = 0;
  auto dfs = [&](auto&& self, std::uint32_t t) -> void {
    if (t == k) {
      out.push_back(FaceGenerator{cur});
      return;
    }
    for (auto s : sorted_parts[t - 1]) {
      if (++visited > cap) {
        throw ResourceError("face generator enumeration exceeds cap " + std::to_string(cap));
      }
      const auto s_inv = g.inverse(s);
      bool ok = true;
      for (std::uint32_t a = 1; a < t && ok; ++a) {
        ok = in_s(g.op(g.inverse(cur[a]), s)) && in_s(g.op(s_inv, cur[a]));
      }
      if (!ok) continue;
      cur[t] = s;
      self(self, t + 1);
    }
  };
  if (k == 1) return {FaceGenerator{cur}};
  dfs(dfs, 1);
  return out;
}

std::vector<std::uint32_t> cayley_coloring(const CayleySpec& spec) {
  validate_cayley_spec(spec);
  const auto n = spec.group.order();
  const auto k = spec.k();
  std::vector<std::uint32_t> color(n, kNone);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  // Start from the identity so that it always receives color 0.
  std::swap(order[0], order[spec.group.identity()]);
  std::deque<std::uint32_t> queue;
  for (auto root : order) {
    if (color[root] != kNone) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const auto m = queue.front();
      queue.pop_front();
      for (std::uint32_t t = 1; t < k; ++t) {
        for (auto s : spec.parts[t - 1]) {
          const auto next = spec.group.op(m, s);
          const auto want = (color[m] + t) % k;
          if (color[next] == kNone) {
            color[next] = want;
            queue.push_back(next);
          } else if (color[next] != want) {
            throw DomainError("generators admit no part coloring: element " + std::to_string(next) +
                              " needs colors " + std::to_string(color[next]) + " and " + std::to_string(want));
          }
        }
      }
    }
  }
  return color;
}

CayleyComplex build_cayley_complex(const CayleySpec& spec, std::uint64_t cap) {
  return build_cayley_complex(spec, face_generators(spec, cap), cap);
}

CayleyComplex build_cayley_complex(const CayleySpec& spec, std::vector<FaceGenerator> gens, std::uint64_t cap) {
  const auto color = cayley_coloring(spec);
  const auto n = spec.group.order();
  const auto k = spec.k();
  for (const auto& sigma : gens) {
    if (!is_face_generator(spec, sigma)) throw DomainError("invalid face generator for this generator set");
  }
  if (static_cast<std::uint64_t>(n) * gens.size() > cap) {
    throw ResourceError("Cayley complex needs " + std::to_string(static_cast<std::uint64_t>(n) * gens.size()) +
                        " face slots, cap is " + std::to_string(cap));
  }

  CayleyComplex out;
  std::vector<std::uint32_t> sizes(k, 0);
  std::vector<std::uint32_t> local(n);
  for (std::uint32_t m = 0; m < n; ++m) local[m] = sizes[color[m]]++;
  std::vector<std::uint32_t> offsets(k + 1, 0);
  for (std::uint32_t p = 0; p < k; ++p) offsets[p + 1] = offsets[p] + sizes[p];
  out.vertex_of.resize(n);
  out.element_of.resize(n);
  for (std::uint32_t m = 0; m < n; ++m) {
    out.vertex_of[m] = offsets[color[m]] + local[m];
    out.element_of[out.vertex_of[m]] = m;
  }

  std::vector<std::uint32_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * gens.size() * k);
  std::vector<std::uint32_t> face(k);
  for (std::uint32_t m = 0; m < n; ++m) {
    for (const auto& sigma : gens) {
      for (std::uint32_t t = 0; t < k; ++t) {
        const auto x = spec.group.op(m, sigma.elements[t]);
        face[color[x]] = local[x];
      }
      flat.insert(flat.end(), face.begin(), face.end());
    }
  }
  out.complex = CliqueComplex(std::move(sizes), flat);
  out.generators = std::move(gens);
  out.group = spec.group;
  return out;
}

std::vector<std::vector<FaceGenerator>> equivalence_classes(const std::vector<FaceGenerator>& gens,
                                                            const CayleySpec& spec) {
  const auto k = spec.k();
  const auto& g = spec.group;
  const auto part = part_lookup(spec);
  std::map<FaceGenerator, std::size_t> index;
  for (std::size_t i = 0; i < gens.size(); ++i) index.emplace(gens[i], i);

  std::vector<std::size_t> parent(gens.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& el = gens[i].elements;
    for (std::uint32_t a = 1; a < el.size(); ++a) {
      // s^{-1} sigma with s = el[a], placed by generator part.
      FaceGenerator shifted{std::vector<std::uint32_t>(k, kNone)};
      bool ok = true;
      const auto s_inv = g.inverse(el[a]);
      for (std::uint32_t b = 0; b < el.size() && ok; ++b) {
        const auto x = g.op(s_inv, el[b]);
        const auto t = part[x];
        ok = t != kNone && shifted.elements[t] == kNone;
        if (ok) shifted.elements[t] = x;
      }
      if (!ok) continue;
      const auto it = index.find(shifted);
      if (it == index.end()) continue;
      parent[find(i)] = find(it->second);
    }
  }

  std::map<std::size_t, std::vector<FaceGenerator>> grouped;
  for (std::size_t i = 0; i < gens.size(); ++i) grouped[find(i)].push_back(gens[i]);
  std::vector<std::vector<FaceGenerator>> out;
  out.reserve(grouped.size());
  for (auto& [root, members] : grouped) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

std::vector<FaceGenerator> truncate_to_degree(const std::vector<std::vector<FaceGenerator>>& classes,
                                              std::uint32_t degree) {
  if (degree == 0) throw DomainError("target degree must be positive");
  std::map<std::size_t, std::size_t> count_by_size;
  for (const auto& c : classes) ++count_by_size[c.size()];

  std::vector<std::size_t> enough;
  std::size_t best_j = 0;
  std::size_t best_mass = 0;
  for (const auto& [j, count] : count_by_size) {
    const auto mass = j * count;
    if (mass < degree) continue;
    enough.push_back(j);
    if (degree % j == 0 && mass > best_mass) {
      best_j = j;
      best_mass = mass;
    }
  }
  if (best_j == 0) {
    std::string sizes;
    for (auto j : enough) sizes += (sizes.empty() ? "" : ", ") + std::to_string(j);
    throw DomainError("degree " + std::to_string(degree) + " not realizable: no class size divides it (sizes with " +
                      "enough generators: " + (sizes.empty() ? std::string("none") : sizes) + ")");
  }

  std::vector<FaceGenerator> out;
  std::size_t needed = degree / best_j;
  for (const auto& c : classes) {
    if (needed == 0) break;
    if (c.size() != best_j) continue;
    out.insert(out.end(), c.begin(), c.end());
    --needed;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace expforge
