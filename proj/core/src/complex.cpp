#include "expforge/complex.hpp"

#include <algorithm>
#include <string>

#include "expforge/errors.hpp"

namespace expforge {

CliqueComplex::CliqueComplex(std::vector<std::uint32_t> part_sizes, const std::vector<std::uint32_t>& local_faces)
    : part_sizes_(std::move(part_sizes)) {
  const std::size_t k = part_sizes_.size();
  if (k == 0) {
    if (!local_faces.empty()) throw DomainError("faces given for a complex with no parts");
    offsets_ = {0};
    incidence_offsets_ = {0};
    return;
  }
  if (local_faces.size() % k != 0) throw DomainError("face list length is not a multiple of k");
  offsets_.assign(k + 1, 0);
  for (std::size_t p = 0; p < k; ++p) offsets_[p + 1] = offsets_[p] + part_sizes_[p];
  std::vector<std::vector<std::uint32_t>> faces(local_faces.size() / k, std::vector<std::uint32_t>(k));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t p = 0; p < k; ++p) {
      const auto local = local_faces[f * k + p];
      if (local >= part_sizes_[p]) {
        throw DomainError("face " + std::to_string(f) + " has index " + std::to_string(local) + " outside part " +
                          std::to_string(p) + " of size " + std::to_string(part_sizes_[p]));
      }
      faces[f][p] = offsets_[p] + local;
    }
  }
  finish(std::move(faces));
}

CliqueComplex CliqueComplex::from_global_faces(std::vector<std::uint32_t> part_sizes,
                                               std::vector<std::vector<std::uint32_t>> faces) {
  CliqueComplex c;
  c.part_sizes_ = std::move(part_sizes);
  const std::size_t k = c.part_sizes_.size();
  c.offsets_.assign(k + 1, 0);
  for (std::size_t p = 0; p < k; ++p) c.offsets_[p + 1] = c.offsets_[p] + c.part_sizes_[p];
  c.part_of_.resize(c.offsets_.back());
  for (std::uint32_t p = 0; p < k; ++p) {
    for (std::uint32_t v = c.offsets_[p]; v < c.offsets_[p + 1]; ++v) c.part_of_[v] = p;
  }
  for (auto& face : faces) {
    if (face.size() != k) throw DomainError("face of size " + std::to_string(face.size()) + " in a " +
                                            std::to_string(k) + "-partite complex");
    std::vector<std::uint32_t> ordered(k, 0);
    std::vector<char> seen(k, 0);
    for (auto v : face) {
      if (v >= c.part_of_.size()) throw DomainError("face vertex " + std::to_string(v) + " out of range");
      const auto p = c.part_of_[v];
      if (seen[p]) throw DomainError("face is not transversal: two vertices in part " + std::to_string(p));
      seen[p] = 1;
      ordered[p] = v;
    }
    face = std::move(ordered);
  }
  c.finish(std::move(faces));
  return c;
}

void CliqueComplex::finish(std::vector<std::vector<std::uint32_t>> faces) {
  const std::size_t k = part_sizes_.size();
  part_of_.resize(offsets_.back());
  for (std::uint32_t p = 0; p < k; ++p) {
    for (std::uint32_t v = offsets_[p]; v < offsets_[p + 1]; ++v) part_of_[v] = p;
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  faces_.clear();
  faces_.reserve(faces.size() * k);
  for (const auto& f : faces) faces_.insert(faces_.end(), f.begin(), f.end());

  const std::uint32_t n = offsets_.back();
  incidence_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto v : faces_) ++incidence_offsets_[v + 1];
  for (std::uint32_t v = 0; v < n; ++v) incidence_offsets_[v + 1] += incidence_offsets_[v];
  incidence_.assign(faces_.size(), 0);
  std::vector<std::uint32_t> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t p = 0; p < k; ++p) incidence_[fill[faces_[f * k + p]]++] = static_cast<std::uint32_t>(f);
  }
}

std::span<const std::uint32_t> CliqueComplex::face(std::size_t f) const {
  if (f >= face_count()) throw DomainError("face id " + std::to_string(f) + " out of range");
  return {faces_.data() + f * k(), k()};
}

std::span<const std::uint32_t> CliqueComplex::faces_of(std::uint32_t v) const {
  if (v >= vertex_count()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return {incidence_.data() + incidence_offsets_[v], incidence_.data() + incidence_offsets_[v + 1]};
}

CliqueComplex complete_partite_complex(std::uint32_t k, std::uint32_t part_size) {
  std::size_t total = k == 0 ? 0 : 1;
  for (std::uint32_t p = 0; p < k; ++p) total *= part_size;
  std::vector<std::uint32_t> faces;
  faces.reserve(total * k);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    std::vector<std::uint32_t> face(k);
    for (std::uint32_t p = k; p-- > 0;) {
      face[p] = static_cast<std::uint32_t>(rest % part_size);
      rest /= part_size;
    }
    faces.insert(faces.end(), face.begin(), face.end());
  }
  return CliqueComplex(std::vector<std::uint32_t>(k, part_size), faces);
}

}  // namespace expforge
