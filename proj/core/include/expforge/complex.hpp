#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace expforge {

// k-partite pure simplicial complex stored by its maximal faces.
//
// Vertices carry global ids 0..n-1, assigned part by part: part p owns ids
// [part_offset(p), part_offset(p) + part_size(p)). Every maximal face holds
// exactly one vertex from each part and is stored as k global ids ordered by
// part. Faces are deduplicated and kept in lexicographic order; sub-faces are
// never materialized.
class CliqueComplex {
 public:
  CliqueComplex() = default;
  // faces: flat list of k-tuples of part-local indices. Throws DomainError on
  // an index outside its part.
  CliqueComplex(std::vector<std::uint32_t> part_sizes, const std::vector<std::uint32_t>& local_faces);

  // Same, with faces given as global ids. Each face must be transversal.
  static CliqueComplex from_global_faces(std::vector<std::uint32_t> part_sizes,
                                         std::vector<std::vector<std::uint32_t>> faces);

  std::uint32_t k() const noexcept { return static_cast<std::uint32_t>(part_sizes_.size()); }
  std::uint32_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
  std::uint32_t part_size(std::uint32_t p) const { return part_sizes_.at(p); }
  std::uint32_t part_offset(std::uint32_t p) const { return offsets_.at(p); }
  const std::vector<std::uint32_t>& part_sizes() const noexcept { return part_sizes_; }
  std::uint32_t part_of(std::uint32_t v) const { return part_of_.at(v); }
  std::uint32_t local_index(std::uint32_t v) const { return v - offsets_.at(part_of_.at(v)); }

  std::size_t face_count() const noexcept { return k() == 0 ? 0 : faces_.size() / k(); }
  std::span<const std::uint32_t> face(std::size_t f) const;
  // Face ids containing v, ascending.
  std::span<const std::uint32_t> faces_of(std::uint32_t v) const;

 private:
  void finish(std::vector<std::vector<std::uint32_t>> faces);

  std::vector<std::uint32_t> part_sizes_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> part_of_;
  std::vector<std::uint32_t> faces_;
  std::vector<std::uint32_t> incidence_offsets_;
  std::vector<std::uint32_t> incidence_;
};

// Every transversal k-tuple is a face; parts all of size part_size.
CliqueComplex complete_partite_complex(std::uint32_t k, std::uint32_t part_size);

}  // namespace expforge
