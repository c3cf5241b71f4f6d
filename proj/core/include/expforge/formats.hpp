#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "expforge/bipartite.hpp"
#include "expforge/complex.hpp"
#include "expforge/group.hpp"

namespace expforge {

// BGF v1:
//   bgf1 <n_L> <n_R> <m>
//   <left> <right> [tag]        (m lines, 0-based)
BipartiteMultigraph parse_graph(std::string_view text);
BipartiteMultigraph parse_graph(std::istream& in);
std::string write_graph(const BipartiteMultigraph& g);

// CXF v1:
//   cxf1 <k> <n_0> ... <n_{k-1}> <f>
//   <v_0> ... <v_{k-1}>         (f lines, part-local indices)
CliqueComplex parse_complex(std::string_view text);
std::string write_complex(const CliqueComplex& c);

// GTF v1:
//   gtf1 <n>
//   n rows of n entries (row a, column b holds a*b)
//   inverse list
//   identity index
GroupTable parse_group(std::string_view text);
std::string write_group(const GroupTable& g);

// Generator partition:
//   gens <k-1>
//   one line of element indices per S_i (may be empty)
std::vector<std::vector<std::uint32_t>> parse_generators(std::string_view text);
std::string write_generators(const std::vector<std::vector<std::uint32_t>>& parts);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace expforge
