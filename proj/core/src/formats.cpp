#include "expforge/formats.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "expforge/errors.hpp"

namespace expforge {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line, or false at end of input.
  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool parse_u32(const std::string& tok, std::uint32_t& out) {
  if (tok.empty() || tok.size() > 10) return false;
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (v > 0xffffffffull) return false;
  out = static_cast<std::uint32_t>(v);
  return true;
}

std::uint32_t expect_u32(const std::string& tok, const char* what, std::size_t line) {
  std::uint32_t v = 0;
  if (!parse_u32(tok, v)) throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line);
  return v;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

void expect_end(LineReader& reader) {
  std::string line;
  while (reader.next(line)) {
    if (!blank(line)) throw ParseError("unexpected trailing data", reader.line_no());
  }
}

}  // namespace

BipartiteMultigraph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("malformed header: empty input", 1);
  const auto head = split(line);
  if (head.size() != 4 || head[0] != "bgf1") throw ParseError("malformed header, expected 'bgf1 <n_L> <n_R> <m>'", 1);
  const auto n_left = expect_u32(head[1], "n_L", 1);
  const auto n_right = expect_u32(head[2], "n_R", 1);
  const auto m = expect_u32(head[3], "edge count", 1);

  std::vector<BipartiteMultigraph::Edge> edges;
  std::vector<std::string> tags;
  bool any_tag = false;
  edges.reserve(m);
  tags.reserve(m);
  while (edges.size() < m) {
    if (!reader.next(line)) {
      throw ParseError("truncated edge list: expected " + std::to_string(m) + " edges, found " +
                           std::to_string(edges.size()),
                       reader.line_no() + 1);
    }
    const auto toks = split(line);
    const auto ln = reader.line_no();
    if (toks.size() < 2 || toks.size() > 3) throw ParseError("malformed edge line", ln);
    const auto l = expect_u32(toks[0], "left index", ln);
    const auto r = expect_u32(toks[1], "right index", ln);
    if (l >= n_left) throw ParseError("left index " + std::to_string(l) + " ≥ " + std::to_string(n_left), ln);
    if (r >= n_right) throw ParseError("right index " + std::to_string(r) + " ≥ " + std::to_string(n_right), ln);
    edges.push_back({l, r});
    tags.push_back(toks.size() == 3 ? toks[2] : std::string());
    any_tag = any_tag || toks.size() == 3;
  }
  expect_end(reader);
  if (!any_tag) tags.clear();
  return BipartiteMultigraph(n_left, n_right, std::move(edges), std::move(tags));
}

BipartiteMultigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string write_graph(const BipartiteMultigraph& g) {
  std::ostringstream out;
  out << "bgf1 " << g.left_size() << ' ' << g.right_size() << ' ' << g.edge_count() << '\n';
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << edges[e].left << ' ' << edges[e].right;
    if (g.has_tags() && !g.tags()[e].empty()) out << ' ' << g.tags()[e];
    out << '\n';
  }
  return out.str();
}

CliqueComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("malformed header: empty input", 1);
  const auto head = split(line);
  if (head.size() < 3 || head[0] != "cxf1") throw ParseError("malformed header, expected 'cxf1 <k> <n_0> ... <f>'", 1);
  const auto k = expect_u32(head[1], "k", 1);
  if (head.size() != static_cast<std::size_t>(k) + 3) {
    throw ParseError("malformed header: expected " + std::to_string(k) + " part sizes", 1);
  }
  std::vector<std::uint32_t> sizes(k);
  for (std::uint32_t p = 0; p < k; ++p) sizes[p] = expect_u32(head[2 + p], "part size", 1);
  const auto f = expect_u32(head[2 + k], "face count", 1);
  std::vector<std::uint32_t> faces;
  faces.reserve(static_cast<std::size_t>(f) * k);
  for (std::uint32_t t = 0; t < f; ++t) {
    if (!reader.next(line)) {
      throw ParseError("truncated face list: expected " + std::to_string(f) + " faces, found " + std::to_string(t),
                       reader.line_no() + 1);
    }
    const auto toks = split(line);
    const auto ln = reader.line_no();
    if (toks.size() != k) throw ParseError("face line must have " + std::to_string(k) + " indices", ln);
    for (std::uint32_t p = 0; p < k; ++p) {
      const auto v = expect_u32(toks[p], "vertex index", ln);
      if (v >= sizes[p]) {
        throw ParseError("part " + std::to_string(p) + " index " + std::to_string(v) + " ≥ " +
                             std::to_string(sizes[p]),
                         ln);
      }
      faces.push_back(v);
    }
  }
  expect_end(reader);
  return CliqueComplex(std::move(sizes), faces);
}

std::string write_complex(const CliqueComplex& c) {
  std::ostringstream out;
  out << "cxf1 " << c.k();
  for (auto s : c.part_sizes()) out << ' ' << s;
  out << ' ' << c.face_count() << '\n';
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    const auto face = c.face(f);
    for (std::uint32_t p = 0; p < c.k(); ++p) out << (p ? " " : "") << c.local_index(face[p]);
    out << '\n';
  }
  return out.str();
}

GroupTable parse_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("malformed header: empty input", 1);
  const auto head = split(line);
  if (head.size() != 2 || head[0] != "gtf1") throw ParseError("malformed header, expected 'gtf1 <n>'", 1);
  const auto n = expect_u32(head[1], "group order", 1);
  if (n == 0) throw ParseError("group order must be positive", 1);
  auto read_row = [&](const char* what) {
    if (!reader.next(line)) throw ParseError(std::string("missing ") + what, reader.line_no() + 1);
    const auto toks = split(line);
    std::vector<std::uint32_t> row;
    for (const auto& t : toks) {
      const auto v = expect_u32(t, "element index", reader.line_no());
      if (v >= n) throw ParseError("element index " + std::to_string(v) + " ≥ " + std::to_string(n), reader.line_no());
      row.push_back(v);
    }
    return row;
  };
  std::vector<std::uint32_t> mul;
  mul.reserve(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto row = read_row("multiplication row");
    if (row.size() != n) throw ParseError("multiplication row must have " + std::to_string(n) + " entries", reader.line_no());
    mul.insert(mul.end(), row.begin(), row.end());
  }
  auto inv = read_row("inverse list");
  if (inv.size() != n) throw ParseError("inverse list must have " + std::to_string(n) + " entries", reader.line_no());
  const auto id = read_row("identity index");
  if (id.size() != 1) throw ParseError("identity line must hold one index", reader.line_no());
  expect_end(reader);
  return GroupTable(n, std::move(mul), std::move(inv), id[0]);
}

std::string write_group(const GroupTable& g) {
  std::ostringstream out;
  const auto n = g.order();
  out << "gtf1 " << n << '\n';
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) out << (b ? " " : "") << g.op(a, b);
    out << '\n';
  }
  for (std::uint32_t a = 0; a < n; ++a) out << (a ? " " : "") << g.inverse(a);
  out << '\n' << g.identity() << '\n';
  return out.str();
}

std::vector<std::vector<std::uint32_t>> parse_generators(std::string_view text) {
  std::istringstream in{std::string(text)};
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("malformed header: empty input", 1);
  const auto head = split(line);
  if (head.size() != 2 || head[0] != "gens") throw ParseError("malformed header, expected 'gens <k-1>'", 1);
  const auto parts = expect_u32(head[1], "part count", 1);
  std::vector<std::vector<std::uint32_t>> out(parts);
  for (std::uint32_t i = 0; i < parts; ++i) {
    if (!reader.next(line)) {
      throw ParseError("expected " + std::to_string(parts) + " generator lines, found " + std::to_string(i),
                       reader.line_no() + 1);
    }
    for (const auto& t : split(line)) out[i].push_back(expect_u32(t, "element index", reader.line_no()));
  }
  expect_end(reader);
  return out;
}

std::string write_generators(const std::vector<std::vector<std::uint32_t>>& parts) {
  std::ostringstream out;
  out << "gens " << parts.size() << '\n';
  for (const auto& p : parts) {
    for (std::size_t t = 0; t < p.size(); ++t) out << (t ? " " : "") << p[t];
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace expforge
