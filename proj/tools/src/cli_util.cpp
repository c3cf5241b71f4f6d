#include "cli_util.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expforge/formats.hpp"
#include "expforge/report_json.hpp"

namespace expforge::cli {

namespace {

std::int64_t to_int(const std::string& s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != end) throw UsageError("not a rational number: '" + whole + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const auto den = to_int(text.substr(slash + 1), text);
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(to_int(text.substr(0, slash), text), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(to_int(text, text));
  const auto frac = text.substr(dot + 1);
  if (frac.size() > 12) throw UsageError("too many decimals in '" + text + "'");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const auto head = text.substr(0, dot);
  const bool negative = !head.empty() && head[0] == '-';
  const auto whole = head.empty() || head == "-" ? 0 : to_int(head, text);
  const auto part = frac.empty() ? 0 : to_int(frac, text);
  const auto magnitude = (whole < 0 ? -whole : whole) * scale + part;
  return Rational(negative ? -magnitude : magnitude, scale);
}

std::vector<std::uint32_t> parse_index_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::uint32_t v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) throw UsageError("bad index '" + item + "' in list");
    out.push_back(v);
  }
  return out;
}

Side parse_side(const std::string& text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw UsageError("side must be 'left' or 'right', got '" + text + "'");
}

nlohmann::json read_json(const std::string& path) {
  const auto text = read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const nlohmann::json& doc, const std::string& path) {
  const auto text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

GadgetCertificate load_certificate(const nlohmann::json& doc) {
  return certificate_from_json(doc.contains("body") ? doc.at("body") : doc);
}

BipartiteMultigraph load_gadget(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".bgf") == 0) return parse_graph(read_file(path));
  const auto doc = read_json(path);
  const auto& body = doc.contains("body") ? doc.at("body") : doc;
  if (body.contains("graph") && !body.contains("params")) return parse_graph(body.at("graph").get<std::string>());
  return load_certificate(doc).gadget;
}

nlohmann::json to_json(const std::vector<Assertion>& list) {
  auto out = nlohmann::json::array();
  for (const auto& a : list) out.push_back({{"name", a.name}, {"passed", a.passed}, {"witness", a.witness}});
  return out;
}

bool all_passed(const std::vector<Assertion>& list) {
  for (const auto& a : list) {
    if (!a.passed) return false;
  }
  return true;
}

}  // namespace expforge::cli
