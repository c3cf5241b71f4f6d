#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "expforge/bipartite.hpp"
#include "expforge/bounds.hpp"
#include "expforge/gadget.hpp"

namespace expforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

// Bad flag values or unusable input files; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "21/2", "-3", "4.25".
Rational parse_rational(const std::string& text);
// "0,3,5" (empty string gives an empty list).
std::vector<std::uint32_t> parse_index_list(const std::string& text);
Side parse_side(const std::string& text);

nlohmann::json read_json(const std::string& path);
// Pretty-printed with a trailing newline; stdout when path is empty.
void emit(const nlohmann::json& doc, const std::string& path);
// Accepts a BGF file or a certificate (bare or wrapped in a report).
BipartiteMultigraph load_gadget(const std::string& path);
GadgetCertificate load_certificate(const nlohmann::json& doc);

// One asserted-theorem outcome inside a report.
struct Assertion {
  std::string name;
  bool passed = true;
  nlohmann::json witness;
};
nlohmann::json to_json(const std::vector<Assertion>& list);
bool all_passed(const std::vector<Assertion>& list);

}  // namespace expforge::cli
