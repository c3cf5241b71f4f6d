#pragma once

#include <nlohmann/json.hpp>

#include "expforge/bipartite.hpp"
#include "expforge/bounds.hpp"
#include "expforge/certify.hpp"
#include "expforge/gadget.hpp"
#include "expforge/product.hpp"
#include "expforge/spectral.hpp"
#include "expforge/structured.hpp"

namespace expforge {

inline constexpr const char* kReportSchema = "certify/v1";

// Rationals are written as "p/q" strings, non-finite doubles as null.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const BiregularReport& r);
nlohmann::json to_json(const StructuredReport& r);
nlohmann::json to_json(const BoundExponents& r);
nlohmann::json to_json(const ParameterReport& r);
nlohmann::json to_json(const ExponentReport& r);
nlohmann::json to_json(const SpectralReport& r);
nlohmann::json to_json(const BucketFamily& f);
nlohmann::json to_json(const SpreadEvidence& e);
nlohmann::json to_json(const LosslessEvidence& e);
nlohmann::json to_json(const GadgetCertificate& c);  // gadget embedded as BGF text
nlohmann::json to_json(const TryRecord& t);
nlohmann::json to_json(const CollisionReport& r);
nlohmann::json to_json(const LowEdgeDiagnostic& d);
nlohmann::json to_json(const EmlResult& r);
nlohmann::json to_json(const SmallSetLambda& r);
nlohmann::json to_json(const TriangleReport& r);
nlohmann::json to_json(const TauEstimate& r);
nlohmann::json to_json(const Orientation& o);
nlohmann::json to_json(const DegreeProductCheck& c);
nlohmann::json to_json(const UneProfile& p);

// structured/v1: graph as BGF text, k, part_of and orderings. Special sets
// are recomputed on load.
inline constexpr const char* kStructuredSchema = "structured/v1";
nlohmann::json to_json(const StructuredBipartite& sb);
StructuredBipartite structured_from_json(const nlohmann::json& j);

// Top-level record {"schema", "kind", "body"}.
nlohmann::json make_report(const std::string& kind, nlohmann::json body);

// Certificate back from to_json output.
GadgetCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace expforge
