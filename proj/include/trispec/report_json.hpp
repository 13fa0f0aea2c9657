#pragma once

// JSON and CSV views of reports and certificates.

#include <string>

#include <json.hpp>

#include "trispec/enumeration.hpp"
#include "trispec/extremal.hpp"
#include "trispec/spectra.hpp"

namespace trispec {

nlohmann::json to_json(const SpectralReport& report);
nlohmann::json to_json(const OverlapCertificate& cert);
nlohmann::json to_json(const CountingCertificate& cert);
nlohmann::json to_json(const RigidityVerdict& verdict);
nlohmann::json to_json(const MinGapCheck& check);
nlohmann::json to_json(const PhiEntry& entry);
nlohmann::json to_json(const PhiTable& table);

/// Header "t,phi,Lambda,exhaustive,connected_classes,partition,witness".
std::string to_csv(const PhiTable& table);

/// Triangles as [[a,b,c],...].
nlohmann::json family_json(const TriangleFamily& family);

}  // namespace trispec
