#pragma once

#include <string>

#include "cyclefact/engine.hpp"

namespace cyclefact {

inline constexpr int kCertificateSchemaVersion = 1;

/// Serialize with a fixed key order: schema, n, k, l, sigma, factors,
/// provenance. Cycle notation is canonical, so documents are stable.
std::string certificate_to_json(const FactorizationCertificate& cert);

FactorizationCertificate certificate_from_json(const std::string& text);

std::string certificate_to_text(const FactorizationCertificate& cert);

} // namespace cyclefact
