#pragma once

#include <string>

#include "grassmann/hom_solver.hpp"
#include "grassmann/ring_io.hpp"

namespace grassmann {

inline constexpr const char* kCertificateSchema = "grassmann.rigidity_certificate/1";

Json solve_to_json(const SolveResult& r);
Json shortcut_to_json(const ShortcutEvidence& e);

/// Fixed field order, so equal certificates serialize to equal text.
/// Budgets are recorded because they can change the conclusion.
Json certificate_to_json(const RigidityCertificate& cert, const CertifyOptions& options);

/// Options recorded in a certificate (budgets, search region).
CertifyOptions options_from_certificate(const Json& j, RingProvider rings = default_provider());

struct ReplayReport {
  bool matches = false;
  Conclusion conclusion = Conclusion::unverified_hypotheses;
  /// JSON pointer of the first differing field, empty when matching.
  std::string first_difference;
};

/// Recomputes the certificate from its recorded parameters and options and
/// compares field by field. Throws FormatError on malformed input.
ReplayReport replay_certificate(const Json& j, RingProvider rings = default_provider());

}  // namespace grassmann
