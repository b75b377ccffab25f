#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "grassmann/ring.hpp"

namespace grassmann {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent serialized data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kRingSchema = "grassmann.ring_table/1";

Json spec_to_json(const RingSpec& spec);
/// Reads {"n", "k"} as a presentation (no normalization).
RingSpec spec_from_json(const Json& j);

Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j, std::size_t num_vars);

/// Versioned document: spec, relations as canonical text, and per degree the
/// monomial list, basis indices and reduction matrix as rational strings.
Json ring_to_json(const RingTable& ring);

/// Inverse of ring_to_json. Relations are checked against a fresh
/// computation; shapes are checked by the RingTable constructor.
RingPtr ring_from_json(const Json& j);

}  // namespace grassmann
