#include "grassmann/certificate.hpp"

namespace grassmann {

Json solve_to_json(const SolveResult& r) {
  Json j;
  j["outcome"] = to_string(r.outcome);
  j["origin_only_over_closure"] = r.origin_only_over_closure;
  j["forced_zero"] = r.forced_zero;
  j["log"] = r.log;
  j["final_basis"] = r.final_basis;
  j["steps"] = r.steps;
  if (r.outcome == Outcome::inconclusive) j["reason"] = r.reason;
  if (r.witness) {
    j["witness"] = hom_to_json(*r.witness);
    Json values = Json::array();
    for (const auto& v : r.witness_values) values.push_back(rational_to_string(v));
    j["witness_values"] = std::move(values);
  }
  return j;
}

Json shortcut_to_json(const ShortcutEvidence& e) {
  Json j;
  j["source_dimension"] = e.source_dimension;
  j["target_dimension"] = e.target_dimension;
  j["applies"] = e.applies;
  j["source_c1_nilpotency"] = e.source_c1_nilpotency;
  j["target_c1_power_nonzero"] = e.target_c1_power_nonzero;
  return j;
}

Json certificate_to_json(const RigidityCertificate& cert, const CertifyOptions& options) {
  Json j;
  j["schema"] = kCertificateSchema;
  j["parameters"] = {{"k", cert.k}, {"l", cert.l}, {"m", cert.m}, {"n", cert.n}};
  j["strict_bound"] = cert.strict;
  j["budget"] = {{"steps", options.solve.limits.steps},
                 {"bytes", options.solve.limits.bytes},
                 {"search_radius", options.solve.search_radius},
                 {"search_points", options.solve.search_points},
                 {"cross_check_unpinned", options.cross_check_unpinned}};
  Json hyps = Json::array();
  for (const auto& h : cert.hypotheses) hyps.push_back({{"name", h.name}, {"statement", h.statement}, {"holds", h.holds}});
  j["hypotheses"] = std::move(hyps);
  j["method"] = cert.method;
  j["conclusion"] = to_string(cert.conclusion);
  Json ev = Json::object();
  if (cert.shortcut) ev["shortcut"] = shortcut_to_json(*cert.shortcut);
  if (cert.solve) {
    ev["system"] = {{"source", {{"n", cert.n}, {"k", cert.k}}},
                    {"target", {{"n", cert.m}, {"k", cert.l}}},
                    {"c1_pinned", cert.method == "dimension-shortcut"},
                    {"unknowns", cert.unknowns},
                    {"constraints", cert.constraints}};
    ev["solve"] = solve_to_json(*cert.solve);
  }
  if (cert.unpinned) ev["unpinned_cross_check"] = solve_to_json(*cert.unpinned);
  if (cert.reduction) {
    const RingSpec& mid = cert.reduction->alpha.target->spec();
    ev["reduction"] = {{"middle", spec_to_json(mid)},
                       {"alpha", hom_to_json(cert.reduction->alpha)},
                       {"beta", hom_to_json(cert.reduction->beta)}};
  }
  j["evidence"] = std::move(ev);
  return j;
}

namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("certificate: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("certificate: field '") + key + "': " + e.what());
  }
}

}  // namespace

CertifyOptions options_from_certificate(const Json& j, RingProvider rings) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kCertificateSchema)
    throw FormatError("certificate: unsupported or missing schema");
  const Json& b = j.contains("budget") ? j["budget"] : throw FormatError("certificate: missing field 'budget'");
  CertifyOptions o;
  o.rings = std::move(rings);
  o.solve.limits.steps = get<std::uint64_t>(b, "steps");
  o.solve.limits.bytes = get<std::size_t>(b, "bytes");
  o.solve.search_radius = get<int>(b, "search_radius");
  o.solve.search_points = get<std::size_t>(b, "search_points");
  o.cross_check_unpinned = get<bool>(b, "cross_check_unpinned");
  return o;
}

ReplayReport replay_certificate(const Json& j, RingProvider rings) {
  const CertifyOptions options = options_from_certificate(j, std::move(rings));
  const Json& p = j.contains("parameters") ? j["parameters"] : throw FormatError("certificate: missing field 'parameters'");
  const auto cert = certify_rigidity(get<int>(p, "k"), get<int>(p, "l"), get<int>(p, "m"), get<int>(p, "n"),
                                     get<bool>(j, "strict_bound"), options);
  const Json fresh = certificate_to_json(cert, options);
  ReplayReport report;
  report.conclusion = cert.conclusion;
  if (fresh.dump() == j.dump()) {
    report.matches = true;
    return report;
  }
  const auto patch = Json::diff(j, fresh);
  report.first_difference = patch.empty() ? "/" : patch.front().value("path", std::string("/"));
  return report;
}

}  // namespace grassmann
