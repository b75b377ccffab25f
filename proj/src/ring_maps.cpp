#include "grassmann/ring_maps.hpp"

#include <algorithm>
#include <string>

namespace grassmann {

RingProvider default_provider() {
  return [](const RingSpec& spec) { return build_ring(spec); };
}

GradedHom make_hom(RingPtr source, RingPtr target, std::vector<RingElement> images) {
  if (!source || !target) throw std::invalid_argument("make_hom: null ring");
  if (static_cast<int>(images.size()) != source->num_generators())
    throw std::invalid_argument("make_hom: expected " + std::to_string(source->num_generators()) +
                                " images, got " + std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto& x = images[i];
    if (!x.ring()) x = RingElement(target);
    if (!(x.ring()->spec() == target->spec())) throw std::invalid_argument("make_hom: image not in the target ring");
    const auto deg = x.homogeneous_degree();
    if (!x.is_zero() && deg != static_cast<int>(i) + 1)
      throw std::invalid_argument("make_hom: image of c" + std::to_string(i + 1) + " is not homogeneous of degree " +
                                  std::to_string(i + 1));
  }
  return GradedHom{std::move(source), std::move(target), std::move(images)};
}

GradedHom make_hom(RingPtr source, RingPtr target, const std::vector<Polynomial>& images) {
  std::vector<RingElement> els;
  for (const auto& p : images) els.push_back(normal_form(target, p));
  return make_hom(std::move(source), std::move(target), std::move(els));
}

GradedHom identity_hom(const RingPtr& ring) {
  std::vector<RingElement> images;
  for (int i = 1; i <= ring->num_generators(); ++i) images.push_back(ring_generator(ring, i));
  return make_hom(ring, ring, std::move(images));
}

GradedHom zero_hom(const RingPtr& source, const RingPtr& target) {
  return make_hom(source, target, std::vector<RingElement>(static_cast<std::size_t>(source->num_generators()),
                                                           RingElement(target)));
}

namespace {

// c_i -> c_i for i <= target generators, c_i -> 0 beyond.
GradedHom truncating_hom(const RingPtr& source, const RingPtr& target) {
  std::vector<RingElement> images;
  for (int i = 1; i <= source->num_generators(); ++i)
    images.push_back(i <= target->num_generators() ? ring_generator(target, i) : RingElement(target));
  return make_hom(source, target, std::move(images));
}

GradedHom checked(GradedHom h, const char* what) {
  const auto report = check_well_defined(h);
  if (!report)
    throw std::logic_error(std::string(what) + ": relation h" + std::to_string(report.relation_index) +
                           " does not map to zero");
  return h;
}

}  // namespace

GradedHom restriction_i(int n, int k, const RingProvider& rings) {
  const RingSpec target = RingSpec::presentation(n, k);
  const RingSpec source = RingSpec::presentation(n + 1, k);
  return checked(truncating_hom(rings(source), rings(target)), "restriction_i");
}

GradedHom restriction_j(int n, int k, const RingProvider& rings) {
  const RingSpec target = RingSpec::presentation(n, k);
  const RingSpec source = RingSpec::presentation(n + 1, k + 1);
  return checked(truncating_hom(rings(source), rings(target)), "restriction_j");
}

GradedHom compose(const GradedHom& outer, const GradedHom& inner) {
  if (!(inner.target->spec() == outer.source->spec()))
    throw std::invalid_argument("compose: inner target does not match outer source");
  std::vector<RingElement> images;
  for (const auto& x : inner.images) images.push_back(apply_hom(outer, x));
  return make_hom(inner.source, outer.target, std::move(images));
}

AlphaBeta compose_alpha_beta(int m, int l, int n, int k, const RingProvider& rings) {
  if (!(k < l)) throw HypothesisError("compose_alpha_beta: k < l violated");
  if (!(m - l > n - k)) throw HypothesisError("compose_alpha_beta: m - l > n - k violated");
  if (k < 1) throw HypothesisError("compose_alpha_beta: k >= 1 violated");
  if (!(n > k)) throw HypothesisError("compose_alpha_beta: k < n violated");
  const int mid = m - l + k;

  // alpha: (m, l) -> (m-1, l-1) -> ... -> (mid, k), one j* per step.
  GradedHom alpha = identity_hom(rings(RingSpec::presentation(m, l)));
  for (int step = 0; step < l - k; ++step) {
    const RingSpec& at = alpha.target->spec();
    alpha = compose(restriction_j(at.n - 1, at.k - 1, rings), alpha);
  }
  // beta: (mid, k) -> (mid-1, k) -> ... -> (n, k), one i* per step.
  GradedHom beta = identity_hom(rings(RingSpec::presentation(mid, k)));
  while (beta.target->spec().n > n) beta = compose(restriction_i(beta.target->spec().n - 1, k, rings), beta);

  const GradedHom alpha_direct = truncating_hom(alpha.source, alpha.target);
  const GradedHom beta_direct = truncating_hom(beta.source, beta.target);
  for (std::size_t i = 0; i < alpha.images.size(); ++i)
    if (!(alpha.images[i] == alpha_direct.images[i]))
      throw std::logic_error("compose_alpha_beta: alpha chain disagrees with direct substitution at c" +
                             std::to_string(i + 1));
  for (std::size_t i = 0; i < beta.images.size(); ++i)
    if (!(beta.images[i] == beta_direct.images[i]))
      throw std::logic_error("compose_alpha_beta: beta chain disagrees with direct substitution at c" +
                             std::to_string(i + 1));
  return {checked(std::move(alpha), "alpha"), checked(std::move(beta), "beta")};
}

RingElement apply_hom(const GradedHom& h, const RingElement& x) {
  if (!x.ring() || !(x.ring()->spec() == h.source->spec()))
    throw std::invalid_argument("apply_hom: element is not in the source ring");
  return evaluate_at(to_polynomial(x), h.images, h.target, Rational(1));
}

WellDefinedReport check_well_defined(const GradedHom& h) {
  WellDefinedReport report;
  const RingSpec& s = h.source->spec();
  const auto& rels = h.source->relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    RingElement image = evaluate_at(rels[i], h.images, h.target, Rational(1));
    if (!image.is_zero()) {
      report.ok = false;
      report.relation_index = s.n - s.k + 1 + static_cast<int>(i);
      report.image = std::move(image);
      return report;
    }
  }
  return report;
}

Matrix<Rational> degree_matrix(const GradedHom& h, int r) {
  const int rows = h.target->betti(r), cols = h.source->betti(r);
  Matrix<Rational> m = Matrix<Rational>::Zero(rows, cols);
  for (int j = 0; j < cols; ++j) {
    const RingElement image = apply_hom(h, basis_element(h.source, r, j));
    const auto& c = image.coords(r);
    for (int i = 0; i < rows; ++i) m(i, j) = c[static_cast<std::size_t>(i)];
  }
  return m;
}

std::vector<DegreeRank> degree_ranks(const GradedHom& h) {
  std::vector<DegreeRank> out;
  const int top = std::max(h.source->dimension(), h.target->dimension());
  for (int r = 0; r <= top; ++r) {
    DegreeRank d;
    d.degree = r;
    d.source_rank = h.source->betti(r);
    d.target_rank = h.target->betti(r);
    if (d.source_rank > 0 && d.target_rank > 0)
      d.image_rank = static_cast<int>(rank(RowMatrix<Rational>(degree_matrix(h, r))));
    out.push_back(d);
  }
  return out;
}

IsoRangeReport iso_range_check(const GradedHom& h, int bound) {
  IsoRangeReport report;
  report.bound = bound;
  report.ranks = degree_ranks(h);
  for (const auto& d : report.ranks) {
    if (!d.surjective()) report.surjective_everywhere = false;
    if (d.degree <= bound) {
      if (!d.bijective()) report.bijective_up_to_bound = false;
    } else if (d.bijective() && d.target_rank > 0) {
      report.bijective_beyond_bound.push_back(d.degree);
    }
  }
  return report;
}

Json hom_to_json(const GradedHom& h) {
  Json j;
  j["schema"] = kHomSchema;
  j["source"] = spec_to_json(h.source->spec());
  j["target"] = spec_to_json(h.target->spec());
  Json images = Json::array();
  for (const auto& x : h.images) images.push_back(to_polynomial(x).to_string());
  j["images"] = std::move(images);
  return j;
}

GradedHom hom_from_json(const Json& j, const RingProvider& rings) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kHomSchema)
    throw FormatError("graded hom: unsupported or missing schema");
  if (!j.contains("source") || !j.contains("target") || !j.contains("images") || !j["images"].is_array())
    throw FormatError("graded hom: missing field");
  RingPtr source = rings(spec_from_json(j["source"]));
  RingPtr target = rings(spec_from_json(j["target"]));
  std::vector<Polynomial> images;
  try {
    for (const auto& t : j["images"]) images.push_back(Polynomial::parse(t.get<std::string>(), target->grading()));
    return make_hom(std::move(source), std::move(target), images);
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("graded hom: ") + e.what());
  }
}

}  // namespace grassmann
