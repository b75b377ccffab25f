#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "grassmann/ring.hpp"
#include "grassmann/ring_io.hpp"

namespace grassmann {

/// Parameters outside the range where a composite map is defined.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RingProvider = std::function<RingPtr(const RingSpec&)>;

/// build_ring, uncached.
RingProvider default_provider();

/// Graded ring map H*(source) -> H*(target), stored by the images of
/// c_1..c_k; images[i] is homogeneous of degree i+1 or zero.
struct GradedHom {
  RingPtr source;
  RingPtr target;
  std::vector<RingElement> images;
};

/// Validates counts, rings and degrees; throws std::invalid_argument.
GradedHom make_hom(RingPtr source, RingPtr target, std::vector<RingElement> images);
/// Images given as polynomials in the target's generators.
GradedHom make_hom(RingPtr source, RingPtr target, const std::vector<Polynomial>& images);

GradedHom identity_hom(const RingPtr& ring);
GradedHom zero_hom(const RingPtr& source, const RingPtr& target);

/// i*: H*(G_{n+1,k}) -> H*(G_{n,k}), c_r -> c_r.
GradedHom restriction_i(int n, int k, const RingProvider& rings = default_provider());
/// j*: H*(G_{n+1,k+1}) -> H*(G_{n,k}), c_r -> c_r (r <= k), c_{k+1} -> 0.
GradedHom restriction_j(int n, int k, const RingProvider& rings = default_provider());

/// outer after inner.
GradedHom compose(const GradedHom& outer, const GradedHom& inner);

struct AlphaBeta {
  GradedHom alpha;  // H*(G_{m,l}) -> H*(G_{m-l+k,k})
  GradedHom beta;   // H*(G_{m-l+k,k}) -> H*(G_{n,k})
};

/// Builds alpha from l-k maps of type j* and beta from i* maps, then checks
/// both against the direct substitutions c_i -> c_i (i <= k), c_i -> 0.
/// Throws HypothesisError unless k < l and m - l > n - k.
AlphaBeta compose_alpha_beta(int m, int l, int n, int k, const RingProvider& rings = default_provider());

/// Value of p(images) in the target ring. p is over the source generators;
/// Coeff is Rational or Polynomial (symbolic images).
template <typename Coeff>
GradedElement<Coeff> evaluate_at(const Polynomial& p, const std::vector<GradedElement<Coeff>>& images,
                                 const RingPtr& target, const Coeff& one) {
  GradedElement<Coeff> out(target);
  if (p.is_zero()) return out;
  if (p.num_vars() != images.size()) throw std::invalid_argument("evaluate_at: one image per generator required");
  std::vector<std::vector<GradedElement<Coeff>>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const GradedElement<Coeff>& {
    auto& cache = powers[i];
    if (cache.empty()) {
      GradedElement<Coeff> unit(target);
      unit.coords(0)[0] = one;
      cache.push_back(std::move(unit));
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  for (const auto& t : p.terms()) {
    GradedElement<Coeff> term = power(0, 0);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] > 0) term = term * power(i, t.monomial[i]);
    out += term * t.coeff;
  }
  return out;
}

RingElement apply_hom(const GradedHom& h, const RingElement& x);

struct WellDefinedReport {
  bool ok = true;
  int relation_index = -1;  // j of the first h_j with nonzero image
  RingElement image;

  explicit operator bool() const { return ok; }
};

/// Every source relation must map to zero.
WellDefinedReport check_well_defined(const GradedHom& h);

/// Matrix of h in degree r: column j is the image of source basis element j
/// in the target degree-r basis.
Matrix<Rational> degree_matrix(const GradedHom& h, int r);

struct DegreeRank {
  int degree = 0;
  int source_rank = 0;
  int target_rank = 0;
  int image_rank = 0;
  bool surjective() const { return image_rank == target_rank; }
  bool bijective() const { return surjective() && image_rank == source_rank; }
};

/// Ranks in complex degrees 0..max(d_source, d_target).
std::vector<DegreeRank> degree_ranks(const GradedHom& h);

struct IsoRangeReport {
  int bound = 0;
  std::vector<DegreeRank> ranks;
  bool surjective_everywhere = true;
  bool bijective_up_to_bound = true;
  /// Degrees above the bound where the map happens to be bijective too.
  std::vector<int> bijective_beyond_bound;

  bool ok() const { return surjective_everywhere && bijective_up_to_bound; }
};

IsoRangeReport iso_range_check(const GradedHom& h, int bound);

inline constexpr const char* kHomSchema = "grassmann.graded_hom/1";

Json hom_to_json(const GradedHom& h);
GradedHom hom_from_json(const Json& j, const RingProvider& rings = default_provider());

}  // namespace grassmann
