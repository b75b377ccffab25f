#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grassmann/groebner.hpp"
#include "grassmann/ring_maps.hpp"

namespace grassmann {

/// Coefficient of phi(c_i) on the j-th target basis element of degree i.
struct Unknown {
  int generator = 1;  // i, 1-based
  int index = 0;      // j, 0-based
  std::string name;   // "u<i>_<j+1>"
};

struct Constraint {
  int relation = 0;     // j of h_j
  int basis_index = 0;  // target degree-j basis position
  Polynomial poly;
};

/// Graded homs H*(source) -> H*(target) as the zero set of polynomial
/// constraints in the image coefficients.
struct HomSystem {
  RingPtr source;
  RingPtr target;
  bool c1_pinned = false;
  GradingPtr grading;  // one variable per unknown, weight = generator degree
  std::vector<Unknown> unknowns;
  std::vector<Constraint> constraints;

  std::vector<Polynomial> polynomials() const;
  /// The hom with the given unknown values (pinned unknowns are zero).
  GradedHom assemble(std::span<const Rational> values) const;
};

HomSystem build_hom_system(const RingPtr& source, const RingPtr& target, bool pin_c1_zero);

/// Symbolic images phi(h_0), ..., phi(h_max_r) by the recursion
/// phi(h_r) = -sum_i phi(c_i) phi(h_{r-i}).
std::vector<GradedElement<Polynomial>> symbolic_relation_images(const HomSystem& sys, int max_r);

/// k(n-k) < l(m-l).
bool c1_vanishing_shortcut(const RingSpec& source, const RingSpec& target);

struct ShortcutEvidence {
  int source_dimension = 0;
  int target_dimension = 0;
  bool applies = false;
  int source_c1_nilpotency = 0;        // d_s + 1
  bool target_c1_power_nonzero = false;  // c_1^{d_s+1} != 0 in the target
};

ShortcutEvidence c1_shortcut_evidence(const RingPtr& source, const RingPtr& target);

enum class Outcome { only_trivial, witness, inconclusive };

const char* to_string(Outcome o);

struct SolveResult {
  Outcome outcome = Outcome::inconclusive;
  /// The constraint ideal has no zero but the origin over the algebraic
  /// closure, not just over Q.
  bool origin_only_over_closure = false;
  std::optional<GradedHom> witness;
  std::vector<Rational> witness_values;
  std::vector<std::string> forced_zero;  // in order of discovery
  std::vector<std::string> log;
  std::vector<std::string> final_basis;
  std::string reason;  // set for inconclusive
  std::uint64_t steps = 0;
  std::size_t peak_bytes = 0;
};

struct SolveOptions {
  BudgetLimits limits;
  /// Sup-norm radius of the integer search used when elimination leaves a
  /// positive-dimensional residue.
  int search_radius = 3;
  std::size_t search_points = 200'000;
};

SolveResult solve_system(const HomSystem& sys, const SolveOptions& options = {});

/// alpha o phi o beta, an endomorphism of H*(G_{m-l+k,k}).
GradedHom endo_reduction(int k, int l, int m, int n, const GradedHom& phi,
                         const RingProvider& rings = default_provider());

struct Hypothesis {
  std::string name;
  std::string statement;
  bool holds = false;
};

/// Checklist for (k, l, m, n). With strict, the quadratic bound is read as
/// m - l > 2k^2 - k - 1; otherwise as >=.
std::vector<Hypothesis> rigidity_hypotheses(int k, int l, int m, int n, bool strict);

enum class Conclusion { only_trivial, witness, inconclusive, unverified_hypotheses };

const char* to_string(Conclusion c);

struct RigidityCertificate {
  int k = 0, l = 0, m = 0, n = 0;
  bool strict = true;
  std::vector<Hypothesis> hypotheses;
  std::string method;  // dimension-shortcut | full-solve | none
  Conclusion conclusion = Conclusion::unverified_hypotheses;
  std::optional<ShortcutEvidence> shortcut;
  std::optional<SolveResult> solve;
  std::vector<std::string> unknowns;
  std::vector<std::string> constraints;
  /// Outcome of the same system without the c_1 pin.
  std::optional<SolveResult> unpinned;
  /// Spec (n, k) of the middle Grassmannian and chain lengths.
  std::optional<AlphaBeta> reduction;
};

struct CertifyOptions {
  SolveOptions solve;
  RingProvider rings = default_provider();
  bool cross_check_unpinned = true;
};

RigidityCertificate certify_rigidity(int k, int l, int m, int n, bool strict_inequality,
                                     const CertifyOptions& options = {});

struct ConjectureReport {
  RingSpec spec;
  SolveResult result;
  /// A nonzero endomorphism killing H^2: a counterexample to report.
  bool finding = false;
};

ConjectureReport conjecture_scan(int n, int k, const SolveOptions& options = {},
                                 const RingProvider& rings = default_provider());

}  // namespace grassmann
