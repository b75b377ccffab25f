#include "grassmann/hom_solver.hpp"

#include <algorithm>
#include <set>

#include "grassmann/rational_points.hpp"

namespace grassmann {

std::vector<Polynomial> HomSystem::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& c : constraints) out.push_back(c.poly);
  return out;
}

GradedHom HomSystem::assemble(std::span<const Rational> values) const {
  if (values.size() != unknowns.size()) throw std::invalid_argument("assemble: one value per unknown required");
  std::vector<RingElement> images(static_cast<std::size_t>(source->num_generators()), RingElement(target));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& x = unknowns[u];
    images[static_cast<std::size_t>(x.generator - 1)].coords(x.generator)[static_cast<std::size_t>(x.index)] = values[u];
  }
  return make_hom(source, target, std::move(images));
}

HomSystem build_hom_system(const RingPtr& source, const RingPtr& target, bool pin_c1_zero) {
  HomSystem sys;
  sys.source = source;
  sys.target = target;
  sys.c1_pinned = pin_c1_zero;
  const int k = source->num_generators();
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 1; i <= k; ++i) {
    if (i == 1 && pin_c1_zero) continue;
    for (int j = 0; j < target->betti(i); ++j) {
      Unknown u{i, j, "u" + std::to_string(i) + "_" + std::to_string(j + 1)};
      names.push_back(u.name);
      weights.push_back(i);
      sys.unknowns.push_back(std::move(u));
    }
  }
  sys.grading = std::make_shared<const Grading>(std::move(names), std::move(weights));

  const RingSpec& s = source->spec();
  const auto images = symbolic_relation_images(sys, s.n);
  for (int j = s.n - s.k + 1; j <= s.n; ++j) {
    const auto& img = images[static_cast<std::size_t>(j)];
    for (int b = 0; b < target->betti(j); ++b) {
      Polynomial p = img.coords(j)[static_cast<std::size_t>(b)];
      if (p.is_zero()) p = Polynomial(sys.grading);
      sys.constraints.push_back({j, b, std::move(p)});
    }
  }
  return sys;
}

std::vector<GradedElement<Polynomial>> symbolic_relation_images(const HomSystem& sys, int max_r) {
  const int k = sys.source->num_generators();
  std::vector<GradedElement<Polynomial>> phi_c(static_cast<std::size_t>(k + 1));
  for (int i = 1; i <= k; ++i) phi_c[static_cast<std::size_t>(i)] = GradedElement<Polynomial>(sys.target);
  for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
    const auto& x = sys.unknowns[u];
    phi_c[static_cast<std::size_t>(x.generator)].coords(x.generator)[static_cast<std::size_t>(x.index)] =
        Polynomial::variable(sys.grading, u);
  }
  std::vector<GradedElement<Polynomial>> h;
  h.emplace_back(sys.target);
  h[0].coords(0)[0] = Polynomial::constant(sys.grading, 1);
  for (int r = 1; r <= max_r; ++r) {
    GradedElement<Polynomial> acc(sys.target);
    for (int i = 1; i <= std::min(k, r); ++i) acc -= phi_c[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(r - i)];
    h.push_back(std::move(acc));
  }
  return h;
}

bool c1_vanishing_shortcut(const RingSpec& source, const RingSpec& target) {
  return source.complex_dimension() < target.complex_dimension();
}

ShortcutEvidence c1_shortcut_evidence(const RingPtr& source, const RingPtr& target) {
  ShortcutEvidence e;
  e.source_dimension = source->dimension();
  e.target_dimension = target->dimension();
  e.applies = c1_vanishing_shortcut(source->spec(), target->spec());
  e.source_c1_nilpotency = nilpotency_degree(ring_generator(source, 1));
  e.target_c1_power_nonzero =
      !pow(ring_generator(target, 1), static_cast<unsigned>(e.source_c1_nilpotency)).is_zero();
  return e;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::only_trivial: return "only-trivial";
    case Outcome::witness: return "witness";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::only_trivial: return "only-trivial";
    case Conclusion::witness: return "witness";
    case Conclusion::inconclusive: return "inconclusive";
    case Conclusion::unverified_hypotheses: return "unverified-hypotheses";
  }
  return "?";
}

namespace {

class Solver {
 public:
  Solver(const HomSystem& sys, const SolveOptions& options)
      : sys_(sys), options_(options), budget_(options.limits), zero_(sys.unknowns.size(), false) {
    for (const auto& c : sys.constraints)
      if (!c.poly.is_zero()) polys_.push_back(c.poly);
  }

  SolveResult run() {
    try {
      decide();
    } catch (const BudgetExceeded& e) {
      give_up(e.what());
    } catch (const RootSearchLimit& e) {
      give_up(e.what());
    }
    result_.steps = budget_.steps_used();
    result_.peak_bytes = budget_.peak_bytes();
    return std::move(result_);
  }

 private:
  const GradingPtr& grading() const { return sys_.grading; }
  std::size_t nvars() const { return sys_.unknowns.size(); }
  const std::string& name(std::size_t v) const { return sys_.unknowns[v].name; }

  void give_up(const std::string& why) {
    result_.outcome = Outcome::inconclusive;
    result_.reason = why;
    result_.witness.reset();
    result_.witness_values.clear();
  }

  void force_zero(std::size_t v, const std::string& why) {
    zero_[v] = true;
    result_.forced_zero.push_back(name(v));
    result_.log.push_back(why + ": " + name(v) + " = 0");
  }

  // Constraints with the forced-zero unknowns substituted.
  std::vector<Polynomial> restricted() const {
    std::vector<Polynomial> out;
    for (const auto& p : polys_) {
      std::vector<Term> kept;
      for (const auto& t : p.terms()) {
        bool dead = false;
        for (std::size_t v = 0; v < nvars() && !dead; ++v)
          if (zero_[v] && t.monomial[v] > 0) dead = true;
        if (!dead) kept.push_back(t);
      }
      if (!kept.empty()) out.push_back(Polynomial::from_terms(grading(), std::move(kept)));
    }
    return out;
  }

  // Restricted constraints plus the forced unknowns themselves.
  std::vector<Polynomial> ideal() const {
    auto out = restricted();
    for (std::size_t v = 0; v < nvars(); ++v)
      if (zero_[v]) out.push_back(Polynomial::variable(grading(), v));
    return out;
  }

  std::vector<std::size_t> alive() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars(); ++v)
      if (!zero_[v]) out.push_back(v);
    return out;
  }

  // A single-term constraint in one unknown forces that unknown to zero.
  void propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : restricted()) {
        if (p.size() != 1) continue;
        const Monomial& m = p.leading_monomial();
        std::size_t var = nvars(), count = 0;
        for (std::size_t v = 0; v < nvars(); ++v)
          if (m[v] > 0) {
            var = v;
            ++count;
          }
        if (count == 1 && !zero_[var]) {
          force_zero(var, "propagation (" + p.to_string() + ")");
          changed = true;
        }
      }
    }
  }

  bool in_radical(const std::vector<Polynomial>& ideal_gens, std::size_t v) {
    auto names = grading()->names();
    auto weights = grading()->weights();
    names.push_back("t_");
    weights.push_back(1);
    const GradingPtr ext = std::make_shared<const Grading>(std::move(names), std::move(weights));
    std::vector<Polynomial> gens;
    for (const auto& p : ideal_gens) gens.push_back(embed(p, ext));
    Polynomial rab = Polynomial::constant(ext, 1);
    rab -= Polynomial::variable(ext, nvars()) * embed(Polynomial::variable(grading(), v), ext);
    gens.push_back(std::move(rab));
    return is_unit_ideal(groebner_basis(std::move(gens), budget_));
  }

  void record_basis(const std::vector<Polynomial>& gb) {
    result_.final_basis.clear();
    for (const auto& p : gb) result_.final_basis.push_back(p.to_string());
  }

  void conclude_trivial() {
    result_.outcome = Outcome::only_trivial;
    result_.origin_only_over_closure = closure_exact_;
  }

  bool try_witness(std::vector<Rational> values, const std::string& how) {
    GradedHom h = sys_.assemble(values);
    const auto wd = check_well_defined(h);
    if (!wd) throw std::logic_error("solve_system: candidate witness fails well-definedness");
    bool nonzero = false;
    for (const auto& x : h.images) nonzero = nonzero || !x.is_zero();
    if (!nonzero) return false;
    result_.outcome = Outcome::witness;
    result_.log.push_back("witness from " + how);
    result_.witness = std::move(h);
    result_.witness_values = std::move(values);
    return true;
  }

  // Chart v = 1 with forced unknowns zero. Returns true when a witness was
  // found; otherwise every rational point of the cone has v = 0.
  enum class Chart { witness, empty, infinite };
  Chart chart(std::size_t v) {
    auto gens = ideal();
    gens.push_back(Polynomial::variable(grading(), v) - Polynomial::constant(grading(), 1));
    const auto gb = groebner_basis(gens, budget_);
    if (is_unit_ideal(gb)) {
      result_.log.push_back("chart " + name(v) + " = 1: no point over the closure");
      return Chart::empty;
    }
    closure_exact_ = false;
    const AffinePoints pts = rational_solutions(gb, budget_);
    if (!pts.finite) {
      result_.log.push_back("chart " + name(v) + " = 1: positive-dimensional");
      return Chart::infinite;
    }
    if (pts.points.empty()) {
      result_.log.push_back("chart " + name(v) + " = 1: finitely many points, none rational");
      return Chart::empty;
    }
    for (const auto& pt : pts.points)
      if (try_witness(pt, "chart " + name(v) + " = 1")) return Chart::witness;
    return Chart::empty;
  }

  bool grid_search() {
    const auto vars = alive();
    const int radius = options_.search_radius;
    std::size_t evaluated = 0;
    std::vector<Rational> point(nvars());
    std::vector<int> digits(vars.size());
    for (int s = 1; s <= radius; ++s) {
      std::fill(digits.begin(), digits.end(), -s);
      for (;;) {
        int sup = 0;
        for (int d : digits) sup = std::max(sup, std::abs(d));
        if (sup == s) {
          if (++evaluated > options_.search_points) return false;
          for (std::size_t t = 0; t < vars.size(); ++t) point[vars[t]] = digits[t];
          bool ok = true;
          for (const auto& p : polys_)
            if (p.evaluate(point) != 0) {
              ok = false;
              break;
            }
          if (ok && try_witness(point, "integer search")) return true;
        }
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == s) digits[i++] = -s;
        if (i == digits.size()) break;
        ++digits[i];
      }
    }
    return false;
  }

  void decide() {
    if (nvars() == 0) {
      result_.log.push_back("no unknowns");
      conclude_trivial();
      return;
    }
    for (;;) {
      propagate();
      const auto live = alive();
      if (live.empty()) {
        record_basis({});
        conclude_trivial();
        return;
      }
      const auto gens = ideal();
      const auto gb = groebner_basis(gens, budget_);
      record_basis(gb);
      if (is_zero_dimensional(gb)) {
        result_.log.push_back("zero-dimensional: only the origin");
        conclude_trivial();
        return;
      }
      bool eliminated = false;
      for (std::size_t v : live)
        if (in_radical(gb, v)) {
          force_zero(v, "radical");
          eliminated = true;
        }
      if (eliminated) continue;

      // Every remaining unknown is nonzero somewhere on the complex cone.
      // A chart is exhaustive for rational points when the cone action can
      // scale the chart variable to 1.
      std::set<int> weights;
      for (std::size_t v : live) weights.insert(grading()->weight(v));
      std::optional<std::size_t> pick;
      for (std::size_t v : live)
        if (grading()->weight(v) == 1 || weights.size() == 1) {
          pick = v;
          break;
        }
      if (!pick) {
        if (grid_search()) return;
        give_up("mixed-weight positive-dimensional residue; no rational point within sup-norm " +
                std::to_string(options_.search_radius));
        return;
      }
      switch (chart(*pick)) {
        case Chart::witness: return;
        case Chart::empty: force_zero(*pick, "chart"); continue;
        case Chart::infinite:
          if (grid_search()) return;
          give_up("positive-dimensional chart " + name(*pick) + " = 1; no rational point within sup-norm " +
                  std::to_string(options_.search_radius));
          return;
      }
    }
  }

  const HomSystem& sys_;
  SolveOptions options_;
  Budget budget_;
  std::vector<bool> zero_;
  std::vector<Polynomial> polys_;
  bool closure_exact_ = true;
  SolveResult result_;
};

}  // namespace

SolveResult solve_system(const HomSystem& sys, const SolveOptions& options) { return Solver(sys, options).run(); }

GradedHom endo_reduction(int k, int l, int m, int n, const GradedHom& phi, const RingProvider& rings) {
  if (!(phi.source->spec() == RingSpec::presentation(n, k)) || !(phi.target->spec() == RingSpec::presentation(m, l)))
    throw HypothesisError("endo_reduction: phi must map H*(G_{n,k}) to H*(G_{m,l})");
  const AlphaBeta ab = compose_alpha_beta(m, l, n, k, rings);
  return compose(ab.alpha, compose(phi, ab.beta));
}

std::vector<Hypothesis> rigidity_hypotheses(int k, int l, int m, int n, bool strict) {
  const int q = 2 * k * k - k - 1;
  std::vector<Hypothesis> h;
  h.push_back({"k_range", "1 <= k <= floor(n/2)", 1 <= k && 2 * k <= n});
  h.push_back({"l_range", "1 <= l <= floor(m/2)", 1 <= l && 2 * l <= m});
  h.push_back({"k_lt_l", "k < l", k < l});
  h.push_back({"codim", "m - l > n - k", m - l > n - k});
  if (strict)
    h.push_back({"quadratic_bound", "m - l > 2k^2 - k - 1 or k <= 3", m - l > q || k <= 3});
  else
    h.push_back({"quadratic_bound", "m - l >= 2k^2 - k - 1 or k <= 3", m - l >= q || k <= 3});
  return h;
}

RigidityCertificate certify_rigidity(int k, int l, int m, int n, bool strict_inequality,
                                     const CertifyOptions& options) {
  RigidityCertificate cert;
  cert.k = k;
  cert.l = l;
  cert.m = m;
  cert.n = n;
  cert.strict = strict_inequality;
  cert.hypotheses = rigidity_hypotheses(k, l, m, n, strict_inequality);
  const bool all = std::all_of(cert.hypotheses.begin(), cert.hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
  if (!all) {
    cert.method = "none";
    cert.conclusion = Conclusion::unverified_hypotheses;
    return cert;
  }
  const RingPtr source = options.rings(RingSpec::presentation(n, k));
  const RingPtr target = options.rings(RingSpec::presentation(m, l));
  cert.shortcut = c1_shortcut_evidence(source, target);
  const bool pin = cert.shortcut->applies && cert.shortcut->target_c1_power_nonzero;
  cert.method = pin ? "dimension-shortcut" : "full-solve";
  const HomSystem sys = build_hom_system(source, target, pin);
  for (const auto& u : sys.unknowns) cert.unknowns.push_back(u.name);
  for (const auto& c : sys.constraints) cert.constraints.push_back(c.poly.to_string());
  cert.solve = solve_system(sys, options.solve);
  switch (cert.solve->outcome) {
    case Outcome::only_trivial: cert.conclusion = Conclusion::only_trivial; break;
    case Outcome::witness: cert.conclusion = Conclusion::witness; break;
    case Outcome::inconclusive: cert.conclusion = Conclusion::inconclusive; break;
  }
  if (pin && options.cross_check_unpinned && cert.conclusion == Conclusion::only_trivial) {
    cert.unpinned = solve_system(build_hom_system(source, target, false), options.solve);
    if (cert.unpinned->outcome == Outcome::witness)
      throw std::logic_error("certify_rigidity: unpinned system has a witness although the pinned one does not");
  }
  cert.reduction = compose_alpha_beta(m, l, n, k, options.rings);
  return cert;
}

ConjectureReport conjecture_scan(int n, int k, const SolveOptions& options, const RingProvider& rings) {
  ConjectureReport report;
  report.spec = RingSpec::make(n, k);
  const RingPtr ring = rings(report.spec);
  report.result = solve_system(build_hom_system(ring, ring, true), options);
  report.finding = report.result.outcome == Outcome::witness;
  return report;
}

}  // namespace grassmann
