#include "grassmann/cli.hpp"

#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "grassmann/certificate.hpp"
#include "grassmann/ring_cache.hpp"

namespace grassmann::cli {

int exit_code_for(Conclusion c) {
  switch (c) {
    case Conclusion::only_trivial: return exit_code::ok;
    case Conclusion::unverified_hypotheses: return exit_code::unverified;
    case Conclusion::inconclusive: return exit_code::inconclusive;
    case Conclusion::witness: return exit_code::witness;
  }
  return exit_code::failed;
}

int exit_code_for(Outcome o) {
  switch (o) {
    case Outcome::only_trivial: return exit_code::ok;
    case Outcome::inconclusive: return exit_code::inconclusive;
    case Outcome::witness: return exit_code::witness;
  }
  return exit_code::failed;
}

namespace {

struct Config {
  std::string format = "table";
  std::string cache_dir;
  std::string strict_bound = "on";
  std::uint64_t budget_steps = BudgetLimits{}.steps;
  std::size_t budget_bytes = BudgetLimits{}.bytes;
  std::uint64_t seed = 0;
  int samples = 50;
  int jobs = 1;

  int n = 0, k = 0, l = 0, m = 0;
  int k_min = 1, k_max = 2, l_min = 1, l_max = 3, m_min = 2, m_max = 10, n_min = 2, n_max = 6;
  std::string output;
  std::string certificate;

  bool json() const { return format == "json"; }
  bool strict() const { return strict_bound == "on"; }
  SolveOptions solve() const {
    SolveOptions o;
    o.limits.steps = budget_steps;
    o.limits.bytes = budget_bytes;
    return o;
  }
};

std::string spec_label(const RingSpec& s) { return "G(" + std::to_string(s.n) + "," + std::to_string(s.k) + ")"; }

std::vector<int> topological_betti(const RingTable& ring) {
  std::vector<int> out;
  for (int t = 0; t <= 2 * ring.dimension(); ++t) out.push_back(t % 2 ? 0 : ring.betti(t / 2));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// ---- ring ----------------------------------------------------------------

int cmd_ring(const Config& cfg, RingCache& cache, std::ostream& out) {
  const RingSpec spec = RingSpec::make(cfg.n, cfg.k);
  const RingPtr ring = cache.get(spec);
  const TopIdentity top = top_identity(ring);
  const auto betti = topological_betti(*ring);
  int total = 0;
  for (int b : betti) total += b;
  const int first = spec.n - spec.k + 1;
  if (cfg.json()) {
    Json j;
    j["schema"] = "grassmann.ring_summary/1";
    j["requested"] = {{"n", cfg.n}, {"k", cfg.k}};
    j["spec"] = spec_to_json(spec);
    j["dualized"] = spec.dualized;
    j["complex_dimension"] = spec.complex_dimension();
    Json rels = Json::array();
    for (std::size_t i = 0; i < ring->relations().size(); ++i)
      rels.push_back({{"name", "h" + std::to_string(first + static_cast<int>(i))},
                      {"text", ring->relations()[i].to_string()}});
    j["relations"] = std::move(rels);
    j["betti_by_topological_degree"] = betti;
    j["total_rank"] = total;
    j["top_identity"] = {{"N", top.N.get_str()}, {"verified", top.verified}};
    out << j.dump(2) << '\n';
    return exit_code::ok;
  }
  if (spec.dualized)
    out << "note: G(" << cfg.n << "," << cfg.k << ") is isomorphic to " << spec_label(spec) << "; using k = " << spec.k
        << "\n";
  out << spec_label(spec) << ": Z[" << (spec.k == 1 ? std::string("c1") : "c1..c" + std::to_string(spec.k))
      << "] modulo\n";
  for (std::size_t i = 0; i < ring->relations().size(); ++i)
    out << "  h" << first + static_cast<int>(i) << " = " << ring->relations()[i].to_string() << "\n";
  out << "betti numbers by topological degree 0.." << 2 * spec.complex_dimension() << ": (" << join(betti) << ")\n";
  out << "total rank " << total << "\n";
  out << "N = " << top.N << " (c1^" << spec.complex_dimension() << " = N*c" << spec.k << "^" << spec.n - spec.k << ", "
      << (top.verified ? "verified" : "FAILED") << ")\n";
  return exit_code::ok;
}

// ---- verify-facts --------------------------------------------------------

struct FactResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

Polynomial random_polynomial(const RingTable& ring, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> degree(0, ring.dimension());
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    const auto mons = monomials_of_degree(*ring.grading(), degree(rng));
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    out.push_back({mons[pick(rng)], coeff(rng)});
  }
  return Polynomial::from_terms(ring.grading(), std::move(out));
}

FactResult iso_fact(const std::string& name, const GradedHom& h, int bound) {
  FactResult f{name, false, ""};
  const auto wd = check_well_defined(h);
  const auto iso = iso_range_check(h, bound);
  f.pass = wd.ok && iso.ok();
  f.detail = spec_label(h.source->spec()) + " -> " + spec_label(h.target->spec()) + ": " +
             (wd.ok ? "well-defined" : "h" + std::to_string(wd.relation_index) + " does not vanish") + ", " +
             (iso.surjective_everywhere ? "surjective" : "not surjective") + ", " +
             (iso.bijective_up_to_bound ? "bijective" : "not bijective") + " through H^" + std::to_string(2 * bound);
  return f;
}

int cmd_verify_facts(const Config& cfg, RingCache& cache, std::ostream& out, std::ostream& err) {
  const RingSpec spec = RingSpec::make(cfg.n, cfg.k);
  const RingPtr ring = cache.get(spec);
  const int d = spec.complex_dimension();
  std::vector<FactResult> facts;

  {
    const auto fr = freeness_check(spec);
    std::string detail = fr.free ? "free in every degree through H^" + std::to_string(2 * (d + spec.k))
                                 : "torsion in H^" + std::to_string(2 * *fr.offending_degree);
    facts.push_back({"freeness", fr.free, detail});
  }
  facts.push_back({"hilbert", hilbert_check(spec), "Poincare series equals the Gaussian binomial"});
  {
    const auto top = top_identity(ring);
    const int nil = nilpotency_degree(ring_generator(ring, 1));
    facts.push_back({"top-identity", top.verified && nil == d + 1,
                     "N = " + top.N.get_str() + ", c1 nilpotent of order " + std::to_string(nil)});
  }
  {
    bool ok = true;
    int bad = -1;
    for (int r = 0; r <= d && ok; ++r) {
      const Integer det = determinant(pairing_matrix(ring, r));
      if (abs(det) != 1) {
        ok = false;
        bad = r;
      }
    }
    facts.push_back({"pairing", ok, ok ? "unimodular in every degree" : "not unimodular in H^" + std::to_string(2 * bad)});
  }
  facts.push_back(iso_fact("restriction-i", restriction_i(spec.n, spec.k, cache.provider()), spec.n - spec.k));
  facts.push_back(iso_fact("restriction-j", restriction_j(spec.n, spec.k, cache.provider()), spec.k));
  {
    std::mt19937_64 rng(cfg.seed);
    bool ok = true;
    for (int s = 0; s < cfg.samples && ok; ++s) {
      const Polynomial p = random_polynomial(*ring, rng, 4);
      const Polynomial q = random_polynomial(*ring, rng, 3);
      const RingElement np = normal_form(ring, p);
      for (const auto& h : ring->relations()) {
        const Polynomial shifted = p + random_polynomial(*ring, rng, 2) * h;
        if (!(normal_form(ring, shifted) == np)) ok = false;
      }
      if (!(normal_form(ring, p * q) == np * normal_form(ring, q))) ok = false;
    }
    facts.push_back({"normal-form", ok,
                     std::to_string(cfg.samples) + " random representatives (seed " + std::to_string(cfg.seed) + ")"});
  }

  bool all = true;
  for (const auto& f : facts) all = all && f.pass;
  if (cfg.json()) {
    Json j;
    j["schema"] = "grassmann.verify_facts/1";
    j["spec"] = spec_to_json(spec);
    Json arr = Json::array();
    for (const auto& f : facts) arr.push_back({{"fact", f.name}, {"pass", f.pass}, {"detail", f.detail}});
    j["facts"] = std::move(arr);
    j["all_pass"] = all;
    out << j.dump(2) << '\n';
  } else {
    out << spec_label(spec) << "\n";
    for (const auto& f : facts) {
      std::string name = f.name;
      name.resize(14, ' ');
      out << (f.pass ? "PASS " : "FAIL ") << name << f.detail << "\n";
    }
  }
  for (const auto& f : facts)
    if (!f.pass) err << "failed fact: " << f.name << "\n";
  return all ? exit_code::ok : exit_code::failed;
}

// ---- certify / scan ------------------------------------------------------

CertifyOptions certify_options(const Config& cfg, RingCache& cache) {
  CertifyOptions o;
  o.solve = cfg.solve();
  o.rings = cache.provider();
  return o;
}

void print_certificate_table(const RigidityCertificate& c, std::ostream& out) {
  out << "rigidity (k,l,m,n) = (" << c.k << "," << c.l << "," << c.m << "," << c.n << "), "
      << (c.strict ? "strict" : "non-strict") << " quadratic bound\n";
  for (const auto& h : c.hypotheses) out << "  [" << (h.holds ? "true " : "false") << "] " << h.statement << "\n";
  out << "method: " << c.method << "\n";
  if (c.solve) {
    out << "unknowns: " << c.unknowns.size() << ", constraints: " << c.constraints.size() << "\n";
    for (const auto& line : c.solve->log) out << "  " << line << "\n";
    if (c.solve->outcome == Outcome::only_trivial)
      out << "  zero set: " << (c.solve->origin_only_over_closure ? "origin only, over the algebraic closure"
                                                                 : "no nonzero rational point") << "\n";
    if (c.solve->outcome == Outcome::inconclusive) out << "  reason: " << c.solve->reason << "\n";
    if (c.solve->witness)
      for (std::size_t i = 0; i < c.solve->witness->images.size(); ++i)
        out << "  phi(c" << i + 1 << ") = " << to_polynomial(c.solve->witness->images[i]).to_string() << "\n";
  }
  out << "conclusion: " << to_string(c.conclusion) << "\n";
}

int cmd_certify(const Config& cfg, RingCache& cache, std::ostream& out, std::ostream& err) {
  const CertifyOptions options = certify_options(cfg, cache);
  const auto cert = certify_rigidity(cfg.k, cfg.l, cfg.m, cfg.n, cfg.strict(), options);
  const Json j = certificate_to_json(cert, options);
  if (!cfg.output.empty()) {
    std::ofstream f(cfg.output);
    if (!f) throw std::runtime_error("cannot write " + cfg.output);
    f << j.dump(2) << '\n';
  }
  if (cfg.json())
    out << j.dump(2) << '\n';
  else
    print_certificate_table(cert, out);
  if (cert.conclusion == Conclusion::witness)
    err << "WITNESS: nonzero homomorphism under the stated hypotheses; requires human review\n";
  return exit_code_for(cert.conclusion);
}

int cmd_scan(const Config& cfg, RingCache& cache, std::ostream& out, std::ostream& err) {
  struct Tuple {
    int k, l, m, n;
  };
  std::vector<Tuple> tuples;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k)
    for (int l = cfg.l_min; l <= cfg.l_max; ++l)
      for (int m = cfg.m_min; m <= cfg.m_max; ++m)
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
          const auto hyps = rigidity_hypotheses(k, l, m, n, cfg.strict());
          if (std::all_of(hyps.begin(), hyps.end(), [](const Hypothesis& h) { return h.holds; }))
            tuples.push_back({k, l, m, n});
        }
  const CertifyOptions options = certify_options(cfg, cache);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, cfg.jobs));
  bool inconclusive = false;
  for (std::size_t start = 0; start < tuples.size(); start += batch) {
    std::vector<std::future<RigidityCertificate>> work;
    for (std::size_t i = start; i < std::min(tuples.size(), start + batch); ++i) {
      const Tuple t = tuples[i];
      work.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                [t, &options, &cfg] { return certify_rigidity(t.k, t.l, t.m, t.n, cfg.strict(), options); }));
    }
    for (auto& w : work) {
      const auto cert = w.get();
      if (cfg.json())
        out << certificate_to_json(cert, options).dump() << '\n';
      else
        out << "(" << cert.k << "," << cert.l << "," << cert.m << "," << cert.n << ") " << to_string(cert.conclusion)
            << " [" << cert.method << ", " << cert.unknowns.size() << " unknowns]\n";
      out.flush();
      if (cert.conclusion == Conclusion::inconclusive) inconclusive = true;
      if (cert.conclusion == Conclusion::witness) {
        err << "WITNESS at (" << cert.k << "," << cert.l << "," << cert.m << "," << cert.n
            << "): scan aborted; requires human review\n";
        return exit_code::witness;
      }
    }
  }
  return inconclusive ? exit_code::inconclusive : exit_code::ok;
}

// ---- conjecture / replay -------------------------------------------------

int cmd_conjecture(const Config& cfg, RingCache& cache, std::ostream& out, std::ostream& err) {
  const auto report = conjecture_scan(cfg.n, cfg.k, cfg.solve(), cache.provider());
  if (cfg.json()) {
    Json j;
    j["schema"] = "grassmann.conjecture_probe/1";
    j["spec"] = spec_to_json(report.spec);
    j["finding"] = report.finding;
    j["solve"] = solve_to_json(report.result);
    out << j.dump(2) << '\n';
  } else {
    out << "endomorphisms of H*(" << spec_label(report.spec) << ") vanishing on H^2\n";
    for (const auto& line : report.result.log) out << "  " << line << "\n";
    if (report.result.outcome == Outcome::inconclusive) out << "  reason: " << report.result.reason << "\n";
    out << "result: " << to_string(report.result.outcome) << "\n";
  }
  if (report.finding)
    err << "FINDING: nonzero endomorphism of H*(" << spec_label(report.spec)
        << ") vanishing on H^2; this contradicts the conjecture and should be reported\n";
  return exit_code_for(report.result.outcome);
}

int cmd_replay(const Config& cfg, RingCache& cache, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.certificate);
  if (!in) {
    err << "cannot read certificate " << cfg.certificate << "\n";
    return exit_code::integrity;
  }
  Json j;
  ReplayReport report;
  try {
    j = Json::parse(in);
    report = replay_certificate(j, cache.provider());
  } catch (const nlohmann::json::exception& e) {
    err << "certificate is not valid JSON: " << e.what() << "\n";
    return exit_code::integrity;
  } catch (const FormatError& e) {
    err << e.what() << "\n";
    return exit_code::integrity;
  }
  if (cfg.json()) {
    Json r;
    r["schema"] = "grassmann.replay/1";
    r["matches"] = report.matches;
    r["conclusion"] = to_string(report.conclusion);
    if (!report.matches) r["first_difference"] = report.first_difference;
    out << r.dump(2) << '\n';
  } else {
    out << "replay: " << (report.matches ? "match" : "MISMATCH at " + report.first_difference) << " ("
        << to_string(report.conclusion) << ")\n";
  }
  return report.matches ? exit_code::ok : exit_code::failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Cohomology rings of complex Grassmannians and rigidity of graded maps between them"};
  app.name("grassmann");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache-dir", cfg.cache_dir, std::string("Ring table cache directory (default: $") + kCacheDirEnv + ")");
  app.add_option("--strict-bound", cfg.strict_bound, "Read the quadratic bound as strict")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--budget-steps", cfg.budget_steps, "Reduction steps per solve");
  app.add_option("--budget-bytes", cfg.budget_bytes, "Coefficient bytes per solve");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  auto* ring = app.add_subcommand("ring", "Presentation, Betti numbers and top identity of H*(G_{n,k})");
  ring->add_option("n", cfg.n)->required();
  ring->add_option("k", cfg.k)->required();

  auto* facts = app.add_subcommand("verify-facts", "Check freeness, Hilbert series, top identity, pairing, i*, j*");
  facts->add_option("n", cfg.n)->required();
  facts->add_option("k", cfg.k)->required();
  facts->add_option("--samples", cfg.samples, "Random normal-form samples");

  auto* certify = app.add_subcommand("certify", "Certify that graded maps H*(G_{n,k}) -> H*(G_{m,l}) vanish");
  certify->add_option("k", cfg.k)->required();
  certify->add_option("l", cfg.l)->required();
  certify->add_option("m", cfg.m)->required();
  certify->add_option("n", cfg.n)->required();
  certify->add_option("--output", cfg.output, "Also write the certificate JSON here");

  auto* scan = app.add_subcommand("scan", "Certify every hypothesis-satisfying tuple in a range");
  scan->add_option("--k-min", cfg.k_min);
  scan->add_option("--k-max", cfg.k_max);
  scan->add_option("--l-min", cfg.l_min);
  scan->add_option("--l-max", cfg.l_max);
  scan->add_option("--m-min", cfg.m_min);
  scan->add_option("--m-max", cfg.m_max);
  scan->add_option("--n-min", cfg.n_min);
  scan->add_option("--n-max", cfg.n_max);
  scan->add_option("--jobs", cfg.jobs, "Tuples certified concurrently");

  auto* conj = app.add_subcommand("conjecture", "Probe endomorphisms of H*(G_{n,k}) that vanish on H^2");
  conj->add_option("n", cfg.n)->required();
  conj->add_option("k", cfg.k)->required();

  auto* replay = app.add_subcommand("replay-cert", "Recompute a stored certificate and compare");
  replay->add_option("file", cfg.certificate)->required();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::invalid;
  }

  try {
    std::optional<std::filesystem::path> dir;
    if (!cfg.cache_dir.empty())
      dir = std::filesystem::path(cfg.cache_dir);
    else
      dir = RingCache::dir_from_env();
    RingCache cache(dir);
    if (ring->parsed()) return cmd_ring(cfg, cache, out);
    if (facts->parsed()) return cmd_verify_facts(cfg, cache, out, err);
    if (certify->parsed()) return cmd_certify(cfg, cache, out, err);
    if (scan->parsed()) return cmd_scan(cfg, cache, out, err);
    if (conj->parsed()) return cmd_conjecture(cfg, cache, out, err);
    if (replay->parsed()) return cmd_replay(cfg, cache, out, err);
  } catch (const InvalidSpec& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return exit_code::invalid;
  } catch (const CacheIntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return exit_code::integrity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::internal;
  }
  return exit_code::invalid;
}

}  // namespace grassmann::cli
