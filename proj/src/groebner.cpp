#include "grassmann/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace grassmann {

void Budget::charge_steps(std::uint64_t n) {
  steps_ += n;
  if (steps_ > limits_.steps)
    throw BudgetExceeded("step budget of " + std::to_string(limits_.steps) + " reduction steps exhausted");
}

void Budget::observe_bytes(std::size_t live) {
  peak_ = std::max(peak_, live);
  if (live > limits_.bytes)
    throw BudgetExceeded("coefficient budget of " + std::to_string(limits_.bytes) + " bytes exhausted");
}

std::size_t coefficient_bytes(const Polynomial& p) {
  std::size_t limbs = 0;
  for (const auto& t : p.terms())
    limbs += mpz_size(t.coeff.get_num_mpz_t()) + mpz_size(t.coeff.get_den_mpz_t());
  return limbs * sizeof(mp_limb_t);
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis, Budget& budget) {
  if (p.is_zero()) return p;
  const GradingPtr& g = p.grading();
  Polynomial rest = p;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& b : basis)
      if (!b.is_zero() && b.leading_monomial().divides(lt.monomial)) {
        divisor = &b;
        break;
      }
    if (divisor) {
      rest.subtract_scaled(lt.coeff / divisor->leading_coeff(), lt.monomial / divisor->leading_monomial(), *divisor);
      budget.charge_steps();
    } else {
      remainder.push_back(lt);
      rest -= Polynomial::monomial(g, lt.monomial, lt.coeff);
    }
  }
  return Polynomial::from_terms(g, std::move(remainder));
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis) {
  Budget unlimited(BudgetLimits{~std::uint64_t{0}, ~std::size_t{0}});
  return reduce(p, basis, unlimited);
}

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  int degree;
};

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const Monomial& l) {
  // Both monic.
  Polynomial s = Polynomial::monomial(a.grading(), l / a.leading_monomial()) * a;
  s.subtract_scaled(1, l / b.leading_monomial(), b);
  return s;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, Budget& budget) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  const GradingPtr grading = minimal.empty() ? nullptr : minimal.front().grading();
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return grading->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term lt = minimal[i].leading_term();
    Polynomial tail = minimal[i];
    tail -= Polynomial::monomial(grading, lt.monomial, lt.coeff);
    Polynomial out = reduce(tail, others, budget);
    out += Polynomial::monomial(grading, lt.monomial, lt.coeff);
    out.make_monic();
    minimal[i] = std::move(out);
  }
  return minimal;
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, Budget& budget, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  std::vector<Polynomial> g;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  std::size_t live = 0;

  auto add = [&](Polynomial p) {
    p.make_monic();
    live += coefficient_bytes(p);
    budget.observe_bytes(live);
    const std::size_t t = g.size();
    g.push_back(std::move(p));
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l = lcm(g[i].leading_monomial(), g[t].leading_monomial());
      const int d = g[t].grading()->degree(l);
      pending.push_back({i, t, std::move(l), d});
      open.emplace(i, t);
      ++st.pairs_created;
    }
  };

  for (auto& f : generators) {
    if (f.is_zero()) continue;
    Polynomial r = reduce(f, g, budget);
    if (!r.is_zero()) add(std::move(r));
  }

  while (!pending.empty()) {
    const GradingPtr& grading = g.front().grading();
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      const int c = grading->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pair = *best;
    pending.erase(best);
    open.erase({pair.i, pair.j});

    const auto& li = g[pair.i].leading_monomial();
    const auto& lj = g[pair.j].leading_monomial();
    if (coprime(li, lj)) {
      ++st.product_criterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!g[k].leading_monomial().divides(pair.lcm)) continue;
      const auto ik = std::minmax(pair.i, k), jk = std::minmax(pair.j, k);
      if (!open.count({ik.first, ik.second}) && !open.count({jk.first, jk.second})) chain = true;
    }
    if (chain) {
      ++st.chain_criterion;
      continue;
    }
    ++st.pairs_reduced;
    Polynomial r = reduce(s_polynomial(g[pair.i], g[pair.j], pair.lcm), g, budget);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (r.is_constant()) return {Polynomial::constant(r.grading(), 1)};
    add(std::move(r));
  }
  if (g.empty()) return g;
  return reduce_basis(std::move(g), budget);
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators) {
  Budget unlimited(BudgetLimits{~std::uint64_t{0}, ~std::size_t{0}});
  return groebner_basis(std::move(generators), unlimited);
}

bool is_unit_ideal(std::span<const Polynomial> gb) {
  return std::any_of(gb.begin(), gb.end(), [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

bool has_pure_power(std::span<const Polynomial> gb, std::size_t i) {
  for (const auto& p : gb) {
    const auto& m = p.leading_monomial();
    bool pure = m[i] > 0;
    for (std::size_t j = 0; j < m.size() && pure; ++j)
      if (j != i && m[j] != 0) pure = false;
    if (pure) return true;
  }
  return false;
}

bool is_zero_dimensional(std::span<const Polynomial> gb) {
  if (gb.empty()) return false;
  if (is_unit_ideal(gb)) return true;
  for (std::size_t i = 0; i < gb.front().num_vars(); ++i)
    if (!has_pure_power(gb, i)) return false;
  return true;
}

std::vector<Monomial> standard_monomials(std::span<const Polynomial> gb) {
  if (!is_zero_dimensional(gb) || is_unit_ideal(gb))
    throw std::invalid_argument("standard_monomials: ideal is not zero-dimensional and proper");
  const std::size_t n = gb.front().num_vars();
  std::vector<int> bound(n, 0);
  for (const auto& p : gb) {
    const auto& m = p.leading_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      bool pure = m[i] > 0;
      for (std::size_t j = 0; j < n && pure; ++j)
        if (j != i && m[j] != 0) pure = false;
      if (pure) bound[i] = bound[i] == 0 ? m[i] : std::min(bound[i], m[i]);
    }
  }
  std::vector<Monomial> out;
  Monomial cur(n);
  // Odometer over the box below the pure powers.
  for (;;) {
    bool standard = true;
    for (const auto& p : gb)
      if (p.leading_monomial().divides(cur)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == bound[i]) cur[i++] = 0;
    if (i == n) break;
  }
  const GradingPtr& g = gb.front().grading();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return g->compare(a, b) < 0; });
  return out;
}

Polynomial embed(const Polynomial& p, const GradingPtr& to) {
  if (p.is_zero()) return Polynomial(to);
  if (p.num_vars() > to->size()) throw std::invalid_argument("embed: target grading has fewer variables");
  for (std::size_t i = 0; i < p.num_vars(); ++i)
    if (p.grading()->name(i) != to->name(i) || p.grading()->weight(i) != to->weight(i))
      throw std::invalid_argument("embed: variable " + p.grading()->name(i) + " does not match");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(to->size());
    for (std::size_t i = 0; i < p.num_vars(); ++i) m[i] = t.monomial[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(to, std::move(terms));
}

}  // namespace grassmann
