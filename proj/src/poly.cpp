#include "grassmann/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace grassmann {

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

Grading::Grading(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw std::invalid_argument("grading: names and weights differ in length");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("grading: weights must be positive");
}

std::shared_ptr<const Grading> Grading::chern(int k) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Grading>> interned;
  std::lock_guard lock(mutex);
  auto& slot = interned[k];
  if (!slot) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= k; ++i) {
      names.push_back("c" + std::to_string(i));
      weights.push_back(i);
    }
    slot = std::make_shared<const Grading>(std::move(names), std::move(weights));
  }
  return slot;
}

int Grading::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * m[i];
  return d;
}

int Grading::compare(const Monomial& a, const Monomial& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

bool same_grading(const GradingPtr& a, const GradingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace

Polynomial Polynomial::constant(GradingPtr grading, const Rational& c) {
  Polynomial p(grading);
  if (c != 0) p.terms_.push_back({Monomial(grading->size()), c});
  return p;
}

Polynomial Polynomial::variable(GradingPtr grading, std::size_t i) {
  Monomial m(grading->size());
  m[i] = 1;
  return monomial(std::move(grading), std::move(m));
}

Polynomial Polynomial::monomial(GradingPtr grading, Monomial m, const Rational& c) {
  if (m.size() != grading->size()) throw std::invalid_argument("monomial: wrong variable count");
  Polynomial p(std::move(grading));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(GradingPtr grading, std::vector<Term> terms) {
  Polynomial p(grading);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != grading->size())
      throw std::invalid_argument("from_terms: wrong variable count");
    acc[t.monomial] += t.coeff;
  }
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return grading->compare(a.monomial, b.monomial) > 0;
  });
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = grading_->degree(terms_.front().monomial);
  for (const auto& t : terms_)
    if (grading_->degree(t.monomial) != d) return std::nullopt;
  return d;
}

int Polynomial::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, grading_->degree(t.monomial));
  return d;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!grading_ || !other.grading_) return;
  if (!same_grading(grading_, other.grading_))
    throw std::invalid_argument("polynomial: mismatched generator sets (" +
                                std::to_string(grading_->size()) + " vs " +
                                std::to_string(other.grading_->size()) + " variables)");
}

void Polynomial::adopt(const Polynomial& other) {
  check_compatible(other);
  if (!grading_) grading_ = other.grading_;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  adopt(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int c;
    if (a == terms_.end()) c = -1;
    else if (b == other.terms_.end()) c = 1;
    else c = grading_->compare(a->monomial, b->monomial);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return *this += -other;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  adopt(other);
  if (terms_.empty() || other.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : other.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  const Grading& g = *grading_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return g.compare(a.monomial, b.monomial) > 0; });
  terms_ = std::move(out);
  return *this;
}

void Polynomial::subtract_scaled(const Rational& c, const Monomial& m, const Polynomial& q) {
  adopt(q);
  if (c == 0 || q.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  Monomial shifted;
  while (a != terms_.end() || b != q.terms_.end()) {
    int cmp;
    if (b != q.terms_.end()) shifted = b->monomial * m;
    if (a == terms_.end()) cmp = -1;
    else if (b == q.terms_.end()) cmp = 1;
    else cmp = grading_->compare(a->monomial, shifted);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({shifted, -c * b->coeff});
      ++b;
    } else {
      Rational s = a->coeff - c * b->coeff;
      if (s != 0) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

void Polynomial::make_monic() {
  if (terms_.empty()) return;
  const Rational lc = terms_.front().coeff;
  if (lc == 1) return;
  for (auto& t : terms_) t.coeff /= lc;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars() && !terms_.empty())
    throw std::invalid_argument("evaluate: point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!same_grading(a.grading_, b.grading_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r *= b;
  return r;
}
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial pow(const Polynomial& p, unsigned e) {
  if (!p.grading()) {
    if (e == 0) throw std::invalid_argument("pow: 0^0 without a grading");
    return p;
  }
  Polynomial result = Polynomial::constant(p.grading(), 1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial graded_component(const Polynomial& p, int r) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (p.grading()->degree(t.monomial) == r) kept.push_back(t);
  if (!p.grading()) return p;
  // Order is inherited, so from_terms only re-sorts an already sorted list.
  return Polynomial::from_terms(p.grading(), std::move(kept));
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, bool strict) {
  if (p.is_zero()) return Polynomial{};
  if (images.size() != p.num_vars())
    throw std::invalid_argument("substitute: expected " + std::to_string(p.num_vars()) +
                                " images, got " + std::to_string(images.size()));
  GradingPtr target;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Polynomial& im = images[i];
    if (!target && im.grading()) target = im.grading();
    if (strict && !im.is_zero()) {
      auto d = im.homogeneous_degree();
      if (!d || *d != p.grading()->weight(i))
        throw std::invalid_argument("substitute: image of " + p.grading()->name(i) +
                                    " is not homogeneous of degree " +
                                    std::to_string(p.grading()->weight(i)));
    }
  }
  if (!target) {
    // All images are ungraded zeros: only the constant term survives.
    for (const auto& t : p.terms())
      if (t.monomial.is_one()) throw std::invalid_argument("substitute: no target grading");
    return Polynomial{};
  }
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.monomial.size() && !term.is_zero(); ++i)
      if (t.monomial[i] > 0) term *= power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

std::vector<Polynomial> truncated_inverse_series(int k, int max_r) {
  if (k < 1) throw std::invalid_argument("truncated_inverse_series: k must be positive");
  if (max_r < 0) throw std::invalid_argument("truncated_inverse_series: max_r must be >= 0");
  const GradingPtr g = Grading::chern(k);
  std::vector<Polynomial> h;
  h.reserve(max_r + 1);
  h.push_back(Polynomial::constant(g, 1));
  for (int r = 1; r <= max_r; ++r) {
    Polynomial acc(g);
    for (int i = 1; i <= std::min(k, r); ++i) acc += Polynomial::variable(g, i - 1) * h[r - i];
    h.push_back(-acc);
  }
  return h;
}

namespace {

void enumerate_monomials(const Grading& g, std::size_t var, int remaining, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (var == g.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = g.weight(var);
  for (int e = 0; e * w <= remaining; ++e) {
    cur[var] = e;
    enumerate_monomials(g, var + 1, remaining - e * w, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Grading& grading, int r) {
  std::vector<Monomial> out;
  if (r < 0) return out;
  Monomial cur(grading.size());
  enumerate_monomials(grading, 0, r, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return grading.compare(a, b) > 0; });
  return out;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += grading_->name(i);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << factors;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, GradingPtr g) : s_(text), g_(std::move(g)) {}

  Polynomial parse() {
    Polynomial result(g_);
    skip();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    result += parse_term() * Rational(sign);
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      result += parse_term() * Rational(op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what + " in '" + std::string(s_) + "'");
  }

  Polynomial parse_term() {
    Rational coeff = 1;
    Monomial m(g_->size());
    bool any = false;
    for (;;) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
          ++pos_;
        coeff *= parse_rational(s_.substr(start, pos_ - start));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          ++pos_;
        const std::string name(s_.substr(start, pos_ - start));
        const auto& names = g_->names();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown variable '" + name + "'");
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          std::size_t es = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (es == pos_) fail("expected exponent");
          e = std::stoi(std::string(s_.substr(es, pos_ - es)));
        }
        m[static_cast<std::size_t>(it - names.begin())] += e;
      } else {
        fail("expected coefficient or variable");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return Polynomial::monomial(g_, m, coeff);
  }

  std::string_view s_;
  GradingPtr g_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, GradingPtr grading) {
  return PolyParser(text, std::move(grading)).parse();
}

}  // namespace grassmann
