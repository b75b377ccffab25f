#include "grassmann/ring_io.hpp"

namespace grassmann {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json spec_to_json(const RingSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["k"] = spec.k;
  return j;
}

RingSpec spec_from_json(const Json& j) {
  try {
    return RingSpec::presentation(field<int>(j, "n"), field<int>(j, "k"));
  } catch (const InvalidSpec& e) {
    throw FormatError(std::string("invalid spec: ") + e.what());
  }
}

Json monomial_to_json(const Monomial& m) { return Json(m.exponents); }

Monomial monomial_from_json(const Json& j, std::size_t num_vars) {
  if (!j.is_array() || j.size() != num_vars) throw FormatError("monomial: wrong exponent count");
  Monomial m(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (!j[i].is_number_integer() || j[i].get<int>() < 0) throw FormatError("monomial: bad exponent");
    m[i] = j[i].get<int>();
  }
  return m;
}

Json ring_to_json(const RingTable& ring) {
  Json j;
  j["schema"] = kRingSchema;
  j["spec"] = spec_to_json(ring.spec());
  Json rels = Json::array();
  for (const auto& h : ring.relations()) rels.push_back(h.to_string());
  j["relations"] = std::move(rels);
  Json degrees = Json::array();
  for (int r = 0; r <= ring.dimension(); ++r) {
    const auto& s = ring.slice(r);
    Json d;
    d["degree"] = r;
    Json mons = Json::array();
    for (const auto& m : s.monomials) mons.push_back(monomial_to_json(m));
    d["monomials"] = std::move(mons);
    d["basis"] = s.basis;
    d["unit_pivots"] = s.unit_pivots;
    Json red = Json::array();
    for (Index i = 0; i < s.reduction.rows(); ++i) {
      Json row = Json::array();
      for (Index c = 0; c < s.reduction.cols(); ++c) row.push_back(rational_to_string(s.reduction(i, c)));
      red.push_back(std::move(row));
    }
    d["reduction"] = std::move(red);
    degrees.push_back(std::move(d));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

RingPtr ring_from_json(const Json& j) {
  if (field<std::string>(j, "schema") != kRingSchema)
    throw FormatError("ring table: unsupported schema '" + field<std::string>(j, "schema") + "'");
  const RingSpec spec = spec_from_json(member(j, "spec"));
  const GradingPtr g = Grading::chern(spec.k);
  const auto k = static_cast<std::size_t>(spec.k);

  const auto expected = grassmann_relations(spec);
  const Json& rels = member(j, "relations");
  if (!rels.is_array() || rels.size() != expected.size()) throw FormatError("ring table: wrong relation count");
  std::vector<Polynomial> relations;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    Polynomial h;
    try {
      h = Polynomial::parse(rels[i].get<std::string>(), g);
    } catch (const std::exception& e) {
      throw FormatError(std::string("ring table: relation ") + std::to_string(i) + ": " + e.what());
    }
    if (!(h == expected[i])) throw FormatError("ring table: relation " + std::to_string(i) + " disagrees with the presentation");
    relations.push_back(std::move(h));
  }

  const Json& degrees = member(j, "degrees");
  if (!degrees.is_array() || static_cast<int>(degrees.size()) != spec.complex_dimension() + 1)
    throw FormatError("ring table: expected one entry per degree");
  std::vector<DegreeSlice> slices;
  for (int r = 0; r <= spec.complex_dimension(); ++r) {
    const Json& d = degrees[static_cast<std::size_t>(r)];
    if (field<int>(d, "degree") != r) throw FormatError("ring table: degrees out of order");
    DegreeSlice s;
    for (const auto& m : member(d, "monomials")) {
      s.monomials.push_back(monomial_from_json(m, k));
      if (g->degree(s.monomials.back()) != r) throw FormatError("ring table: monomial in wrong degree");
    }
    s.basis = field<std::vector<Index>>(d, "basis");
    for (Index b : s.basis)
      if (b < 0 || b >= static_cast<Index>(s.monomials.size())) throw FormatError("ring table: basis index out of range");
    s.unit_pivots = field<bool>(d, "unit_pivots");
    const Json& red = member(d, "reduction");
    if (!red.is_array() || red.size() != s.monomials.size()) throw FormatError("ring table: reduction row count");
    s.reduction.resize(static_cast<Index>(s.monomials.size()), static_cast<Index>(s.basis.size()));
    for (std::size_t i = 0; i < red.size(); ++i) {
      if (!red[i].is_array() || red[i].size() != s.basis.size()) throw FormatError("ring table: reduction column count");
      for (std::size_t c = 0; c < s.basis.size(); ++c) {
        try {
          s.reduction(static_cast<Index>(i), static_cast<Index>(c)) = parse_rational(red[i][c].get<std::string>());
        } catch (const std::exception& e) {
          throw FormatError(std::string("ring table: reduction entry: ") + e.what());
        }
      }
    }
    slices.push_back(std::move(s));
  }
  try {
    return std::make_shared<const RingTable>(spec, std::move(relations), std::move(slices));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace grassmann
