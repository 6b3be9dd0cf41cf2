#include "repst/json_io.hpp"

namespace repst {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("json: " + what); }

std::vector<std::vector<std::size_t>> blocks_from_json(const Json& j) {
  if (!j.is_array()) bad("blocks must be an array");
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : j) blocks.push_back(b.get<std::vector<std::size_t>>());
  return blocks;
}

}  // namespace

Json to_json(const SetPartition& p) { return Json{{"n", p.ground_size()}, {"blocks", p.blocks()}}; }

SetPartition partition_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("blocks")) bad("partition needs n and blocks");
  return SetPartition::from_blocks(j.at("n").get<std::size_t>(), blocks_from_json(j.at("blocks")));
}

Json to_json(const Rational& q) { return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("rational needs num and den");
  auto part = [&](const char* key) {
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Integer(v.get<long>());
    Integer z;
    if (!v.is_string() || z.set_str(v.get<std::string>(), 10) != 0) bad(std::string("malformed integer in ") + key);
    return z;
  };
  Integer den = part("den");
  if (den == 0) throw DomainError("json: zero denominator");
  Rational q(part("num"), den);
  q.canonicalize();
  return q;
}

Json to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) bad("polynomial needs coeffs");
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return Poly(std::move(c));
}

Json to_json(const Scalar& s) {
  switch (s.kind()) {
    case Scalar::Kind::Rational: return to_json(s.rational());
    case Scalar::Kind::Poly: return to_json(s.num());
    case Scalar::Kind::RatFun: return Json{{"num", to_json(s.num())}, {"den", to_json(s.den())}};
  }
  return {};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_object()) bad("scalar must be an object or string");
  if (j.contains("coeffs")) return Scalar(poly_from_json(j));
  if (j.contains("num") && j.at("num").is_object()) {
    Poly den = poly_from_json(j.at("den"));
    if (den.is_zero()) throw DomainError("json: zero denominator polynomial");
    return Scalar(poly_from_json(j.at("num")), den);
  }
  return Scalar(rational_from_json(j));
}

Json to_json(const Morphism& m) {
  Json terms = Json::array();
  for (const auto& [d, c] : m.sorted_terms()) terms.push_back(Json{{"blocks", d.partition.blocks()}, {"coeff", to_json(c)}});
  return Json{{"dom", m.dom()}, {"cod", m.cod()}, {"terms", terms}};
}

Morphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("terms"))
    bad("morphism needs dom, cod and terms");
  const auto a = j.at("dom").get<std::size_t>(), b = j.at("cod").get<std::size_t>();
  Morphism m(a, b);
  for (const auto& t : j.at("terms")) {
    if (!t.contains("blocks") || !t.contains("coeff")) bad("term needs blocks and coeff");
    m.add_term(Diagram::from_blocks(a, b, blocks_from_json(t.at("blocks"))), scalar_from_json(t.at("coeff")));
  }
  return m;
}

Json to_json(const KObject& x) { return Json{{"ambient", x.ambient}, {"idem", to_json(x.idem)}}; }

KObject kobject_from_json(const Json& j) {
  if (!j.contains("ambient") || !j.contains("idem")) bad("object needs ambient and idem");
  return KObject(j.at("ambient").get<std::size_t>(), morphism_from_json(j.at("idem")));
}

Json to_json(const AlgebraObject& a) {
  Json gens = Json::array();
  for (const auto& g : a.subgroup) gens.push_back(g.to_cycles());
  return Json{{"ambient", a.k()},
              {"subgroup", gens},
              {"idem", to_json(a.idem())},
              {"mult", to_json(a.mult)},
              {"unit", to_json(a.unit)}};
}

AlgebraObject algebra_from_json(const Json& j) {
  for (const char* key : {"ambient", "idem", "mult", "unit"})
    if (!j.contains(key)) bad(std::string("algebra needs ") + key);
  AlgebraObject a;
  const auto k = j.at("ambient").get<std::size_t>();
  a.carrier = KObject(k, morphism_from_json(j.at("idem")));
  a.mult = morphism_from_json(j.at("mult"));
  a.unit = morphism_from_json(j.at("unit"));
  if (a.mult.dom() != 2 * k || a.mult.cod() != k) bad("mult must be 2k -> k");
  if (a.unit.dom() != 0 || a.unit.cod() != k) bad("unit must be 0 -> k");
  if (j.contains("subgroup"))
    for (const auto& g : j.at("subgroup")) {
      auto gens = parse_generators(k, g.get<std::string>());
      a.subgroup.insert(a.subgroup.end(), gens.begin(), gens.end());
    }
  return a;
}

Json to_json(const FiberMatrix& m) {
  Json entries = Json::array();
  for (const auto& [rc, v] : m.entries) entries.push_back(Json::array({rc.first, rc.second, to_json(v)}));
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

}  // namespace repst
