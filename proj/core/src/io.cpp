#include "covspec/io.hpp"

#include <cstdio>
#include <sstream>

#include "covspec/errors.hpp"

namespace covspec {

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ArgumentError("expected an integer, got " + j.dump());
}

}  // namespace

nlohmann::json to_json(const LengthValue& v) {
  nlohmann::json j;
  switch (v.kind()) {
    case LengthKind::exact_rational:
      j["kind"] = "rational";
      j["num"] = integer_json(v.rational_value().get_num());
      j["den"] = integer_json(v.rational_value().get_den());
      break;
    case LengthKind::exact_quadratic:
      j["kind"] = "quadratic";
      j["num"] = integer_json(v.radicand().get_num());
      j["den"] = integer_json(v.radicand().get_den());
      break;
    case LengthKind::floating:
      j["kind"] = "float";
      break;
  }
  j["float"] = v.to_double();
  return j;
}

LengthValue length_from_json(const nlohmann::json& j, Unit unit) {
  if (j.is_number() || j.is_string()) return LengthValue::rational(rational_from_json(j), unit);
  if (!j.is_object()) throw ArgumentError("malformed length " + j.dump());
  const std::string kind = j.value("kind", "rational");
  if (kind == "float") return LengthValue::real(j.at("float").get<double>(), unit);
  Rational q(integer_from_json(j.at("num")), integer_from_json(j.value("den", nlohmann::json(1))));
  if (q.get_den() == 0) throw ArgumentError("zero denominator in " + j.dump());
  q.canonicalize();
  if (kind == "rational") return LengthValue::rational(q, unit);
  if (kind == "quadratic") return LengthValue::sqrt_of(q, unit);
  throw ArgumentError("unknown length kind '" + kind + "'");
}

nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : s.entries()) entries.push_back({{"value", to_json(e.value)}, {"mult", e.multiplicity}});
  return {{"unit", unit_name(s.unit())}, {"entries", entries}};
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  const Unit unit = parse_unit(j.value("unit", "1"));
  Spectrum s(unit);
  for (const auto& e : j.at("entries")) s.insert(length_from_json(e.at("value"), unit), e.value("mult", 1L));
  return s;
}

std::string spectrum_csv(const Spectrum& s, bool header) {
  std::ostringstream out;
  if (header) out << "value,mult,unit,exact\n";
  for (const auto& e : s.entries())
    out << format_float(e.value.to_double()) << ',' << e.multiplicity << ',' << unit_name(s.unit()) << ','
        << (e.value.is_exact() ? e.value.to_string() : "") << '\n';
  return out.str();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_number_float()) {
    // Go through the shortest decimal text so 0.1 means 1/10.
    return parse_rational(j.dump());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object() && j.contains("num")) {
    Rational q(integer_from_json(j.at("num")), integer_from_json(j.value("den", nlohmann::json(1))));
    if (q.get_den() == 0) throw ArgumentError("zero denominator in " + j.dump());
    q.canonicalize();
    return q;
  }
  throw ArgumentError("expected a rational number, got " + j.dump());
}

MetricGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(), rational_from_json(e.at("len"))});
    return MetricGraph(n, std::move(edges), parse_unit(j.value("unit", "1")));
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError(std::string("malformed graph JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const MetricGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"len", {{"num", integer_json(e.length.get_num())}, {"den", integer_json(e.length.get_den())}}}});
  return {{"vertices", g.vertex_count()}, {"edges", edges}, {"unit", unit_name(g.unit())}};
}

std::vector<std::vector<Rational>> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ArgumentError("expected a matrix (array of rows)");
  std::vector<std::vector<Rational>> m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ArgumentError("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    m.push_back(std::move(r));
  }
  return m;
}

HeisenbergManifold heisenberg_from_json(const nlohmann::json& j) {
  try {
    HeisenbergManifold m;
    auto list = [&](const char* key) {
      std::vector<Rational> out;
      for (const auto& x : j.at(key)) out.push_back(rational_from_json(x));
      return out;
    };
    m.r = list("r");
    m.s = list("s");
    m.a = list("a");
    m.c = rational_from_json(j.at("c"));
    m.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(m.r.size());
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError(std::string("malformed Heisenberg parameters: ") + ex.what());
  }
}

nlohmann::json to_json(const DeckGroupReport& r) {
  nlohmann::json j{{"kind", to_string(r.kind)}};
  switch (r.kind) {
    case DeckGroupReport::Kind::finite:
      j["order"] = r.order;
      j["action"] = r.action;
      break;
    case DeckGroupReport::Kind::free_rank:
      j["rank"] = r.rank;
      break;
    case DeckGroupReport::Kind::indeterminate:
      break;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace covspec
