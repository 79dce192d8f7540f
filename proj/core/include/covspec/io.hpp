#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "covspec/cov_spectrum.hpp"
#include "covspec/delta_cover.hpp"
#include "covspec/heisenberg.hpp"
#include "covspec/lattice.hpp"
#include "covspec/metric_graph.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

/// Floats in tables are written with 12 significant digits.
std::string format_float(double x);

/// {"kind": "rational"|"quadratic"|"float", "num", "den", "float"}; for a
/// quadratic value num/den give the radicand.
nlohmann::json to_json(const LengthValue& v);
LengthValue length_from_json(const nlohmann::json& j, Unit unit = Unit::one);

/// {"unit": ..., "entries": [{"value": ..., "mult": n}]}
nlohmann::json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);

/// Rows "value,mult,unit,exact".
std::string spectrum_csv(const Spectrum& s, bool header = true);

/// Accepts a JSON number, an integer, or a string such as "3/8" or "0.125".
Rational rational_from_json(const nlohmann::json& j);

/// {"vertices": n, "edges": [{"u": i, "v": j, "len": {"num": p, "den": q}}], "unit": "1"|"pi"};
/// "len" may also be a plain number or rational string.
MetricGraph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MetricGraph& g);

/// Square matrix of rationals, rows are basis vectors.
std::vector<std::vector<Rational>> matrix_from_json(const nlohmann::json& j);

/// {"n": 2, "r": [...], "s": [...], "c": 1, "a": ["1/8", "1/2"]}
HeisenbergManifold heisenberg_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DeckGroupReport& r);

template <MarkedGroupBackend B>
nlohmann::json result_to_json(const B& backend, const CoveringSpectrumResult<typename B::Element>& result) {
  auto list = [&](const std::vector<typename B::Element>& elements) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : elements) a.push_back(backend.describe(e));
    return a;
  };
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& step : result.chain.steps)
    chain.push_back({{"delta", to_json(step.delta)},
                     {"classes", list(step.value_classes)},
                     {"short_basis", list(step.short_basis)},
                     {"mult", step.multiplicity}});
  return {{"spectrum", to_json(result.spectrum)}, {"chain", chain}, {"complete", result.chain.complete}};
}

}  // namespace covspec
