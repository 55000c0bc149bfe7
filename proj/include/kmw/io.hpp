#pragma once

// JSON documents: problem input, weight sets, series and verification reports.
// Rationals and big integers travel as decimal strings ("p/q", lowest terms).

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/modweights.hpp"
#include "kmw/oracle.hpp"
#include "kmw/series.hpp"
#include "kmw/verify.hpp"
#include "kmw/weights.hpp"

namespace kmw {

using nlohmann::json;

/// Input document: {"cartan": [[...]], "lambda": ["3", "-5/2", ...],
/// "labels": [...], "method": ..., "height": ..., "depth": ...}.
/// Only "cartan" is required.
struct ProblemSpec {
  CartanMatrix cartan;
  std::optional<HighestWeight> lambda;
  bool explicit_labels = false;
  std::optional<std::string> method;
  std::optional<std::int64_t> height;
  std::optional<std::int64_t> depth;

  const HighestWeight& require_lambda() const {
    if (!lambda) throw InputError("input document has no \"lambda\" field");
    return *lambda;
  }
};

inline json rational_array(const std::vector<Rational>& q) {
  json a = json::array();
  for (const auto& x : q) a.push_back(to_string(x));
  return a;
}

inline json to_json(const SignedOffset& v) { return json(v.values()); }

inline json to_json(const NodeSet& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

inline ProblemSpec problem_from_json(const json& doc) {
  ProblemSpec p;
  p.cartan = gcm_from_json(doc);
  p.explicit_labels = doc.contains("labels");
  if (doc.contains("lambda")) {
    const auto& l = doc.at("lambda");
    if (!l.is_array()) throw InputError("\"lambda\" must be an array of rational strings");
    std::vector<std::string> text;
    for (const auto& x : l) {
      if (!x.is_string()) throw InputError("\"lambda\" entries must be strings such as \"3\" or \"-5/2\", got " + x.dump());
      text.push_back(x.get<std::string>());
    }
    p.lambda = HighestWeight::parse(text);
    check_rank(*p.lambda, p.cartan);
  }
  auto opt_int = [&](const char* key) -> std::optional<std::int64_t> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc.at(key).is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
    return doc.at(key).get<std::int64_t>();
  };
  if (doc.contains("method")) {
    if (!doc.at("method").is_string()) throw InputError("\"method\" must be a string");
    p.method = doc.at("method").get<std::string>();
  }
  p.height = opt_int("height");
  p.depth = opt_int("depth");
  return p;
}

inline ProblemSpec parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON document: ") + e.what());
  }
  return problem_from_json(doc);
}

inline ProblemSpec read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_problem(text);
}

inline json to_json(const ProblemSpec& p) {
  json doc;
  doc["cartan"] = p.cartan.entries();
  if (p.explicit_labels) doc["labels"] = p.cartan.labels();
  if (p.lambda) doc["lambda"] = rational_array(p.lambda->pairings());
  if (p.method) doc["method"] = *p.method;
  if (p.height) doc["height"] = *p.height;
  if (p.depth) doc["depth"] = *p.depth;
  return doc;
}

inline json classification_to_json(const CartanMatrix& g) {
  json comps = json::array();
  for (const auto& c : classify(g)) {
    json labels = json::array();
    for (auto i : c.nodes) labels.push_back(g.labels()[i]);
    comps.push_back({{"nodes", to_json(c.nodes)}, {"labels", labels}, {"type", to_string(c.type)}});
  }
  json doc{{"rank", g.size()}, {"labels", g.labels()}, {"components", comps}};
  if (auto d = symmetrizer(g))
    doc["symmetrizer"] = rational_array(*d);
  else
    doc["symmetrizer"] = nullptr;
  return doc;
}

inline json roots_to_json(const std::set<SignedOffset>& roots, const char* kind, std::int64_t H) {
  json list = json::array();
  for (const auto& r : roots) list.push_back(to_json(r));
  return {{"kind", kind}, {"height", H}, {"roots", list}};
}

/// Weight set with the pairings (h_i, mu) of every weight mu = lambda - c.
inline json weightset_to_json(const WeightSet& ws, const HighestWeight& lambda, const CartanMatrix& g) {
  json weights = json::array();
  for (const auto& c : ws.members) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < g.size(); ++i) p.push_back(pairing(lambda, g, c, i));
    weights.push_back({{"offset", to_json(c)}, {"pairings", rational_array(p)}});
  }
  json doc{{"method", to_string(ws.method)},
           {"height", ws.height},
           {"rank", g.size()},
           {"labels", g.labels()},
           {"lambda", rational_array(lambda.pairings())},
           {"integrability", to_json(integrability_set(lambda))},
           {"count", ws.members.size()},
           {"weights", weights}};
  if (ws.depth) doc["depth"] = *ws.depth;
  if (ws.method == Method::Oracle) doc["advisory"] = oracle_is_advisory(g);
  return doc;
}

/// Sorted {offset, coefficient} records; coefficients as decimal strings.
inline json series_to_json(const TruncSeries& s) {
  json terms = json::array();
  for (const auto& [c, a] : s.terms()) terms.push_back({{"offset", to_json(c)}, {"coefficient", a.get_str()}});
  return {{"height", s.bound()}, {"terms", terms}};
}

inline json laurent_to_json(const LaurentElt& s) {
  json terms = json::array();
  for (const auto& [v, a] : s.terms()) terms.push_back({{"exponent", to_json(v)}, {"coefficient", a.get_str()}});
  return terms;
}

inline json report_to_json(const DenominatorReport& r) {
  return {{"check", "denominator"},           {"status", to_string(r.status)},
          {"roots", r.roots},                 {"bases", r.bases},
          {"lhs_terms", r.lhs.terms().size()}, {"difference", laurent_to_json(r.difference)}};
}

inline json report_to_json(const MacdonaldReport& r) {
  return {{"check", "macdonald"}, {"status", to_string(r.status)}, {"lhs", series_to_json(r.lhs)},
          {"rhs", series_to_json(r.rhs)}};
}

inline json report_to_json(const WkwReport& r) {
  return {{"check", "wkw"},
          {"status", to_string(r.status)},
          {"stabilizer_finite", r.stabilizer_finite},
          {"coefficients_01", r.coefficients_01},
          {"support_equal", r.support_equal},
          {"weight_count", r.weights.members.size()},
          {"discrepancy", series_to_json(r.discrepancy)}};
}

inline json report_to_json(const IntegrabilityReport& r) {
  return {{"check", "integrability"},
          {"status", to_string(r.status)},
          {"integrability", to_json(r.integrability)},
          {"preserving", to_json(r.preserving)}};
}

inline json report_to_json(const CrossReport& r) {
  json sets = json::array();
  for (const auto& s : r.sets) sets.push_back({{"method", to_string(s.method)}, {"count", s.members.size()}});
  return {{"check", "cross"}, {"status", to_string(r.status)}, {"methods", sets}, {"skipped", r.skipped}};
}

}  // namespace kmw
