#include "shiftfact/det_json.hpp"

#include <json.hpp>

#include "shiftfact/format.hpp"

namespace shiftfact::det {

namespace {

using nlohmann::json;

Complex complex_value(const json& v, const std::string& field) {
  try {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_string()) return parse_complex(v.get<std::string>());
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      return {v[0].get<double>(), v[1].get<double>()};
    }
  } catch (const std::exception& e) {
    throw DocumentError("field '" + field + "': " + e.what());
  }
  throw DocumentError("field '" + field + "' must be a number, [re, im] or a literal string");
}

Rational rational_value(const json& v, const std::string& field) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return Rational::parse(v.dump());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_array() && v.size() == 2 && v[1].is_number() && v[1].get<double>() == 0.0) {
      return rational_value(v[0], field);
    }
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw DocumentError("field '" + field + "': " + e.what());
  }
  throw DocumentError("field '" + field + "' must be a real rational for exact evaluation");
}

template <Field T>
T scalar_value(const json& v, const std::string& field) {
  if constexpr (is_exact_v<T>) {
    return rational_value(v, field);
  } else {
    return complex_value(v, field);
  }
}

template <Field T>
std::vector<T> scalar_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw DocumentError("field '" + field + "' must be an array");
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(scalar_value<T>(v[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

template <Field T>
DetDocument<T> parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw DocumentError("document must be a JSON object");
  if (!root.contains("schema") || root["schema"] != kDocumentSchema) {
    throw DocumentError("unsupported or missing schema (expected 1)");
  }
  if (!root.contains("kind") || !root["kind"].is_string()) throw DocumentError("missing string field 'kind'");
  const auto kind = parse_kind(root["kind"].get<std::string>());
  if (!kind) throw DocumentError("unknown kind '" + root["kind"].get<std::string>() + "'");
  if (!root.contains("nodes")) throw DocumentError("missing field 'nodes'");

  DetDocument<T> doc;
  doc.spec.kind = *kind;
  if (root.contains("s")) doc.spec.s = scalar_value<T>(root["s"], "s");
  if (root.contains("params")) {
    const json& params = root["params"];
    if (!params.is_object()) throw DocumentError("field 'params' must be an object");
    for (const auto& [key, value] : params.items()) {
      if (key == "a") {
        doc.spec.a = scalar_value<T>(value, "params.a");
      } else if (key == "b") {
        doc.spec.b = scalar_value<T>(value, "params.b");
      } else if (key == "t") {
        doc.spec.t = complex_value(value, "params.t");
      } else if (key == "offsets") {
        doc.spec.offsets = scalar_list<T>(value, "params.offsets");
      } else if (key == "w") {
        doc.spec.second = scalar_list<T>(value, "params.w");
      } else {
        throw DocumentError("unknown parameter '" + key + "'");
      }
    }
  }
  auto nodes = scalar_list<T>(root["nodes"], "nodes");
  if (nodes.empty()) throw DocumentError("field 'nodes' must not be empty");
  doc.nodes = NodeSet<T>(std::move(nodes));
  return doc;
}

json pair(Complex v) { return json::array({v.real(), v.imag()}); }

json pair_list(const std::vector<Complex>& values) {
  json out = json::array();
  for (const Complex& v : values) out.push_back(pair(v));
  return out;
}

json document_json(const DetDocument<Complex>& doc) {
  const auto& info = kind_info(doc.spec.kind);
  json root;
  root["schema"] = kDocumentSchema;
  root["kind"] = std::string(info.name);
  root["s"] = pair(doc.spec.s);
  json params = json::object();
  if (info.uses_ab) {
    params["a"] = pair(doc.spec.a);
    params["b"] = pair(doc.spec.b);
  }
  if (info.uses_t) params["t"] = pair(doc.spec.t);
  if (info.uses_offsets) params["offsets"] = pair_list(doc.spec.offsets);
  if (info.two_sets) params["w"] = pair_list(doc.spec.second);
  root["params"] = params;
  root["nodes"] = pair_list(std::vector<Complex>(doc.nodes.begin(), doc.nodes.end()));
  return root;
}

}  // namespace

DetDocument<Complex> parse_det_document(std::string_view text) { return parse_document<Complex>(text); }

DetDocument<Rational> parse_det_document_exact(std::string_view text) {
  return parse_document<Rational>(text);
}

std::string det_document_to_json(const DetDocument<Complex>& doc) { return document_json(doc).dump(); }

std::string det_result_to_json(const DetDocument<Complex>& doc, const DetResult& result) {
  json root = document_json(doc);
  root["closed_form"] = result.closed_form ? pair(*result.closed_form) : json(nullptr);
  root["oracle"] = result.oracle ? pair(*result.oracle) : json(nullptr);
  root["residual"] = result.residual ? json(*result.residual) : json(nullptr);
  return root.dump();
}

}  // namespace shiftfact::det
