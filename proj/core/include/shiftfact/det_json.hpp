#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "shiftfact/detform.hpp"

namespace shiftfact::det {

/// Malformed or schema-violating determinant document.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDocumentSchema = 1;

template <Field T>
struct DetDocument {
  DeterminantSpec<T> spec;
  NodeSet<T> nodes;
};

/// Parses {"schema":1, "kind":..., "s":..., "params":{...}, "nodes":[...]}.
///
/// Scalars may be a JSON number, a [re, im] pair, or a string literal such as
/// "1-2i" or "3/4". `params` may hold "a", "b", "t" (scalars) and "offsets",
/// "w" (arrays). The exact variant rejects values with an imaginary part.
DetDocument<Complex> parse_det_document(std::string_view text);
DetDocument<Rational> parse_det_document_exact(std::string_view text);

std::string det_document_to_json(const DetDocument<Complex>& doc);

/// The document fields plus closed_form, oracle and residual ([re, im] pairs,
/// null when absent).
std::string det_result_to_json(const DetDocument<Complex>& doc, const DetResult& result);

}  // namespace shiftfact::det
