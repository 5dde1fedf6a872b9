#pragma once

// Structured (JSON) and text renderings of the library's value types. Big
// integers are always rendered as decimal strings so arbitrary precision
// survives serialization.

#include <string>

#include <nlohmann/json.hpp>

#include "schub/matrix.hpp"
#include "schub/polynomial.hpp"
#include "schub/stanley.hpp"
#include "schub/verify.hpp"

namespace schub {

// List of {exponents: [..], coeff: "decimal"} in canonical term order.
nlohmann::json to_json(const Poly& f);

// Rows as lists of decimal strings.
nlohmann::json to_json(const IntMatrix& m);

nlohmann::json to_json(const StanleyReport& r);

nlohmann::json to_json(const SuiteResult& r);

std::string to_text(const StanleyReport& r);

// Multi-line: per-item lines followed by a one-line summary.
std::string to_text(const SuiteResult& r);

}  // namespace schub
