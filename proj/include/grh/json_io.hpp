#pragma once

#include <json.hpp>

#include "grh/rh_table.hpp"
#include "grh/shaft.hpp"

namespace grh {

// Insertion-ordered so identical invocations print byte-identical output.
using Json = nlohmann::ordered_json;

// Rationals serialize as "n" / "n/d" strings, floats as JSON numbers.
Json scalar_json(const Scalar& s);

Json verdict_json(const StabilityVerdict& v);

// degree, mode, levels, pivots, scaling_log, verdict, first_failing_index,
// marginal, complete.
Json table_json(const RHTable& t);

Json shaft_json(const ShaftParams& p, const ComplexPolynomial& q,
                const std::array<Scalar, 3>& conditions, const StabilityVerdict& v);

}  // namespace grh
