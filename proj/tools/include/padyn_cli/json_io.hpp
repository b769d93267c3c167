#pragma once

#include <string>

#include "json.hpp"
#include "padyn/bs.hpp"
#include "padyn/heisenberg.hpp"
#include "padyn/lattice.hpp"
#include "padyn/matrix.hpp"
#include "padyn/rational.hpp"
#include "padyn/shift.hpp"

namespace padyn::cli {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings (bare integers allowed on input).
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
/// Integer or "inf".
Json to_json(const Valuation& v);

Json to_json(const Matrix& m);
/// Square matrix given as an array of rows.
Matrix matrix_from_json(const Json& j);
Json vector_json(const Vector& v);

/// [[num, den, multiplicity], ...] with slopes descending.
Json slopes_json(const NewtonPolygon& polygon);

Json to_json(const HeisElement& g);
HeisElement heis_element_from_json(const Json& j, const PrimeContext& ctx);
Json to_json(const DiagAuto& alpha);
DiagAuto diag_auto_from_json(const Json& j);
Json trace_json(const std::vector<TraceStep>& trace);
std::vector<TraceStep> trace_from_json(const Json& j, const PrimeContext& ctx);

/// Builds a shift system from its declaration:
/// {"F": name-or-table, "split": {"N": [...], "H": [...]}, "left": ...,
///  "right": ..., "semidirect": bool, "components": [...], "shift": ...}.
ShiftSystem shift_system_from_json(const Json& j);
Json to_json(const ShiftSystem& sys, const SeqElement& e);
SeqElement seq_element_from_json(const ShiftSystem& sys, const Json& j);
Json to_json(const ShiftSystem& sys, const ProductSubgroup& s);

Json to_json(const SemiDirElement& g);
SemiDirElement semidir_from_json(const Json& j);

}  // namespace padyn::cli
