#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skein/skein_vector.hpp"
#include "skein/system.hpp"
#include "skein/tl_engine.hpp"

namespace skein {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& s);  // "json" | "csv" | "text"

/// "(num)/(u^a(1+u^2)^b)" or a bare Laurent polynomial in u.
LocalizedCoeff parse_localized(const std::string& s);

/// {"t^n": "coeff", ...}, descending labels.
Json to_json(const SkeinVector& v);
SkeinVector skein_vector_from_json(const Json& j);

/// {"s_1^2 s_3": "coeff", ...}, descending monomials; the constant is keyed "1".
Json to_json(const TracePolynomial& p);
TracePolynomial trace_polynomial_from_json(const Json& j);

Json to_json(const EquationRow& r);
Json to_json(const Elimination& e);
Json to_json(const Presentation& p);

/// Both equation systems truncated at N.
Json system_json(int N, Substitution sub);

/// One line per row: n,diagonal,rhs_support,rhs.
std::string equations_csv(const std::vector<EquationRow>& rows);

}  // namespace skein
