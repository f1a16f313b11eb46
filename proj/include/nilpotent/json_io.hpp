#pragma once

#include "nilpotent/collector.hpp"
#include "nilpotent/group_law.hpp"
#include "nilpotent/hall_basis.hpp"
#include "nilpotent/magnus.hpp"
#include "nilpotent/trunc_series.hpp"
#include "nilpotent/unitriangular.hpp"

#include <json.hpp>

#include <ostream>

namespace nilpotent::json_io {

using Json = nlohmann::ordered_json;

// [{"index": k, "weight": w, "expr": "[[x2,x1],x2]"}, ...]
Json basis_to_json(const HallBasis &basis);
/// Rebuilds the basis from (q, c) and checks it against the entries.
HallBasis basis_from_json(const Json &j, int q, int c);

// {"q": q, "c": c, "exponents": ["...", ...]}
Json element_to_json(const GroupElement &g);
GroupElement element_from_json(const Json &j);

// {"D": D, "ring": "Z"|"Q"|"Fp:p", "terms": [{"mono": [...], "coeff": "..."}]}
Json series_to_json(const TruncSeries &s);
TruncSeries series_from_json(const Json &j);

Json witness_to_json(const Witness &w);
Witness witness_from_json(const Json &j);

// {"n": n, "ring": "...", "rows": [["...", ...], ...]}
Json matrix_to_json(const UniTriMatrix &m);
UniTriMatrix matrix_from_json(const Json &j);
/// Streams the same document row by row without materialising it.
void write_matrix_json(std::ostream &out, const UniTriMatrix &m);

// [{"coeff": "<int>", "factors": [{"var": "xi_2", "r": 1}, ...]}, ...]
Json polynomial_to_json(const IntPolynomial &p);
IntPolynomial polynomial_from_json(const Json &j);

// {"q": q, "c": c, "zeta": [poly...], "omega": [poly...]}
Json group_law_to_json(const GroupLaw &law);
GroupLaw group_law_from_json(const Json &j);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse(const std::string &text);

} // namespace nilpotent::json_io
