#pragma once

// JSON file formats:
//   algebra   {"name": string, "cartan": [[int]]}
//   series    {"coeffs": [int], "order": int}
//   polynomial {"coeffs": [int]}
//   fit       {"numerator": [int], "denominator": [int], "verified_to": int, "slack": int}
//   elements  JSON Lines {"length": int, "image": [int], "word": [int]}

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "kmp/lattice.hpp"
#include "kmp/polyseries.hpp"
#include "kmp/ratfit.hpp"
#include "kmp/weyl_enum.hpp"

namespace kmp::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

CartanMatrix algebra_from_json(const Json& j);
Json algebra_to_json(const CartanMatrix& a);
// A built-in name, or else a path to an algebra file.
CartanMatrix load_algebra(std::string_view name_or_path);

TruncatedSeries series_from_json(const Json& j);
Json series_to_json(const TruncatedSeries& s);
IntPolynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const IntPolynomial& p);
Json fit_to_json(const RationalFit& fit);

// One line per element, ordered by (length, word).
void write_elements(std::ostream& out, const OrbitLevels& levels);

}  // namespace kmp::io
