#include "kmp/io.hpp"

#include <fstream>
#include <ostream>

#include "kmp/catalog.hpp"
#include "kmp/error.hpp"

namespace kmp::io {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

CartanMatrix algebra_from_json(const Json& j) {
  try {
    const auto rows = j.at("cartan").get<std::vector<std::vector<std::int64_t>>>();
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string{};
    return CartanMatrix::validate(rows, std::move(name));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("algebra file: ") + e.what());
  }
}

Json algebra_to_json(const CartanMatrix& a) {
  Json j;
  j["name"] = a.name();
  j["cartan"] = a.rows();
  return j;
}

CartanMatrix load_algebra(std::string_view name_or_path) {
  try {
    return builtin_algebra(name_or_path);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownAlgebra) throw;
  }
  std::ifstream probe{std::string(name_or_path)};
  if (!probe) {
    throw Error(ErrorCode::UnknownAlgebra,
                std::string(name_or_path) + " is neither a built-in algebra nor a readable file");
  }
  return algebra_from_json(read_json_file(std::string(name_or_path)));
}

TruncatedSeries series_from_json(const Json& j) {
  try {
    auto coeffs = j.at("coeffs").get<std::vector<Coeff>>();
    if (coeffs.empty()) throw Error(ErrorCode::ParseError, "series has no coefficients");
    if (j.contains("order")) {
      const int order = j.at("order").get<int>();
      if (order + 1 != static_cast<int>(coeffs.size())) {
        throw Error(ErrorCode::ParseError, "series order does not match its coefficient count");
      }
    }
    return TruncatedSeries(std::move(coeffs));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("series file: ") + e.what());
  }
}

Json series_to_json(const TruncatedSeries& s) {
  Json j;
  j["coeffs"] = s.coeffs();
  j["order"] = s.order();
  return j;
}

IntPolynomial polynomial_from_json(const Json& j) {
  try {
    return IntPolynomial(j.at("coeffs").get<std::vector<Coeff>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("polynomial file: ") + e.what());
  }
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json j;
  j["coeffs"] = p.coeffs();
  return j;
}

Json fit_to_json(const RationalFit& fit) {
  Json j;
  j["numerator"] = fit.numerator.coeffs();
  j["denominator"] = fit.denominator.coeffs();
  j["verified_to"] = fit.verified_to;
  j["slack"] = fit.slack;
  return j;
}

void write_elements(std::ostream& out, const OrbitLevels& levels) {
  for (std::size_t k = 0; k < levels.elements.size(); ++k) {
    for (const auto& rec : levels.elements[k]) {
      Json j;
      j["length"] = k;
      j["image"] = rec.image.coords;
      j["word"] = rec.word.letters;
      out << j.dump() << '\n';
    }
  }
}

}  // namespace kmp::io
