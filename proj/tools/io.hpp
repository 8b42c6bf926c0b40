#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "siegel/cosets.hpp"
#include "siegel/mu8.hpp"
#include "siegel/symplectic.hpp"

namespace siegel::cli {

using nlohmann::json;

// Malformed or out-of-domain user input; mapped to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file path, or an inline JSON document if the argument starts with '{'.
json load_document(const std::string& arg);

// {"m": m, "entries": [[...]]}; entries must be n×n with n = rows. "m" is optional.
IntMat parse_int_matrix(const json& doc);
IntegerSymplectic parse_symplectic(const json& doc);
// {"re": [[...]], "im": [[...]]}
SiegelPoint parse_siegel_point(const json& doc);
// "01|10" or "0110"
F2Vector parse_f2_vector(const std::string& s, std::size_t m);

json to_json(const IntMat& m);
json to_json(std::complex<double> z);
json to_json(Mu8 v);

}  // namespace siegel::cli
