#include "io.hpp"

#include <fstream>
#include <sstream>

namespace siegel::cli {

json load_document(const std::string& arg) {
    try {
        if (!arg.empty() && arg.front() == '{') return json::parse(arg);
        std::ifstream in(arg);
        if (!in) throw InputError("cannot open " + arg);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + (arg.size() > 40 ? arg.substr(0, 40) + "…" : arg) + ": " + e.what());
    }
}

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

template <class F>
void for_rows(const json& rows, F&& f) {
    if (!rows.is_array() || rows.empty()) throw InputError("matrix entries must be a non-empty array of rows");
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n) throw InputError("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) f(i, j, row[j]);
    }
}

}  // namespace

IntMat parse_int_matrix(const json& doc) {
    const json& rows = field(doc, "entries");
    IntMat out(rows.is_array() ? rows.size() : 0, rows.is_array() ? rows.size() : 0);
    for_rows(rows, [&](std::size_t i, std::size_t j, const json& v) {
        if (v.is_number_integer()) out(i, j) = Int(v.get<long>());
        else if (v.is_string()) {
            try {
                out(i, j) = Int(v.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw InputError("not an integer: " + v.get<std::string>());
            }
        } else throw InputError("matrix entries must be integers");
    });
    return out;
}

IntegerSymplectic parse_symplectic(const json& doc) {
    const IntMat g = parse_int_matrix(doc);
    if (doc.contains("m") && (!doc["m"].is_number_integer() || 2 * doc["m"].get<std::size_t>() != g.rows()))
        throw InputError("\"m\" does not match the matrix size");
    try {
        return IntegerSymplectic(g);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

SiegelPoint parse_siegel_point(const json& doc) {
    const json& re = field(doc, "re");
    const json& im = field(doc, "im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size()) throw InputError("re and im must have the same shape");
    const auto n = static_cast<Eigen::Index>(re.size());
    CplxMat z(n, n);
    for_rows(re, [&](std::size_t i, std::size_t j, const json& v) {
        if (!v.is_number()) throw InputError("entries of re must be numbers");
        z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v.get<double>();
    });
    for_rows(im, [&](std::size_t i, std::size_t j, const json& v) {
        if (!v.is_number()) throw InputError("entries of im must be numbers");
        z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += std::complex<double>(0, v.get<double>());
    });
    try {
        return SiegelPoint(z);
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

F2Vector parse_f2_vector(const std::string& s, std::size_t m) {
    std::vector<int> bits;
    for (char c : s) {
        if (c == '|' || c == ' ') continue;
        if (c != '0' && c != '1') throw InputError("component label must be a bit string such as 01|10");
        bits.push_back(c - '0');
    }
    if (bits.size() != 2 * m) throw InputError("component label needs " + std::to_string(2 * m) + " bits");
    return F2Vector(bits);
}

json to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).fits_slong_p()) row.push_back(m(i, j).get_si());
            else row.push_back(m(i, j).get_str());
        }
        rows.push_back(row);
    }
    return rows;
}

json to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(Mu8 v) { return {{"exponent", v.exponent()}, {"value", to_json(v.value())}}; }

}  // namespace siegel::cli
