#include "matsos/matrixcert/serialize.hpp"

#include "matsos/errors.hpp"
#include "matsos/multipoly/parser.hpp"
#include "matsos/polymatrix/matrix_io.hpp"

#include <json.hpp>

#include <fstream>

namespace matsos {

namespace {

using nlohmann::json;
constexpr int kVersion = 1;

json rf_json(const RationalFunction& f, const VarSet& vars) {
    return json{{"num", print_poly(f.num(), vars)}, {"den", print_poly(f.den(), vars)}};
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("certificate: " + what, 0); }

const json& field(const json& obj, const char* key) {
    if (!obj.is_object()) bad(std::string("expected an object holding '") + key + "'");
    auto it = obj.find(key);
    if (it == obj.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

template <typename T>
T as(const json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        bad("field '" + what + "' has the wrong type");
    }
}

Polynomial poly_from(const json& j, const VarSet& vars, const std::string& what) {
    try {
        return parse_poly(as<std::string>(j, what), vars);
    } catch (const ParseError& e) {
        bad("field '" + what + "': " + e.what());
    }
}

RationalFunction rf_from(const json& j, const VarSet& vars, const std::string& what) {
    Polynomial num = poly_from(field(j, "num"), vars, what + ".num");
    Polynomial den = poly_from(field(j, "den"), vars, what + ".den");
    if (den.is_zero()) bad("field '" + what + "' has a zero denominator");
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace

std::string serialize_certificate(const MatrixSOSCert& cert) {
    const VarSet& vars = cert.vars;
    json coeffs = json::array();
    for (const auto& a : cert.minpoly.a) coeffs.push_back(print_poly(a, vars));

    json scalar = json::array();
    for (const auto& [i, sc] : cert.scalar_certs) {
        json squares = json::array();
        for (const auto& g : sc.squares) squares.push_back(rf_json(g, vars));
        json entry{{"index", i}, {"provider", sc.provider}, {"squares", std::move(squares)}};
        if (sc.multiplier) entry["multiplier"] = print_poly(*sc.multiplier, vars);
        scalar.push_back(std::move(entry));
    }

    json squares = json::array();
    for (const auto& m : cert.squares) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.dim(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(rf_json(m(i, j), vars));
            rows.push_back(std::move(row));
        }
        squares.push_back(std::move(rows));
    }

    json doc{{"version", kVersion},
             {"vars", vars.names()},
             {"dim", cert.dim},
             {"minpoly", {{"d", cert.minpoly.d}, {"coefficients", std::move(coeffs)}}},
             {"scalar_certs", std::move(scalar)},
             {"squares", std::move(squares)},
             {"square_count", cert.square_count}};
    return doc.dump(2) + "\n";
}

MatrixSOSCert parse_certificate(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("certificate: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (as<int>(field(doc, "version"), "version") != kVersion) bad("unsupported version");

    MatrixSOSCert cert;
    try {
        cert.vars = VarSet(as<std::vector<std::string>>(field(doc, "vars"), "vars"));
    } catch (const DomainError& e) {
        bad(std::string("field 'vars': ") + e.what());
    }
    const VarSet& vars = cert.vars;
    const std::size_t nvars = vars.size();
    cert.dim = as<std::size_t>(field(doc, "dim"), "dim");
    cert.square_count = as<std::size_t>(field(doc, "square_count"), "square_count");

    const json& mp = field(doc, "minpoly");
    cert.minpoly.d = as<int>(field(mp, "d"), "minpoly.d");
    const json& coeffs = field(mp, "coefficients");
    if (!coeffs.is_array() || cert.minpoly.d < 0 || coeffs.size() != static_cast<std::size_t>(cert.minpoly.d) + 1) {
        bad("minpoly.coefficients must list a_0 .. a_d");
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        cert.minpoly.a.push_back(poly_from(coeffs[i], vars, "minpoly.coefficients[" + std::to_string(i) + "]"));
    }

    const json& scalar = field(doc, "scalar_certs");
    if (!scalar.is_array()) bad("field 'scalar_certs' must be an array");
    for (const auto& entry : scalar) {
        const int i = as<int>(field(entry, "index"), "scalar_certs.index");
        if (i < 0 || i > cert.minpoly.d) bad("scalar certificate index " + std::to_string(i) + " out of range");
        const std::string where = "scalar_certs[" + std::to_string(i) + "]";
        ScalarSOSCert sc{RationalFunction(cert.minpoly.a[static_cast<std::size_t>(i)]), {},
                         as<std::string>(field(entry, "provider"), where + ".provider"), std::nullopt};
        const json& sq = field(entry, "squares");
        if (!sq.is_array()) bad("field '" + where + ".squares' must be an array");
        for (const auto& g : sq) sc.squares.push_back(rf_from(g, vars, where + ".squares"));
        if (entry.contains("multiplier")) sc.multiplier = poly_from(entry["multiplier"], vars, where + ".multiplier");
        if (!cert.scalar_certs.emplace(i, std::move(sc)).second) bad("duplicate scalar certificate for a" + std::to_string(i));
    }

    const json& squares = field(doc, "squares");
    if (!squares.is_array()) bad("field 'squares' must be an array");
    for (std::size_t k = 0; k < squares.size(); ++k) {
        const std::string where = "squares[" + std::to_string(k) + "]";
        const json& rows = squares[k];
        if (!rows.is_array() || rows.size() != cert.dim) bad(where + " must have " + std::to_string(cert.dim) + " rows");
        SymbolicMatrix m(cert.dim, nvars);
        for (std::size_t i = 0; i < cert.dim; ++i) {
            const json& row = rows[i];
            if (!row.is_array() || row.size() != cert.dim) {
                bad(where + " row " + std::to_string(i + 1) + " must have " + std::to_string(cert.dim) + " entries");
            }
            for (std::size_t j = 0; j < cert.dim; ++j) m(i, j) = rf_from(row[j], vars, where);
        }
        cert.squares.push_back(std::move(m));
    }
    return cert;
}

MatrixSOSCert read_certificate_file(const std::string& path) { return parse_certificate(read_text_file(path)); }

void write_certificate_file(const std::string& path, const MatrixSOSCert& cert) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << serialize_certificate(cert);
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace matsos
