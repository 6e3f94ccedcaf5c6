#include "matsos/polymatrix/matrix_io.hpp"

#include "matsos/errors.hpp"
#include "matsos/multipoly/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace matsos {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::optional<std::size_t> parse_index(const std::string& word) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size()) return std::nullopt;
    return v;
}

struct PendingEntry {
    std::size_t i, j;
    std::string expr;
    std::size_t line;
    std::size_t offset;
};

}  // namespace

MatrixInput parse_matrix_file(std::string_view text) {
    std::optional<VarSet> vars;
    std::optional<std::size_t> dim;
    std::vector<PendingEntry> pending;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", 0, line_no);
        std::string_view key = trim(line.substr(0, colon));
        std::string_view value = line.substr(colon + 1);
        const std::size_t value_offset = static_cast<std::size_t>(value.data() - raw.data());

        if (key == "vars") {
            if (vars) throw ParseError("duplicate 'vars' header", 0, line_no);
            try {
                vars = VarSet(split_words(value));
            } catch (const DomainError& e) {
                throw ParseError(e.what(), value_offset, line_no);
            }
        } else if (key == "dim") {
            if (dim) throw ParseError("duplicate 'dim' header", 0, line_no);
            auto n = parse_index(std::string(trim(value)));
            if (!n || *n == 0) throw ParseError("dimension must be a positive integer", value_offset, line_no);
            dim = n;
        } else if (key.substr(0, 5) == "entry") {
            auto words = split_words(key.substr(5));
            if (words.size() != 2) throw ParseError("expected 'entry i j:'", 0, line_no);
            auto i = parse_index(words[0]);
            auto j = parse_index(words[1]);
            if (!i || !j || *i == 0 || *j == 0) throw ParseError("entry indices must be positive integers", 0, line_no);
            pending.push_back({*i - 1, *j - 1, std::string(value), line_no, value_offset});
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", 0, line_no);
        }
    }
    if (!vars) throw ParseError("missing 'vars' header", 0, line_no);
    if (!dim) throw ParseError("missing 'dim' header", 0, line_no);

    const std::size_t n = *dim;
    MatrixInput out{*vars, SymbolicMatrix(n, vars->size())};
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& e : pending) {
        if (e.i >= n || e.j >= n) throw ParseError("entry index out of range", 0, e.line);
        auto key = std::minmax(e.i, e.j);
        if (auto it = seen.find(key); it != seen.end()) {
            throw ParseError("entry (" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) +
                                 ") already given on line " + std::to_string(it->second),
                             0, e.line);
        }
        seen.emplace(key, e.line);
        Polynomial p;
        try {
            p = parse_poly(e.expr, *vars);
        } catch (const ParseError& err) {
            throw ParseError(err.message(), e.offset + err.position(), e.line);
        }
        out.matrix(e.i, e.j) = RationalFunction(p);
        out.matrix(e.j, e.i) = RationalFunction(std::move(p));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MatrixInput read_matrix_file(const std::string& path) { return parse_matrix_file(read_text_file(path)); }

std::string format_matrix_file(const VarSet& vars, const SymbolicMatrix& a) {
    std::string out = "vars:";
    for (const auto& name : vars.names()) out += " " + name;
    out += "\ndim: " + std::to_string(a.dim()) + "\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            if (a(i, j).is_zero()) continue;
            auto p = a(i, j).as_polynomial();
            if (!p) throw DomainError("matrix files hold polynomial entries only");
            out += "entry " + std::to_string(i + 1) + " " + std::to_string(j + 1) + ": " + print_poly(*p, vars) + "\n";
        }
    }
    return out;
}

}  // namespace matsos
