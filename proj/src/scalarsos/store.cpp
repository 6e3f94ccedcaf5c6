#include "matsos/scalarsos/store.hpp"

#include "matsos/errors.hpp"
#include "matsos/multipoly/parser.hpp"
#include "matsos/polymatrix/matrix_io.hpp"

#include <cctype>

namespace matsos {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

const StoreRecord* CertificateStore::find(const Polynomial& p) const {
    for (const auto& r : records) {
        if (r.target == p) return &r;
    }
    return nullptr;
}

CertificateStore parse_certificate_store(std::string_view text, const VarSet& vars) {
    CertificateStore store;
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
        if (colon == std::string_view::npos) throw ParseError("expected 'key: expression'", 0, line_no);
        std::string_view key = trim(line.substr(0, colon));
        std::string_view value = line.substr(colon + 1);
        const std::size_t offset = static_cast<std::size_t>(value.data() - raw.data());
        auto expr = [&] {
            try {
                return parse_poly(value, vars);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), offset + e.position(), line_no);
            }
        };

        if (key == "target") {
            store.records.push_back({expr(), std::nullopt, {}, line_no});
            continue;
        }
        if (store.records.empty()) throw ParseError("'" + std::string(key) + "' before any 'target:'", 0, line_no);
        StoreRecord& rec = store.records.back();
        if (key == "multiplier") {
            if (rec.multiplier) throw ParseError("duplicate 'multiplier:' in record", 0, line_no);
            rec.multiplier = expr();
            if (rec.multiplier->is_zero()) throw ParseError("multiplier must be nonzero", offset, line_no);
        } else if (key == "square") {
            rec.squares.push_back({BigRat(1), expr()});
        } else if (key.size() > 8 && key.substr(0, 7) == "square[" && key.back() == ']') {
            std::string_view w = trim(key.substr(7, key.size() - 8));
            BigRat weight;
            try {
                weight = BigRat::parse(w);
            } catch (const Error&) {
                throw ParseError("bad square weight '" + std::string(w) + "'", 7, line_no);
            }
            if (weight.sign() < 0) throw ParseError("square weight must be nonnegative", 7, line_no);
            rec.squares.push_back({weight, expr()});
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", 0, line_no);
        }
    }
    return store;
}

CertificateStore read_certificate_store(const std::string& path, const VarSet& vars) {
    return parse_certificate_store(read_text_file(path), vars);
}

std::vector<RationalFunction> expand_squares(const StoreRecord& record) {
    const std::size_t nvars = record.target.nvars();
    std::vector<RationalFunction> out;
    for (const auto& sq : record.squares) {
        if (sq.weight.is_one()) {
            out.emplace_back(sq.base);
            continue;
        }
        for (const auto& s : sos_constant(sq.weight, nvars).squares) out.emplace_back(sq.base * s.num().constant_value());
    }
    return out;
}

Polynomial weighted_sum(const StoreRecord& record) {
    Polynomial sum(record.target.nvars());
    for (const auto& sq : record.squares) sum += sq.base * sq.base * sq.weight;
    return sum;
}

}  // namespace matsos
