#pragma once

// Certificate store format, one record per `target:` line:
//
//   target: <polynomial>
//   multiplier: <polynomial>        (optional)
//   square: <polynomial>            (repeated)
//   square[w]: <polynomial>         (weighted: contributes w * expr^2, w >= 0)
//
// Without a multiplier the squares certify the target itself; with one they
// certify multiplier * target.

#include "matsos/multipoly/polynomial.hpp"
#include "matsos/multipoly/varset.hpp"
#include "matsos/scalarsos/scalar_cert.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matsos {

struct WeightedSquare {
    BigRat weight;
    Polynomial base;
};

struct StoreRecord {
    Polynomial target;
    std::optional<Polynomial> multiplier;
    std::vector<WeightedSquare> squares;
    std::size_t line = 0;
};

struct CertificateStore {
    std::vector<StoreRecord> records;

    /// First record whose target equals p.
    const StoreRecord* find(const Polynomial& p) const;
};

/// Throws ParseError (with line number) on malformed input.
CertificateStore parse_certificate_store(std::string_view text, const VarSet& vars);
CertificateStore read_certificate_store(const std::string& path, const VarSet& vars);

/// Squares of a record with weights expanded through four-squares
/// decompositions; certifies multiplier * target (or target).
std::vector<RationalFunction> expand_squares(const StoreRecord& record);

/// sum of weight * base^2, the polynomial a record's squares add up to.
Polynomial weighted_sum(const StoreRecord& record);

}  // namespace matsos
