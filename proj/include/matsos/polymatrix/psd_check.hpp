#pragma once

#include "matsos/polymatrix/symbolic_matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace matsos {

struct PsdWitness {
    std::vector<BigRat> point;
    std::vector<std::size_t> minor;  // 0-based index set
    BigRat value;                    // the negative minor at `point`
};

struct PsdReport {
    int samples = 0;
    std::optional<PsdWitness> witness;

    bool pass() const { return !witness.has_value(); }
};

/// Point with coordinates p/q, p in [-10, 10], q in [1, 10].
std::vector<BigRat> random_rational_point(std::mt19937_64& rng, std::size_t nvars);

/// Evaluates A at `samples` seeded random points and checks every principal
/// minor exactly. A witness refutes positive semidefiniteness; a pass is
/// only evidence. Throws DomainError for non-polynomial entries.
PsdReport psd_sample_check(const SymbolicMatrix& a, int samples, std::uint64_t seed);

}  // namespace matsos
