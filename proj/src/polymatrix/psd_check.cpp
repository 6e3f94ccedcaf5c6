#include "matsos/polymatrix/psd_check.hpp"

#include "matsos/polymatrix/minpoly.hpp"

namespace matsos {

std::vector<BigRat> random_rational_point(std::mt19937_64& rng, std::size_t nvars) {
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    std::vector<BigRat> point;
    point.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        long p = num(rng);
        long q = den(rng);
        point.emplace_back(BigInt(p), BigInt(q));
    }
    return point;
}

PsdReport psd_sample_check(const SymbolicMatrix& a, int samples, std::uint64_t seed) {
    PolyMatrix entries = a.polynomial_entries();
    const std::size_t n = a.dim();
    const auto sets = principal_index_sets(n);
    std::mt19937_64 rng(seed);
    PsdReport report;
    for (int s = 0; s < samples; ++s) {
        auto point = random_rational_point(rng, a.nvars());
        RatMatrix value(n, std::vector<BigRat>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) value[i][j] = entries[i][j].eval(point);
        }
        report.samples = s + 1;
        for (const auto& rows : sets) {
            RatMatrix sub;
            for (auto i : rows) {
                std::vector<BigRat> row;
                for (auto j : rows) row.push_back(value[i][j]);
                sub.push_back(std::move(row));
            }
            BigRat minor = rational_det(std::move(sub));
            if (minor.sign() < 0) {
                report.witness = PsdWitness{std::move(point), rows, std::move(minor)};
                return report;
            }
        }
    }
    return report;
}

}  // namespace matsos
