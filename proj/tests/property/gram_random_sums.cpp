// sos_gram_attempt on 500 random explicit sums of squares. The attempt uses a
// single particular Gram matrix, so some inputs are expected to come back
// NotFound; the binary reports the rate and exits nonzero if any do.

#include "generators.hpp"
#include "matsos/errors.hpp"
#include "matsos/scalarsos/scalar_cert.hpp"

#include <cstdio>

int main() {
    using namespace matsos;
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<int> nvars_dist(1, 3), count_dist(1, 4);
    int ok = 0, not_found = 0, bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto nvars = static_cast<std::size_t>(nvars_dist(rng));
        Polynomial p(nvars);
        const int count = count_dist(rng);
        for (int i = 0; i < count; ++i) {
            Polynomial q = testing::random_poly(rng, nvars, 2, 4, 5);
            p += q * q;
        }
        try {
            if (verify_scalar_cert(sos_gram_attempt(p))) {
                ++ok;
            } else {
                ++bad;
            }
        } catch (const NotFound&) {
            ++not_found;
        }
    }
    std::printf("gram attempt on 500 random sums of squares: %d verified, %d not found, %d invalid\n", ok, not_found,
                bad);
    return ok == 500 ? 0 : 1;
}
