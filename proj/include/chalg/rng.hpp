#pragma once

#include <random>

#include "chalg/chain.hpp"

namespace chalg {

/* mt19937_64 with rejection sampling; byte-identical across platforms */
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t u64() { return eng_(); }

    /* uniform in [lo, hi] */
    long long range(long long lo, long long hi) {
        uint64_t span = (uint64_t)(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + (long long)(v % span);
    }

    bool coin() { return range(0, 1) == 1; }

private:
    std::mt19937_64 eng_;
};

/* a uniformly random nondegenerate simplex where enumeration is possible,
   otherwise a bounded random sample (B(Z) entries in [-3,3]) */
Simplex random_nondeg(Rng& rng, const Space& X, int dim);

/* random possibly-degenerate simplex of the given dimension */
Simplex random_simplex(Rng& rng, const Space& X, int dim);

/* random cochain on an enumerable space with coefficients in [-bound,bound] */
Cochain random_cochain(Rng& rng, const Space& X, int deg, long long bound);

}  // namespace chalg
