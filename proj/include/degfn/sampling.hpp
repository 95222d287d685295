#ifndef DEGFN_SAMPLING_HPP
#define DEGFN_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "degfn/poly.hpp"

namespace degfn {

// splitmix64: tiny, seedable, and easy to split per sample so that
// property runs are reproducible regardless of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // independent stream for sample i
    static Rng for_sample(std::uint64_t seed, std::uint64_t i) {
        Rng mix(seed ^ (0xd1b54a32d192ed03ULL * (i + 1)));
        mix.next();
        return mix;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long long int_in(long long lo, long long hi) {
        return lo + (long long)below((std::uint64_t)(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline Rational random_rational(Rng& rng, long num_bound = 9) {
    long n = (long)rng.int_in(-num_bound, num_bound);
    long d = (long)rng.int_in(1, 4);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// random polynomial with small integer-ish coefficients; retries until
// nonzero when requested
template <typename F, typename CoeffGen>
Polynomial<F> random_poly(Rng& rng, std::size_t var_count, int max_total_degree, int max_terms,
                          CoeffGen&& coeff, bool nonzero = true) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Polynomial<F> p(var_count);
        int terms = (int)rng.int_in(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            Exponents e(var_count, 0);
            int budget = (int)rng.int_in(0, max_total_degree);
            for (std::size_t i = 0; i < var_count && budget > 0; ++i) {
                int d = (int)rng.int_in(0, budget);
                e[i] = (std::uint32_t)d;
                budget -= d;
            }
            p.add_term(std::move(e), coeff(rng));
        }
        if (!nonzero || !p.is_zero()) return p;
    }
    // all-zero draws are astronomically unlikely; fall back to a constant
    return Polynomial<F>::constant(var_count, F(1));
}

template <typename F>
Polynomial<F> random_rational_poly(Rng& rng, std::size_t var_count, int max_total_degree,
                                   int max_terms, bool nonzero = true) {
    return random_poly<F>(
        rng, var_count, max_total_degree, max_terms,
        [](Rng& r) { return F(random_rational(r)); }, nonzero);
}

}  // namespace degfn

#endif
