#ifndef DEGFN_CONSTRUCTION_A_HPP
#define DEGFN_CONSTRUCTION_A_HPP

#include <functional>
#include <vector>

#include "degfn/degree.hpp"
#include "degfn/laurent.hpp"
#include "degfn/poly.hpp"
#include "degfn/rational.hpp"

namespace degfn {

// Q[x, y] mapped into Laurent series by x = t^-1 and y = a truncation of
// f(t) = sum a_j t^j, with deg = -ord.  The family
//   g_n = x^n y - sum_{j<n} a_j x^{n-j}
// has deg g_n = 0 whenever a_n != 0, while D = d/dy sends g_n to x^n, so
// delta_D(g_n) = n grows without bound.
class ConstructionA {
public:
    static constexpr std::size_t X = 0, Y = 1;
    using P = Polynomial<Rational>;

    explicit ConstructionA(std::function<Rational(int)> coeff = all_ones, int window = 32,
                           int window_cap = 96)
        : coeff_(std::move(coeff)), window_(window), cap_(window_cap) {}

    static Rational all_ones(int) { return Rational(1); }

    Rational a(int j) const { return coeff_(j); }

    P x() const { return P::variable(2, X); }
    P y() const { return P::variable(2, Y); }

    P g(int n) const {
        P r = x().pow((unsigned)n) * y();
        for (int j = 0; j < n; ++j) r -= P::constant(2, a(j)) * x().pow((unsigned)(n - j));
        return r;
    }

    Derivation<Rational> d_dy() const { return Derivation<Rational>::partial(2, Y); }

    // the degree function at truncation exponent T: y is known modulo t^{T+1}
    LaurentPullbackDegree<Rational, Rational> degree_fn(int truncation) const {
        std::vector<Rational> ycoeffs((std::size_t)truncation + 1);
        for (int j = 0; j <= truncation; ++j) ycoeffs[(std::size_t)j] = a(j);
        std::vector<LaurentSeries<Rational>> args;
        args.push_back(LaurentSeries<Rational>::monomial(Rational(1), -1));
        args.push_back(LaurentSeries<Rational>(0, std::move(ycoeffs), truncation + 1));
        return make_laurent_pullback(std::move(args));
    }

    struct Row {
        int n;
        long long deg_g;
        long long delta;
    };

    // series-computed witness table; rows only for n with a_n != 0.
    // Retries with a doubled window when a degree is not determined.
    std::vector<Row> witness(int n_max) const {
        for (int w = window_;; w *= 2) {
            if (w > cap_) w = cap_;
            try {
                return witness_at(n_max, w);
            } catch (const PrecisionExhausted&) {
                if (w >= cap_) throw;
            }
        }
    }

private:
    std::vector<Row> witness_at(int n_max, int truncation) const {
        auto df = degree_fn(truncation);
        Derivation<Rational> d = d_dy();
        std::vector<Row> rows;
        for (int n = 0; n <= n_max; ++n) {
            if (degfn::is_zero(a(n))) continue;
            P gn = g(n);
            GroupValue deg = df.degree(gn);
            GroupValue del = delta(df, d, gn);
            rows.push_back({n, deg.as_int(), del.as_int()});
        }
        return rows;
    }

    std::function<Rational(int)> coeff_;
    int window_;
    int cap_;
};

}  // namespace degfn

#endif
