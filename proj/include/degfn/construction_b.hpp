#ifndef DEGFN_CONSTRUCTION_B_HPP
#define DEGFN_CONSTRUCTION_B_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degfn/degree.hpp"
#include "degfn/expand.hpp"
#include "degfn/laurent.hpp"
#include "degfn/multiquad.hpp"
#include "degfn/poly.hpp"

namespace degfn {

// Building the recursive data failed at a specific step (e.g. a leading
// coefficient that must be nonzero vanished).
struct ConstructionError : PreconditionError {
    explicit ConstructionError(const std::string& what) : PreconditionError(what) {}
};

// The N-valued wild construction.  Over the tower K = Q(s)(u_1..u_N),
// u_j^2 = s - j, set e_p = u_{p+1} and solve a_0, a_1, ... so that the
// series y = t^-3 sum a_n t^3n satisfies, with x = t^-2 and
//   y_0 = y,   y_{p+1} = y_p^2 - e_p^2 x^3,
// ord(y_p) = -3 with leading coefficient e_p for every p.  With
// deg = -ord on k[x, y], D = d/dy then has delta_D(y_p) = 3p - 3,
// unbounded in p.
//
// The a_p come from the integer polynomials
//   f_{0,n} = X_n,
//   f_{p+1,p+1+n} = sum_{i=0}^{n+1} f_{p,p+i} f_{p,p+1+n-i}
// (the coefficient recursion of the y_p series): a_0 = e_0, and each
// a_{p+1} solves 2 e_p f_{p,p+1}(a_0..a_p, X) = e_{p+1}, which is linear
// in X with a coefficient that must be nonzero at every step.
class ConstructionB {
public:
    static constexpr std::size_t X = 0, Y = 1;
    using K = MultiQuad;
    using PK = Polynomial<K>;   // K[x, y]
    using P1 = Polynomial<RatFunc>;  // Q(s)[x, y]

    // window = total exponent width of the series workspace: coefficients
    // are tracked for t^-(window/2) .. t^(window/2).
    static ConstructionB build(int steps, int window = 36) {
        return ConstructionB(steps, window);
    }

    int steps() const { return steps_; }
    int horizon() const { return horizon_; }
    int level() const { return level_; }
    int window() const { return window_; }

    const K& e(int p) const { return e_.at((std::size_t)p); }
    const K& a(int p) const { return a_.at((std::size_t)p); }
    const std::vector<K>& a_list() const { return a_; }

    // f_{p,q} as an integer polynomial in X_0..X_{horizon+1}.  Computed on
    // demand: the term counts grow fast with p, so only requested entries
    // are materialized (the construction itself works on values instead).
    const Polynomial<Rational>& f_poly(int p, int q) const {
        int n = q - p;
        if (p < 0 || p > horizon_ || n < 0 || p + n > horizon_ + 1)
            throw std::out_of_range("f_poly: index out of range");
        auto it = f_.find({p, q});
        if (it != f_.end()) return it->second;
        using PQ = Polynomial<Rational>;
        PQ val(var_count());
        if (p == 0) {
            val = PQ::variable(var_count(), (std::size_t)n);
        } else {
            for (int i = 0; i <= n + 1; ++i) val += f_poly(p - 1, p - 1 + i) * f_poly(p - 1, p + n - i);
        }
        return f_.emplace(std::pair<int, int>{p, q}, std::move(val)).first->second;
    }

    const LaurentSeries<K>& x_series() const { return x_; }
    const LaurentSeries<K>& y_series() const { return yp_.at(0); }
    const LaurentSeries<K>& y_p_series(int p) const { return yp_.at((std::size_t)p); }

    // F_p in K[x, y]: F_0 = y, F_{p+1} = F_p^2 - e_p^2 x^3
    PK F(int p) const {
        PK f = PK::variable(2, Y);
        for (int q = 0; q < p; ++q) f = f * f - tower_a((std::size_t)q);
        return f;
    }

    Derivation<K> d_dy() const { return Derivation<K>::partial(2, Y); }

    static PK to_k(const P1& f) {
        PK r(2);
        for (const auto& [e, c] : f.terms()) r.add_term(e, K(c));
        return r;
    }

    // The series image of f in K[x, y].  Evaluated through the expansion
    // f = sum alpha_S * prod_{i in S} F_i so that each product picks up
    // the precomputed y_i series; substituting monomials directly loses
    // the leading terms to cancellation at high Y-degree.
    LaurentSeries<K> image(const PK& f) const {
        if (f.is_zero()) return LaurentSeries<K>();
        Expansion<K> ex = expand(f, Y, tower_a_);
        LaurentSeries<K> acc;
        for (const auto& term : ex.terms) {
            LaurentSeries<K> s = substitute(term.coeff, args_);
            for (unsigned i : term.set) {
                if (i >= yp_.size())
                    throw PrecisionExhausted(0);  // Y-degree beyond the built horizon
                s *= yp_[i];
            }
            acc += s;
        }
        return acc;
    }
    LaurentSeries<K> image(const P1& f) const { return image(to_k(f)); }

    GroupValue degree(const PK& f) const {
        if (f.is_zero()) return GroupValue::minus_infinity();
        return GroupValue(-(long long)image(f).ord());
    }
    GroupValue degree(const P1& f) const { return degree(to_k(f)); }

    struct Row {
        int p;
        long long deg_y;
        long long deg_dy;
        long long delta;
    };

    // series-computed table (p, deg y_p, deg D y_p, delta)
    std::vector<Row> witness(int p_max) const {
        if (p_max > steps_) throw PreconditionError("witness: p_max exceeds built steps");
        Derivation<K> d = d_dy();
        std::vector<Row> rows;
        for (int p = 0; p <= p_max; ++p) {
            PK fp = F(p);
            GroupValue dy = degree(fp);
            GroupValue ddy = degree(d.apply(fp));
            rows.push_back({p, dy.as_int(), ddy.as_int(), (ddy - dy).as_int()});
        }
        return rows;
    }

    // w = y^2 - a_0^2 x^3 - 2 a_1 y - 2 a_0 a_2 + a_1^2, an element over
    // the full tower whose degree is negative (its series has ord +3).
    PK w_element() const {
        if (steps_ < 3) throw PreconditionError("w element needs steps >= 3");
        PK y = PK::variable(2, Y);
        PK x = PK::variable(2, X);
        K a0 = a(0), a1 = a(1), a2 = a(2);
        return y * y - PK::constant(2, a0 * a0) * x.pow(3) - PK::constant(2, K(2) * a1) * y -
               PK::constant(2, K(2) * a0 * a2 - a1 * a1);
    }
    std::pair<PK, GroupValue> negative_degree_element() const {
        PK w = w_element();
        return {w, degree(w)};
    }

    struct MonoidFailure {
        std::string input;
        long long degree;
    };
    struct MonoidReport {
        std::size_t samples = 0;
        std::size_t precision_errors = 0;
        std::vector<MonoidFailure> failures;
        bool passed() const { return failures.empty() && precision_errors == 0; }
    };

    // every nonzero element of Q(s)[x, y] must receive a degree in the
    // numerical monoid <2,3> = N \ {1}
    MonoidReport monoid_check(std::size_t samples, std::uint64_t seed,
                              int max_total_degree = 5) const {
        MonoidReport rep;
        rep.samples = samples;
        std::vector<std::string> vars{"x", "y"};
        for (std::size_t i = 0; i < samples; ++i) {
            Rng rng = Rng::for_sample(seed, i);
            P1 f = random_poly<RatFunc>(
                rng, 2, max_total_degree, 4,
                [](Rng& r) {
                    // coefficients in Q(s): small polynomials in s
                    UPoly num(random_rational(r));
                    if (r.below(2)) num = num + random_rational(r) * UPoly::variable();
                    return RatFunc(num);
                },
                true);
            try {
                long long d = degree(f).as_int();
                if (d < 0 || d == 1) rep.failures.push_back({f.str(vars), d});
            } catch (const PrecisionExhausted&) {
                ++rep.precision_errors;
            }
        }
        return rep;
    }

private:
    ConstructionB(int steps, int window) : steps_(steps), window_(window) {
        if (steps < 0) throw PreconditionError("steps must be >= 0");
        if (window < 12) throw PreconditionError("window too small");
        int half = window / 2;
        horizon_ = (half + 3) / 3;  // a_0..a_horizon determine exponents up to half
        if (horizon_ < steps_)
            throw ConstructionError("window " + std::to_string(window) +
                                    " too small for steps " + std::to_string(steps));
        level_ = horizon_ + 1;
        if (level_ > MultiQuad::max_level) throw PreconditionError("tower level cap exceeded");

        for (int p = 0; p <= horizon_; ++p) e_.push_back(MultiQuad::root(level_, p + 1));
        for (int p = 0; p <= horizon_; ++p)
            for (int q = 0; q < p; ++q)
                if (e_[(std::size_t)p] == e_[(std::size_t)q])
                    throw ConstructionError("e_p not pairwise distinct");

        solve_a();
        build_series();
    }

    std::size_t var_count() const { return (std::size_t)horizon_ + 2; }

    void solve_a() {
        // Each step needs c1, c0 with f_{p,p+1}(a_0..a_p, X) = c1 X + c0.
        // Evaluating the f polynomials directly is hopeless (their term
        // count explodes), so run the coefficient recursion
        //   c_{q+1,n} = sum_{i+j=n+1} c_{q,i} c_{q,j}
        // on values, carrying the unknown X = a_{p+1} as a linear pair
        // u + v X.  Products of two X-carrying entries would land at
        // column 2(top-q)-1 > top-q-1, outside what we keep, so dropping
        // the X^2 part is exact.
        struct Lin {
            K u, v;
        };
        a_.push_back(e_[0]);  // a_0 = e_0
        for (int p = 0; p + 1 <= horizon_; ++p) {
            int top = p + 1;
            std::vector<Lin> c((std::size_t)top + 1);
            for (int n = 0; n <= top; ++n)
                c[(std::size_t)n] = n <= p ? Lin{a_[(std::size_t)n], K()} : Lin{K(), K(1)};
            for (int q = 0; q < p; ++q) {
                // invariant: leading coefficient of y_q is e_q
                if (c[0].u != e_[(std::size_t)q] || !c[0].v.is_zero())
                    throw ConstructionError("f_{q,q}(a) != e_q at step " + std::to_string(q));
                std::vector<Lin> nxt((std::size_t)(top - q));
                for (int n = 0; n + q + 1 <= top; ++n) {
                    Lin acc{K(), K()};
                    for (int i = 0; i <= n + 1; ++i) {
                        const Lin& s = c[(std::size_t)i];
                        const Lin& t = c[(std::size_t)(n + 1 - i)];
                        acc.u = acc.u + s.u * t.u;
                        acc.v = acc.v + s.u * t.v + s.v * t.u;
                    }
                    nxt[(std::size_t)n] = std::move(acc);
                }
                c = std::move(nxt);
            }
            if (c[0].u != e_[(std::size_t)p] || !c[0].v.is_zero())
                throw ConstructionError("f_{p,p}(a) != e_p at step " + std::to_string(p));
            K lead = K(2) * e_[(std::size_t)p] * c[1].v;
            if (lead.is_zero())
                throw ConstructionError("vanishing leading coefficient solving a_" +
                                        std::to_string(p + 1));
            a_.push_back((e_[(std::size_t)(p + 1)] - K(2) * e_[(std::size_t)p] * c[1].u) *
                         inv(lead));
        }
    }

    void build_series() {
        x_ = LaurentSeries<K>::monomial(K(1), -2);
        // y known modulo t^(3*horizon): coefficient a_n at exponent 3n-3
        int prec = 3 * horizon_;
        std::vector<K> coeffs((std::size_t)(prec + 3));
        for (int n = 0; n <= horizon_; ++n)
            if (3 * n - 3 < prec) coeffs[(std::size_t)(3 * n)] = a_[(std::size_t)n];
        yp_.emplace_back(-3, std::move(coeffs), prec);
        LaurentSeries<K> x3 = x_.pow(3);
        for (int p = 0; p + 1 <= horizon_; ++p) {
            const LaurentSeries<K>& y = yp_.back();
            LaurentSeries<K> sq = y * y;
            K ep2 = K(RatFunc::s_minus(p + 1));  // e_p^2 = s - (p+1), exactly
            yp_.push_back(sq - LaurentSeries<K>::constant(ep2) * x3);
        }
        args_ = {x_, LaurentSeries<K>::constant(K(1))};
        // tower data for the expansion: a_i = e_i^2 x^3 in K[x, y]
        PK x = PK::variable(2, X);
        for (int i = 0; i < horizon_; ++i)
            tower_a_.push_back(PK::constant(2, K(RatFunc::s_minus(i + 1))) * x.pow(3));
    }

    PK tower_a(std::size_t i) const { return tower_a_.at(i); }

    int steps_;
    int window_;
    int horizon_ = 0;
    int level_ = 0;
    std::vector<K> e_;
    std::vector<K> a_;
    mutable std::map<std::pair<int, int>, Polynomial<Rational>> f_;
    LaurentSeries<K> x_;
    std::vector<LaurentSeries<K>> yp_;
    std::vector<LaurentSeries<K>> args_;
    std::vector<PK> tower_a_;
};

// degree-function adapter over k_1[x, y] for the generic harness
class B1Degree {
public:
    explicit B1Degree(const ConstructionB& cb) : cb_(&cb) {}
    GroupValue degree(const Polynomial<RatFunc>& f) const { return cb_->degree(f); }

private:
    const ConstructionB* cb_;
};

// same over the full tower K[x, y]
class B2Degree {
public:
    explicit B2Degree(const ConstructionB& cb) : cb_(&cb) {}
    GroupValue degree(const Polynomial<MultiQuad>& f) const { return cb_->degree(f); }

private:
    const ConstructionB* cb_;
};

}  // namespace degfn

#endif
