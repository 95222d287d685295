#ifndef DEGFN_POLY_HPP
#define DEGFN_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "degfn/group_value.hpp"
#include "degfn/rational.hpp"

namespace degfn {

using Exponents = std::vector<std::uint32_t>;

namespace detail {
// indirection so class members named is_zero don't hide the scalar overloads
template <typename T>
bool scalar_is_zero(const T& v) {
    return is_zero(v);
}
}  // namespace detail

// graded lexicographic, descending for iteration convenience at print time
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned long ta = 0, tb = 0;
        for (auto e : a) ta += e;
        for (auto e : b) tb += e;
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

// Sparse multivariate polynomial over a field F.  The scalar type must
// provide ring operators, an ADL-visible is_zero(), and exact equality.
// No zero coefficients are stored; the zero polynomial has an empty map.
template <typename F>
class Polynomial {
public:
    using TermMap = std::map<Exponents, F, GradedLexLess>;

    explicit Polynomial(std::size_t var_count = 0) : var_count_(var_count) {}

    static Polynomial constant(std::size_t var_count, const F& c) {
        Polynomial p(var_count);
        p.add_term(Exponents(var_count, 0), c);
        return p;
    }
    static Polynomial variable(std::size_t var_count, std::size_t index, const F& one = F(1)) {
        if (index >= var_count) throw std::invalid_argument("Polynomial: variable index");
        Polynomial p(var_count);
        Exponents e(var_count, 0);
        e[index] = 1;
        p.add_term(e, one);
        return p;
    }
    static Polynomial monomial(std::size_t var_count, Exponents e, const F& c) {
        if (e.size() != var_count) throw std::invalid_argument("Polynomial: exponent arity");
        Polynomial p(var_count);
        p.add_term(std::move(e), c);
        return p;
    }

    std::size_t var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Exponents e, const F& c) {
        if (e.size() != var_count_) throw std::invalid_argument("Polynomial: exponent arity");
        if (detail::scalar_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second = it->second + c;
            if (detail::scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(var_count_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r(a.var_count_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.var_count_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }
    friend Polynomial operator*(const F& k, const Polynomial& a) {
        Polynomial r(a.var_count_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, k * c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned n) const {
        Polynomial base = *this;
        Polynomial r = constant(var_count_, F(1));
        while (n) {
            if (n & 1) r *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.var_count_ == b.var_count_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial partial(std::size_t index) const {
        if (index >= var_count_) throw std::invalid_argument("Polynomial: variable index");
        Polynomial r(var_count_);
        for (const auto& [e, c] : terms_) {
            if (e[index] == 0) continue;
            Exponents d = e;
            d[index] -= 1;
            r.add_term(std::move(d), F((long)e[index]) * c);
        }
        return r;
    }

    // full evaluation; works for any ring R with R+=, R*, pow via repeated mult
    template <typename R>
    R evaluate(const std::vector<R>& args, const R& zero) const {
        if (args.size() != var_count_) throw std::invalid_argument("Polynomial: argument count");
        R acc = zero;
        for (const auto& [e, c] : terms_) {
            R term = ring_value<R>(c);
            for (std::size_t i = 0; i < var_count_; ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) term = term * args[i];
            acc = acc + term;
        }
        return acc;
    }

    // total degree in one variable
    int degree_in(std::size_t index) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, (int)e[index]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (auto x : e) t += (int)x;
            d = std::max(d, t);
        }
        return d;
    }

    // coefficient of X_index^k as a polynomial in the remaining variables
    // (same variable list, exponent of X_index forced to zero)
    Polynomial coeff_of(std::size_t index, std::uint32_t k) const {
        Polynomial r(var_count_);
        for (const auto& [e, c] : terms_) {
            if (e[index] != k) continue;
            Exponents d = e;
            d[index] = 0;
            r.add_term(std::move(d), c);
        }
        return r;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (vars.size() != var_count_) throw std::invalid_argument("Polynomial: name count");
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << " + ";
            first = false;
            bool has_var = false;
            for (auto x : e)
                if (x) has_var = true;
            std::string cs = to_string(c);
            if (!has_var || cs != "1") {
                bool plain = cs.find_first_of("+-*/ ") == std::string::npos || cs[0] == '(';
                if (plain)
                    os << cs;
                else
                    os << "(" << cs << ")";
                if (has_var) os << "*";
            }
            bool f2 = true;
            for (std::size_t i = 0; i < var_count_; ++i) {
                if (!e[i]) continue;
                if (!f2) os << "*";
                f2 = false;
                os << vars[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    template <typename R>
    static R ring_value(const F& c) {
        return R(c);
    }
    static void check_vars(const Polynomial& a, const Polynomial& b) {
        if (a.var_count_ != b.var_count_)
            throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    std::size_t var_count_;
    TermMap terms_;
};

template <typename F>
inline bool is_zero(const Polynomial<F>& p) {
    return p.is_zero();
}

// A k-derivation on k[X_1..X_n] given by the images of the variables;
// extended to all of the ring by additivity and Leibniz, i.e.
// D(f) = sum_i df/dX_i * images[i].
template <typename F>
class Derivation {
public:
    explicit Derivation(std::vector<Polynomial<F>> images) : images_(std::move(images)) {
        for (const auto& p : images_)
            if (p.var_count() != images_.size())
                throw std::invalid_argument("Derivation: image variable count");
    }

    static Derivation zero(std::size_t var_count) {
        return Derivation(std::vector<Polynomial<F>>(var_count, Polynomial<F>(var_count)));
    }
    // d/dX_index
    static Derivation partial(std::size_t var_count, std::size_t index, const F& one = F(1)) {
        std::vector<Polynomial<F>> im(var_count, Polynomial<F>(var_count));
        im[index] = Polynomial<F>::constant(var_count, one);
        return Derivation(std::move(im));
    }

    std::size_t var_count() const { return images_.size(); }
    const Polynomial<F>& image(std::size_t i) const { return images_.at(i); }
    const std::vector<Polynomial<F>>& images() const { return images_; }

    bool is_zero() const {
        for (const auto& p : images_)
            if (!p.is_zero()) return false;
        return true;
    }

    Polynomial<F> apply(const Polynomial<F>& f) const {
        if (f.var_count() != images_.size())
            throw std::invalid_argument("Derivation: variable count mismatch");
        Polynomial<F> r(f.var_count());
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].is_zero()) continue;
            r += f.partial(i) * images_[i];
        }
        return r;
    }

    Polynomial<F> apply_iter(const Polynomial<F>& f, unsigned n) const {
        Polynomial<F> r = f;
        for (unsigned i = 0; i < n; ++i) r = apply(r);
        return r;
    }

private:
    std::vector<Polynomial<F>> images_;
};

// Weights (one finite group value per variable) inducing a grading in
// which every monomial is homogeneous.
class Weighting {
public:
    explicit Weighting(std::vector<GroupValue> weights) : weights_(std::move(weights)) {
        for (const auto& w : weights_)
            if (!w.is_finite()) throw std::invalid_argument("Weighting: weights must be finite");
    }
    static Weighting from_ints(const std::vector<long long>& ws) {
        std::vector<GroupValue> v;
        v.reserve(ws.size());
        for (auto w : ws) v.emplace_back(w);
        return Weighting(std::move(v));
    }

    std::size_t var_count() const { return weights_.size(); }
    const GroupValue& weight(std::size_t i) const { return weights_.at(i); }

    GroupValue monomial_degree(const Exponents& e) const {
        if (e.size() != weights_.size()) throw std::invalid_argument("Weighting: arity mismatch");
        if (weights_.empty()) return GroupValue(0);
        GroupValue d = scale(weights_[0], 0);  // zero of the right arity
        for (std::size_t i = 0; i < e.size(); ++i) d = d + scale(weights_[i], (long long)e[i]);
        return d;
    }

    template <typename F>
    GroupValue degree(const Polynomial<F>& f) const {
        GroupValue d = GroupValue::minus_infinity();
        for (const auto& [e, c] : f.terms()) d = max(d, monomial_degree(e));
        return d;
    }

    template <typename F>
    Polynomial<F> homogeneous_component(const Polynomial<F>& f, const GroupValue& d) const {
        Polynomial<F> r(f.var_count());
        for (const auto& [e, c] : f.terms())
            if (monomial_degree(e) == d) r.add_term(e, c);
        return r;
    }

    template <typename F>
    bool is_homogeneous(const Polynomial<F>& f) const {
        GroupValue d = GroupValue::minus_infinity();
        for (const auto& [e, c] : f.terms()) {
            GroupValue m = monomial_degree(e);
            if (d.is_minus_infinity())
                d = m;
            else if (!(m == d))
                return false;
        }
        return true;
    }

    // leading homogeneous component
    template <typename F>
    Polynomial<F> gr(const Polynomial<F>& f) const {
        if (f.is_zero()) return f;
        return homogeneous_component(f, degree(f));
    }

    // all degrees with a nonzero component, ascending
    template <typename F>
    std::vector<GroupValue> support_degrees(const Polynomial<F>& f) const {
        std::vector<GroupValue> out;
        for (const auto& [e, c] : f.terms()) {
            GroupValue d = monomial_degree(e);
            bool found = false;
            for (const auto& x : out)
                if (x == d) found = true;
            if (!found) out.push_back(d);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<GroupValue> weights_;
};

}  // namespace degfn

#endif
