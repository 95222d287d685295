#ifndef DEGFN_LAURENT_HPP
#define DEGFN_LAURENT_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "degfn/poly.hpp"

namespace degfn {

// Thrown when a valuation cannot be read off a truncated series: every
// stored coefficient is zero, so the order is not determined below the
// precision bound.  Callers retry at higher precision or surface the error.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(int prec_bound)
        : std::runtime_error("precision exhausted: no nonzero coefficient below t^" +
                             std::to_string(prec_bound)),
          prec_bound(prec_bound) {}
    int prec_bound;
};

// Truncated Laurent series sum c_i t^i with coefficients in F, stored
// densely for exponents low_exp .. prec_bound-1.  Coefficients at
// exponents >= prec_bound are unknown; precision propagates
// pessimistically through arithmetic.  A prec_bound of `exact_bound`
// marks series known exactly (Laurent polynomials).
template <typename F>
class LaurentSeries {
public:
    static constexpr int exact_bound = 1 << 28;

    // exact zero
    LaurentSeries() : low_(exact_bound), prec_(exact_bound) {}

    LaurentSeries(int low_exp, std::vector<F> coeffs, int prec_bound)
        : low_(low_exp), prec_(prec_bound), coeffs_(std::move(coeffs)) {
        if (low_ > prec_) throw std::invalid_argument("LaurentSeries: low_exp > prec_bound");
        if ((int)coeffs_.size() != width())
            throw std::invalid_argument("LaurentSeries: coefficient count");
        compact();
    }

    // c * t^e, known exactly
    static LaurentSeries monomial(const F& c, int e) {
        if (is_zero(c)) return LaurentSeries();
        LaurentSeries r;
        r.low_ = e;
        r.prec_ = exact_bound;
        r.coeffs_ = {c};
        return r;
    }

    static LaurentSeries constant(const F& c) { return monomial(c, 0); }

    int low_exp() const { return low_; }
    int prec_bound() const { return prec_; }
    bool is_exact() const { return prec_ >= exact_bound; }
    bool is_exactly_zero() const {
        if (!is_exact()) return false;
        for (const auto& c : coeffs_)
            if (!is_zero(c)) return false;
        return true;
    }

    const F& coeff(int e) const {
        static const F zero{};
        if (e >= prec_) throw std::logic_error("LaurentSeries: coefficient beyond precision");
        if (e < low_ || e >= low_ + (int)coeffs_.size()) return zero;
        return coeffs_[e - low_];
    }

    std::optional<int> try_ord() const {
        for (int i = 0; i < (int)coeffs_.size(); ++i)
            if (!is_zero(coeffs_[i])) return low_ + i;
        return std::nullopt;
    }

    // least exponent with a nonzero coefficient; never guesses
    int ord() const {
        auto o = try_ord();
        if (!o) throw PrecisionExhausted(prec_ >= exact_bound ? exact_bound : prec_);
        return *o;
    }

    F leading_coeff() const { return coeff(ord()); }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r;
        r.low_ = std::min(a.low_, b.low_);
        r.prec_ = std::min(a.prec_, b.prec_);
        if (r.low_ > r.prec_) r.low_ = r.prec_;
        r.size_storage(std::max(a.storage_end(), b.storage_end()));
        a.accumulate_into(r, false);
        b.accumulate_into(r, false);
        return r.compact();
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r;
        r.low_ = std::min(a.low_, b.low_);
        r.prec_ = std::min(a.prec_, b.prec_);
        if (r.low_ > r.prec_) r.low_ = r.prec_;
        r.size_storage(std::max(a.storage_end(), b.storage_end()));
        a.accumulate_into(r, false);
        b.accumulate_into(r, true);
        return r.compact();
    }
    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r;
        r.low_ = clamp((long long)a.low_ + b.low_);
        r.prec_ = clamp(std::min((long long)a.low_ + b.prec_, (long long)b.low_ + a.prec_));
        if (r.low_ > r.prec_) r.low_ = r.prec_;
        int end = (a.coeffs_.empty() || b.coeffs_.empty())
                      ? never
                      : clamp((long long)a.storage_end() + b.storage_end() - 1);
        r.size_storage(end);
        int stop = r.low_ + (int)r.coeffs_.size();
        for (int i = 0; i < (int)a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (int j = 0; j < (int)b.coeffs_.size(); ++j) {
                long long e = (long long)a.low_ + i + b.low_ + j;
                if (e >= stop) break;
                r.coeffs_[(int)e - r.low_] = r.coeffs_[(int)e - r.low_] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r.compact();
    }

    friend LaurentSeries operator*(const F& k, const LaurentSeries& a) {
        LaurentSeries r = a;
        for (auto& c : r.coeffs_) c = k * c;
        return r.compact();
    }

    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries pow(unsigned n) const {
        LaurentSeries r = LaurentSeries::constant(F(1));
        for (unsigned i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // forget coefficients at exponents >= new_bound
    LaurentSeries truncated(int new_bound) const {
        if (new_bound >= prec_) return *this;
        LaurentSeries r;
        r.low_ = std::min(low_, new_bound);
        r.prec_ = new_bound;
        r.coeffs_.assign(r.width(), F{});
        for (int i = 0; i < (int)coeffs_.size() && low_ + i < new_bound; ++i)
            r.coeffs_[low_ + i - r.low_] = coeffs_[i];
        return r.compact();
    }

    // equal as far as both are determined
    friend bool agree(const LaurentSeries& a, const LaurentSeries& b) {
        // past both storages everything determined is exactly zero
        int hi = std::min({a.prec_, b.prec_, std::max(a.storage_end(), b.storage_end())});
        int lo = std::min(a.low_, b.low_);
        for (int e = lo; e < hi; ++e)
            if (!(a.coeff(e) == b.coeff(e))) return false;
        return true;
    }

    std::string str(const std::string& var = "t") const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < (int)coeffs_.size(); ++i) {
            if (is_zero(coeffs_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(coeffs_[i]) << ")";
            int e = low_ + i;
            if (e != 0) os << "*" << var << "^" << e;
        }
        if (first) os << "0";
        if (!is_exact()) os << " + O(" << var << "^" << prec_ << ")";
        return os.str();
    }

private:
    static int clamp(long long v) {
        if (v >= exact_bound) return exact_bound;
        if (v <= -exact_bound) throw std::overflow_error("LaurentSeries: exponent underflow");
        return (int)v;
    }

    int width() const { return prec_ >= exact_bound ? (int)coeffs_.size() : prec_ - low_; }

    // exponent just past the last stored coefficient; `never` for empty storage
    static constexpr int never = -(1 << 29);
    int storage_end() const { return coeffs_.empty() ? never : low_ + (int)coeffs_.size(); }

    // allocate zeroed storage for exponents low_ .. min(end, prec_) - 1
    void size_storage(int end) {
        end = std::min(end, prec_);
        coeffs_.assign(end > low_ ? (std::size_t)(end - low_) : 0, F{});
    }

    void accumulate_into(LaurentSeries& r, bool negate) const {
        int stop = r.low_ + (int)r.coeffs_.size();
        for (int i = 0; i < (int)coeffs_.size(); ++i) {
            int e = low_ + i;
            if (e >= stop) break;
            auto& slot = r.coeffs_[e - r.low_];
            if (negate)
                slot = slot - coeffs_[i];
            else
                slot = slot + coeffs_[i];
        }
    }

    // strip exactly-zero leading/trailing storage; keeps prec_ semantics
    LaurentSeries compact() {
        int lead = 0;
        while (lead < (int)coeffs_.size() && is_zero(coeffs_[lead])) ++lead;
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
            low_ += lead;
        }
        if (is_exact()) {
            while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
            if (coeffs_.empty()) low_ = exact_bound;
        }
        return *this;
    }

    int low_;
    int prec_;
    std::vector<F> coeffs_;
};

// The substitution homomorphism: evaluate a polynomial at series
// arguments, mapping each coefficient into the series field first.
template <typename F, typename C, typename Map>
LaurentSeries<F> substitute(const Polynomial<C>& f, const std::vector<LaurentSeries<F>>& args,
                            Map&& coeff_map) {
    if (args.size() != f.var_count())
        throw std::invalid_argument("substitute: argument count mismatch");
    LaurentSeries<F> acc;  // exact zero
    for (const auto& [e, c] : f.terms()) {
        LaurentSeries<F> term = LaurentSeries<F>::constant(coeff_map(c));
        for (std::size_t i = 0; i < args.size(); ++i)
            if (e[i]) term *= args[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

template <typename F>
LaurentSeries<F> substitute(const Polynomial<F>& f, const std::vector<LaurentSeries<F>>& args) {
    return substitute(f, args, [](const F& c) { return c; });
}

}  // namespace degfn

#endif
