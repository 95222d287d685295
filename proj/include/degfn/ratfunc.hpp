#ifndef DEGFN_RATFUNC_HPP
#define DEGFN_RATFUNC_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "degfn/rational.hpp"

namespace degfn {

// Dense univariate polynomial over Rational in the indeterminate s.
// coeffs[i] is the coefficient of s^i; no trailing zeros are stored,
// so the zero polynomial has an empty coefficient vector.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c) {
        if (!degfn::is_zero(c)) coeffs_.push_back(c);
    }
    UPoly(long c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly variable() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const Rational& leading() const {
        if (is_zero()) throw std::logic_error("UPoly: leading of zero");
        return coeffs_.back();
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return UPoly(std::move(c));
    }
    UPoly operator-() const {
        std::vector<Rational> c(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const Rational& k, const UPoly& a) {
        if (degfn::is_zero(k)) return UPoly();
        std::vector<Rational> c(a.coeffs_.size());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = k * a.coeffs_[i];
        return UPoly(std::move(c));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // Euclidean division; b must be nonzero.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
        if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
        std::vector<Rational> rem = a.coeffs_;
        std::vector<Rational> quo;
        int db = b.degree();
        if (static_cast<int>(rem.size()) - 1 >= db)
            quo.assign(rem.size() - db, Rational(0));
        while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
            Rational f = rem.back() / b.coeffs_.back();
            std::size_t shift = rem.size() - 1 - db;
            quo[shift] = f;
            for (int i = 0; i <= db; ++i) rem[shift + i] -= f * b.coeffs_[i];
            while (!rem.empty() && degfn::is_zero(rem.back())) rem.pop_back();
        }
        q = UPoly(std::move(quo));
        r = UPoly(std::move(rem));
    }

    UPoly monic() const {
        if (is_zero()) return UPoly();
        return degfn::inv(leading()) * (*this);
    }

    // Monic gcd.  Runs a primitive PRS over the integers to keep the
    // intermediate coefficients small.
    static UPoly gcd(UPoly a, UPoly b) {
        a = a.primitive();
        b = b.primitive();
        while (!b.is_zero()) {
            UPoly q, r;
            // pseudo-division: scale a so the division stays denominator-free
            int d = a.degree() - b.degree();
            if (d < 0) d = 0;
            Rational lead = b.leading();
            Rational scale = 1;
            for (int i = 0; i <= d; ++i) scale *= lead;
            divmod(scale * a, b, q, r);
            a = b;
            b = r.primitive();
        }
        return a.monic();
    }

    // content-free version of *this (integer coefficients, content 1),
    // up to a positive rational factor
    UPoly primitive() const {
        if (is_zero()) return UPoly();
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& c : coeffs_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rational factor(den_lcm, num_gcd);
        factor.canonicalize();
        return factor * (*this);
    }

    UPoly derivative() const {
        if (coeffs_.size() <= 1) return UPoly();
        std::vector<Rational> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rational((long)i) * coeffs_[i];
        return UPoly(std::move(c));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string str(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[i];
            if (degfn::is_zero(c)) continue;
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            Rational a = abs(c);
            if (i == 0 || a != 1) {
                os << a.get_str();
                if (i > 0) os << "*";
            }
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && degfn::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Element of the field k1 = Q(s): a quotient num/den of univariate
// polynomials over Q, kept canonical (den monic, gcd(num, den) = 1).
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(UPoly num, UPoly den = UPoly(1)) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc s() { return RatFunc(UPoly::variable()); }
    // s - j, the prime elements backing the tower
    static RatFunc s_minus(long j) { return RatFunc(UPoly::variable() - UPoly(j)); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * inv(b); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend RatFunc inv(const RatFunc& a) {
        if (a.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.den_, a.num_);
    }

    // canonical forms make this exact
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::ostringstream os;
        os << "(" << num_.str() << ")/(" << den_.str() << ")";
        return os.str();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly(1);
            return;
        }
        UPoly g = UPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            UPoly q, r;
            UPoly::divmod(num_, g, q, r);
            num_ = q;
            UPoly::divmod(den_, g, q, r);
            den_ = q;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational li = degfn::inv(lead);
            num_ = li * num_;
            den_ = li * den_;
        }
    }

    UPoly num_;
    UPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline std::string to_string(const RatFunc& f) { return f.str(); }

}  // namespace degfn

#endif
