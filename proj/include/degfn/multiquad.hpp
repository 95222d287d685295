#ifndef DEGFN_MULTIQUAD_HPP
#define DEGFN_MULTIQUAD_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "degfn/ratfunc.hpp"

namespace degfn {

// Element of the multiquadratic tower K_N = Q(s)(u_1, ..., u_N) with
// u_j^2 = s - j.  Coordinates are indexed by subsets F of {1,...,N}
// (bitmask, bit j-1 <-> u_j), the basis element being
// mu(F) = prod_{j in F} u_j.  Because the mu(F) are linearly independent
// over Q(s), an element is zero exactly when its coordinate map is empty.
//
// Scalars (elements of Q(s)) carry level 0 and embed into every K_N;
// mixing two non-scalar levels is a structural error and requires an
// explicit lift.
class MultiQuad {
public:
    using Mask = std::uint32_t;
    static constexpr int max_level = 30;

    MultiQuad() : level_(0) {}
    MultiQuad(long c) : level_(0) { set(0u, RatFunc(c)); }
    MultiQuad(const Rational& c) : level_(0) { set(0u, RatFunc(c)); }
    MultiQuad(const RatFunc& c) : level_(0) { set(0u, c); }

    // c * mu(F)
    static MultiQuad basis(int level, Mask mask, const RatFunc& c = RatFunc(1)) {
        check_level(level);
        if (mask >> level) throw std::invalid_argument("MultiQuad: mask exceeds level");
        MultiQuad x;
        x.level_ = level;
        x.set(mask, c);
        return x;
    }
    // u_j = sqrt(s - j)
    static MultiQuad root(int level, int j) {
        if (j < 1 || j > level) throw std::invalid_argument("MultiQuad: root index out of range");
        return basis(level, Mask(1) << (j - 1));
    }

    int level() const { return level_; }
    bool is_zero() const { return coords_.empty(); }
    const std::map<Mask, RatFunc>& coords() const { return coords_; }

    RatFunc coord(Mask mask) const {
        auto it = coords_.find(mask);
        return it == coords_.end() ? RatFunc() : it->second;
    }

    // Is the element in Q(s)?
    bool is_scalar() const {
        return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 0u);
    }
    RatFunc scalar_part() const { return coord(0u); }

    MultiQuad lifted(int new_level) const {
        if (new_level < level_) throw std::invalid_argument("MultiQuad: lift to smaller level");
        check_level(new_level);
        MultiQuad x = *this;
        x.level_ = new_level;
        return x;
    }

    friend MultiQuad operator+(const MultiQuad& a, const MultiQuad& b) {
        MultiQuad r = a;
        r.level_ = common_level(a, b);
        for (const auto& [m, c] : b.coords_) r.add_to(m, c);
        return r;
    }
    friend MultiQuad operator-(const MultiQuad& a, const MultiQuad& b) {
        MultiQuad r = a;
        r.level_ = common_level(a, b);
        for (const auto& [m, c] : b.coords_) r.add_to(m, -c);
        return r;
    }
    MultiQuad operator-() const {
        MultiQuad r;
        r.level_ = level_;
        for (const auto& [m, c] : coords_) r.coords_.emplace(m, -c);
        return r;
    }

    // mu(F) * mu(G) = (prod_{j in F ∩ G} (s - j)) * mu(F xor G)
    friend MultiQuad operator*(const MultiQuad& a, const MultiQuad& b) {
        MultiQuad r;
        r.level_ = common_level(a, b);
        for (const auto& [ma, ca] : a.coords_) {
            for (const auto& [mb, cb] : b.coords_) {
                RatFunc c = ca * cb;
                Mask common = ma & mb;
                while (common) {
                    int j = std::countr_zero(common) + 1;
                    c *= RatFunc::s_minus(j);
                    common &= common - 1;
                }
                r.add_to(ma ^ mb, c);
            }
        }
        return r;
    }

    MultiQuad& operator+=(const MultiQuad& o) { return *this = *this + o; }
    MultiQuad& operator-=(const MultiQuad& o) { return *this = *this - o; }
    MultiQuad& operator*=(const MultiQuad& o) { return *this = *this * o; }

    // Conjugation automorphism sigma_j: u_j -> -u_j.
    MultiQuad conjugate(int j) const {
        if (j < 1 || j > level_) throw std::invalid_argument("MultiQuad: conjugation index");
        Mask bit = Mask(1) << (j - 1);
        MultiQuad r;
        r.level_ = level_;
        for (const auto& [m, c] : coords_) r.coords_.emplace(m, (m & bit) ? -c : c);
        return r;
    }

    // Inverse by rationalization down the tower: split on the highest root j
    // present, multiply by the conjugate and recurse on the norm, which no
    // longer involves u_j.
    friend MultiQuad inv(const MultiQuad& x) {
        if (x.is_zero()) throw std::domain_error("MultiQuad: division by zero");
        Mask used = 0;
        for (const auto& [m, c] : x.coords_) used |= m;
        if (used == 0) {
            MultiQuad r(inv(x.scalar_part()));
            r.level_ = x.level_;
            return r;
        }
        int j = 31 - std::countl_zero(used) + 1;  // highest active root
        MultiQuad conj = x.conjugate(j);
        MultiQuad norm = x * conj;
        return conj * inv(norm);
    }

    friend MultiQuad operator/(const MultiQuad& a, const MultiQuad& b) { return a * inv(b); }

    friend bool operator==(const MultiQuad& a, const MultiQuad& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const MultiQuad& a, const MultiQuad& b) { return !(a == b); }

    // Rendered as a sum of c_F * sqrt((s-j1)...(s-jr)) terms.
    std::string str() const {
        if (coords_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : coords_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (m) {
                os << "*sqrt(";
                Mask rest = m;
                bool f2 = true;
                while (rest) {
                    int j = std::countr_zero(rest) + 1;
                    if (!f2) os << "*";
                    f2 = false;
                    os << "(s-" << j << ")";
                    rest &= rest - 1;
                }
                os << ")";
            }
        }
        return os.str();
    }

private:
    static void check_level(int level) {
        if (level < 0 || level > max_level)
            throw std::invalid_argument("MultiQuad: level out of range");
    }
    // Scalars embed anywhere; two distinct non-scalar levels need an explicit lift.
    static int common_level(const MultiQuad& a, const MultiQuad& b) {
        if (a.level_ == b.level_) return a.level_;
        if (a.is_scalar() || b.is_scalar()) return a.level_ > b.level_ ? a.level_ : b.level_;
        throw std::invalid_argument("MultiQuad: level mismatch");
    }
    void set(Mask m, const RatFunc& c) {
        if (!c.is_zero()) coords_[m] = c;
    }
    void add_to(Mask m, const RatFunc& c) {
        auto it = coords_.find(m);
        if (it == coords_.end()) {
            if (!c.is_zero()) coords_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coords_.erase(it);
        }
    }

    int level_;
    std::map<Mask, RatFunc> coords_;
};

inline bool is_zero(const MultiQuad& x) { return x.is_zero(); }
inline std::string to_string(const MultiQuad& x) { return x.str(); }

}  // namespace degfn

#endif
