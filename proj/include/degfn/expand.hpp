#ifndef DEGFN_EXPAND_HPP
#define DEGFN_EXPAND_HPP

#include <stdexcept>
#include <vector>

#include "degfn/poly.hpp"

namespace degfn {

// Expansion of f in A[Y] along the tower F_0 = Y, F_{i+1} = F_i^2 - a_i:
// a finite sum of coeff * mu(S) with mu(S) = prod_{i in S} F_i, the S
// distinct and the coefficients nonzero elements of A.  Since F_i is
// monic of Y-degree 2^i, deg_Y mu(S) = sum_{i in S} 2^i identifies S.
template <typename F>
struct ExpansionTerm {
    std::vector<unsigned> set;  // ascending indices i of the F_i in mu(S)
    Polynomial<F> coeff;        // element of A (Y-exponent zero)
};

template <typename F>
struct Expansion {
    std::size_t y_index = 0;
    std::vector<ExpansionTerm<F>> terms;  // descending deg_Y mu(S)
};

// the tower polynomials F_0..F_count-1; a_i must be Y-free
template <typename F>
std::vector<Polynomial<F>> tower_polys(std::size_t var_count, std::size_t y_index,
                                       const std::vector<Polynomial<F>>& a, std::size_t count) {
    if (count > a.size() + 1) throw std::invalid_argument("tower: insufficient a_i");
    std::vector<Polynomial<F>> fs;
    fs.push_back(Polynomial<F>::variable(var_count, y_index));
    for (std::size_t i = 0; i + 1 < count; ++i) {
        if (a[i].var_count() != var_count) throw std::invalid_argument("tower: arity mismatch");
        if (a[i].degree_in(y_index) > 0) throw std::invalid_argument("tower: a_i must be Y-free");
        fs.push_back(fs.back() * fs.back() - a[i]);
    }
    return fs;
}

template <typename F>
Polynomial<F> mu(const std::vector<Polynomial<F>>& fs, const std::vector<unsigned>& set,
                 std::size_t var_count) {
    Polynomial<F> p = Polynomial<F>::constant(var_count, F(1));
    for (unsigned i : set) p *= fs.at(i);
    return p;
}

// Greedy expansion: the binary digits of the leading Y-degree name the
// unique top set S; strip coeff * mu(S) and repeat.  Terminates because
// the Y-degree strictly decreases.
template <typename F>
Expansion<F> expand(const Polynomial<F>& f, std::size_t y_index,
                    const std::vector<Polynomial<F>>& a) {
    if (f.is_zero()) throw std::invalid_argument("expand: zero input");
    int d = f.degree_in(y_index);
    std::size_t bits = 0;
    while ((1 << bits) <= d) ++bits;  // 2^bits > d
    if (a.size() < 63 && (unsigned long long)d >= (1ULL << a.size()))
        throw std::invalid_argument("expand: insufficient a_i for Y-degree " + std::to_string(d));
    std::vector<Polynomial<F>> fs = tower_polys(f.var_count(), y_index, a, std::max<std::size_t>(bits, 1));

    Expansion<F> out;
    out.y_index = y_index;
    Polynomial<F> rest = f;
    while (!rest.is_zero()) {
        int dy = rest.degree_in(y_index);
        std::vector<unsigned> set;
        for (unsigned i = 0; (1 << i) <= dy; ++i)
            if (dy & (1 << i)) set.push_back(i);
        Polynomial<F> c = rest.coeff_of(y_index, (std::uint32_t)dy);
        out.terms.push_back({set, c});
        rest -= c * mu(fs, set, f.var_count());
        if (!rest.is_zero() && rest.degree_in(y_index) >= dy)
            throw std::logic_error("expand: Y-degree failed to decrease");
    }
    return out;
}

template <typename F>
Polynomial<F> reconstruct(const Expansion<F>& e, const std::vector<Polynomial<F>>& a,
                          std::size_t var_count) {
    std::size_t count = 1;
    for (const auto& t : e.terms)
        for (unsigned i : t.set) count = std::max<std::size_t>(count, i + 1);
    std::vector<Polynomial<F>> fs = tower_polys(var_count, e.y_index, a, count);
    Polynomial<F> sum(var_count);
    for (const auto& t : e.terms) sum += t.coeff * mu(fs, t.set, var_count);
    return sum;
}

}  // namespace degfn

#endif
