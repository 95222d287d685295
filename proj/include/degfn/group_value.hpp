#ifndef DEGFN_GROUP_VALUE_HPP
#define DEGFN_GROUP_VALUE_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace degfn {

// An element of G ∪ {−∞} where G is a lexicographically ordered group of
// integer tuples.  Arity 1 (plain integers) covers the common case.
class GroupValue {
public:
    GroupValue() : finite_(false) {}
    GroupValue(long long v) : finite_(true), tuple_{v} {}
    explicit GroupValue(std::vector<long long> tuple)
        : finite_(true), tuple_(std::move(tuple)) {
        if (tuple_.empty()) throw std::invalid_argument("GroupValue: empty tuple");
    }

    static GroupValue minus_infinity() { return GroupValue(); }

    bool is_minus_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }

    std::size_t arity() const { return tuple_.size(); }

    // Single-integer access; valid only for finite arity-1 values.
    long long as_int() const {
        if (!finite_ || tuple_.size() != 1)
            throw std::logic_error("GroupValue: not a finite integer");
        return tuple_[0];
    }

    const std::vector<long long>& tuple() const { return tuple_; }

    friend GroupValue operator+(const GroupValue& a, const GroupValue& b) {
        if (!a.finite_ || !b.finite_) return minus_infinity();
        check_arity(a, b);
        std::vector<long long> t(a.tuple_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.tuple_[i] + b.tuple_[i];
        return GroupValue(std::move(t));
    }

    friend GroupValue operator-(const GroupValue& a, const GroupValue& b) {
        if (!b.finite_) throw std::logic_error("GroupValue: cannot subtract -inf");
        if (!a.finite_) return minus_infinity();
        check_arity(a, b);
        std::vector<long long> t(a.tuple_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.tuple_[i] - b.tuple_[i];
        return GroupValue(std::move(t));
    }

    // n·v (n a natural scalar), used for monomial weights.
    friend GroupValue scale(const GroupValue& a, long long n) {
        if (!a.finite_) return minus_infinity();
        std::vector<long long> t(a.tuple_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.tuple_[i] * n;
        return GroupValue(std::move(t));
    }

    friend bool operator==(const GroupValue& a, const GroupValue& b) {
        if (a.finite_ != b.finite_) return false;
        if (!a.finite_) return true;
        return a.tuple_ == b.tuple_;
    }
    friend bool operator!=(const GroupValue& a, const GroupValue& b) { return !(a == b); }

    friend bool operator<(const GroupValue& a, const GroupValue& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        check_arity(a, b);
        return a.tuple_ < b.tuple_;  // lexicographic
    }
    friend bool operator<=(const GroupValue& a, const GroupValue& b) { return a < b || a == b; }
    friend bool operator>(const GroupValue& a, const GroupValue& b) { return b < a; }
    friend bool operator>=(const GroupValue& a, const GroupValue& b) { return b <= a; }

    std::string str() const {
        if (!finite_) return "-inf";
        if (tuple_.size() == 1) return std::to_string(tuple_[0]);
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < tuple_.size(); ++i) {
            if (i) os << ',';
            os << tuple_[i];
        }
        os << ')';
        return os.str();
    }

private:
    static void check_arity(const GroupValue& a, const GroupValue& b) {
        if (a.tuple_.size() != b.tuple_.size())
            throw std::logic_error("GroupValue: arity mismatch");
    }

    bool finite_;
    std::vector<long long> tuple_;
};

inline GroupValue max(const GroupValue& a, const GroupValue& b) { return a < b ? b : a; }
inline GroupValue min(const GroupValue& a, const GroupValue& b) { return a < b ? a : b; }

}  // namespace degfn

#endif
