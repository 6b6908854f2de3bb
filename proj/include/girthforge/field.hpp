#ifndef GIRTHFORGE_FIELD_HPP
#define GIRTHFORGE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "girthforge/errors.hpp"

namespace girthforge {

// GF(p^k) with elements encoded as integers 0..q-1: the element a0 + a1*x + ... is
// encoded as a0 + a1*p + a2*p^2 + ... (base-p digits of the polynomial representation).
// The reduction polynomial is the lexicographically smallest monic irreducible of
// degree k over GF(p), found by enumeration. Immutable after construction.
class Field {
public:
    // q must be a prime power >= 2 and <= 1024. Throws NotPrimePower otherwise.
    static Field create(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    // Coefficients of the reduction polynomial, constant term first, degree k (monic).
    const std::vector<int>& reduction_poly() const { return reduction_; }

    int add(int a, int b) const { return table(add_, a, b); }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return table(mul_, a, b); }
    int neg(int a) const { check(a); return neg_[a]; }
    int inv(int a) const {
        check(a);
        if (a == 0) throw DivisionByZero();
        return inv_[a];
    }
    // a^e for e >= 0.
    int pow(int a, long long e) const;

    bool is_zero(int a) const { check(a); return a == 0; }
    int zero() const { return 0; }
    int one() const { return one_; }

private:
    Field() = default;
    int table(const std::vector<uint16_t>& t, int a, int b) const {
        check(a); check(b);
        return t[static_cast<size_t>(a) * q_ + b];
    }
    void check(int a) const {
        if (a < 0 || a >= q_) throw OutOfRange("element " + std::to_string(a) +
                                               " not in 0.." + std::to_string(q_ - 1));
    }

    int p_ = 0, k_ = 0, q_ = 0, one_ = 1;
    std::vector<int> reduction_;
    std::vector<uint16_t> add_, mul_;
    std::vector<int> neg_, inv_;
};

// Tries to write q = p^k with p prime, k >= 1. Empty if q is not a prime power or q < 2.
std::optional<std::pair<int, int>> prime_power_decompose(long long q);

// Row-reduced description of the affine solution set of matrix * x = rhs over f.
struct LinearSolution {
    int rank = 0;
    bool consistent = true;
    std::vector<int> particular;             // one solution (empty if inconsistent)
    std::vector<std::vector<int>> kernel;    // basis of the homogeneous solution space
};

// matrix is row-major, rows.size() x cols; rhs.size() must equal rows.
LinearSolution solve_linear(const Field& f, const std::vector<std::vector<int>>& matrix,
                            const std::vector<int>& rhs);

}  // namespace girthforge

#endif
