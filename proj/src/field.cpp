#include "girthforge/field.hpp"

#include <algorithm>

namespace girthforge {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first, no trailing zeros.
using Poly = std::vector<int>;

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly ptrim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a mod m over GF(p); m monic.
Poly pmod(Poly a, const Poly& m, int p) {
    a = ptrim(std::move(a));
    while (pdeg(a) >= pdeg(m)) {
        int shift = pdeg(a) - pdeg(m);
        int c = a.back();
        for (int i = 0; i <= pdeg(m); ++i) {
            int& t = a[i + shift];
            t = ((t - c * m[i]) % p + p) % p;
        }
        a = ptrim(std::move(a));
    }
    return a;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return ptrim(std::move(r));
}

Poly decode(int e, int p, int k) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) { a[i] = e % p; e /= p; }
    return ptrim(std::move(a));
}

int encode(const Poly& a, int p) {
    int e = 0;
    for (int i = pdeg(a); i >= 0; --i) e = e * p + a[i];
    return e;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible(const Poly& f, int p) {
    int k = pdeg(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    for (int d = 1; 2 * d <= k; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long low = 0; low < count; ++low) {
            Poly g = decode(static_cast<int>(low), p, d);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power_decompose(long long q) {
    if (q < 2) return std::nullopt;
    long long m = q;
    int p = 0;
    for (int d = 2; static_cast<long long>(d) * d <= m; ++d) {
        if (m % d == 0) { p = d; break; }
    }
    if (p == 0) p = static_cast<int>(m);  // q itself prime
    int k = 0;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, k);
}

Field Field::create(int q) {
    auto pk = prime_power_decompose(q);
    if (!pk) throw NotPrimePower(std::to_string(q) + " is not a prime power (or < 2)");
    if (q > 1024) throw BadParameters("q > 1024 unsupported");
    Field f;
    f.p_ = pk->first;
    f.k_ = pk->second;
    f.q_ = q;

    const int p = f.p_, k = f.k_;
    // Lexicographically smallest monic irreducible of degree k: ascending scan of the
    // low-coefficient encoding, which orders by most significant coefficient first.
    Poly red;
    for (int low = 0;; ++low) {
        Poly cand = decode(low, p, k);
        cand.resize(k + 1, 0);
        cand[k] = 1;
        if (irreducible(cand, p)) { red = cand; break; }
    }
    f.reduction_ = red;

    f.add_.resize(static_cast<size_t>(q) * q);
    f.mul_.resize(static_cast<size_t>(q) * q);
    f.neg_.resize(q);
    f.inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        Poly pa = decode(a, p, k);
        {
            Poly na = pa;
            for (int& c : na) c = (p - c) % p;
            f.neg_[a] = encode(na, p);
        }
        for (int b = 0; b < q; ++b) {
            Poly pb = decode(b, p, k);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int ca = i < pa.size() ? pa[i] : 0;
                int cb = i < pb.size() ? pb[i] : 0;
                s[i] = (ca + cb) % p;
            }
            f.add_[static_cast<size_t>(a) * q + b] = static_cast<uint16_t>(encode(ptrim(s), p));
            Poly m = pmod(pmul(pa, pb, p), red, p);
            f.mul_[static_cast<size_t>(a) * q + b] = static_cast<uint16_t>(encode(m, p));
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f.mul_[static_cast<size_t>(a) * q + b] == 1) { f.inv_[a] = b; break; }
        }
    }
    return f;
}

int Field::pow(int a, long long e) const {
    check(a);
    if (e < 0) throw BadParameters("negative exponent");
    int r = one_, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

LinearSolution solve_linear(const Field& f, const std::vector<std::vector<int>>& matrix,
                            const std::vector<int>& rhs) {
    const size_t rows = matrix.size();
    if (rhs.size() != rows) throw DimensionMismatch("rhs length != row count");
    size_t cols = rows ? matrix[0].size() : 0;
    for (const auto& r : matrix)
        if (r.size() != cols) throw DimensionMismatch("ragged matrix");

    // Augmented RREF.
    std::vector<std::vector<int>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        a[i] = matrix[i];
        a[i].push_back(rhs[i]);
    }
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        int iv = f.inv(a[r][c]);
        for (size_t j = c; j <= cols; ++j) a[r][j] = f.mul(a[r][j], iv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            int factor = a[i][c];
            for (size_t j = c; j <= cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }

    LinearSolution sol;
    sol.rank = static_cast<int>(r);
    for (size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) sol.consistent = false;
    if (!sol.consistent) return sol;

    sol.particular.assign(cols, 0);
    for (size_t i = 0; i < pivot_col.size(); ++i)
        sol.particular[pivot_col[i]] = a[i][cols];

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(cols, 0);
        v[c] = f.one();
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = f.neg(a[i][c]);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace girthforge
