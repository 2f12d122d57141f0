// Test-only reference computations. None of these share code paths with the
// routines they check: determinants by Laplace expansion, isotropy by
// exhaustive search, signatures by Descartes' rule on the characteristic
// polynomial.
#pragma once

#include <random>
#include <vector>

#include "seifertkit/seifertkit.hpp"

namespace oracle {

using seifertkit::IntMatrix;
using seifertkit::Integer;
using seifertkit::LaurentPoly;

// Laplace expansion along the first row, over any ring-like T.
template <class T, class Get>
T laplace(std::size_t n, const std::vector<std::size_t> &rows, const std::vector<std::size_t> &cols, Get get,
          const T &one) {
    if (rows.empty())
        return one;
    T sum{};
    bool first = true;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
        T term = get(rows[0], cols[k]) * laplace<T>(n, sub_rows, sub_cols, get, one);
        if (k % 2 == 1)
            term = T(-1) * term;
        sum = first ? term : sum + term;
        first = false;
    }
    return sum;
}

inline std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

inline Integer cofactor_det(const IntMatrix &m) {
    return laplace<Integer>(m.rows(), iota(m.rows()), iota(m.cols()),
                            [&](std::size_t i, std::size_t j) { return m(i, j); }, Integer(1));
}

// det(V - t V^T) entry by entry as Laurent polynomials.
inline LaurentPoly cofactor_alexander(const IntMatrix &v) {
    auto get = [&](std::size_t i, std::size_t j) { return LaurentPoly({v(i, j), -v(j, i)}, 0); };
    struct P {
        LaurentPoly p;
        P() = default;
        P(LaurentPoly q) : p(std::move(q)) {}
        explicit P(int c) : p(LaurentPoly::constant(c)) {}
        P operator*(const P &o) const { return P(p * o.p); }
        P operator+(const P &o) const { return P(p + o.p); }
    };
    return laplace<P>(v.rows(), iota(v.rows()), iota(v.cols()), [&](std::size_t i, std::size_t j) { return P(get(i, j)); },
                      P(1))
        .p;
}

// Some (x, y) != 0 with |x|, |y| <= bound and q(x, y) = 0.
// Machine integers: callers keep entries and bound small. Only y >= 0 is
// scanned since q(-x, -y) = q(x, y).
inline bool exhaustive_isotropic(long a, long mid, long d, long bound) {
    for (long y = 0; y <= bound; ++y)
        for (long x = -bound; x <= bound; ++x) {
            if (y == 0 && x <= 0)
                continue;
            if (a * x * x + mid * x * y + d * y * y == 0)
                return true;
        }
    return false;
}

inline long sign_changes(const std::vector<Integer> &c) {
    long changes = 0;
    int last = 0;
    for (const auto &x : c) {
        const int s = sgn(x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

// Symmetric matrices have real spectra, so Descartes' count is exact.
inline long descartes_signature(const IntMatrix &m) {
    auto get = [&](std::size_t i, std::size_t j) {
        return i == j ? LaurentPoly({-m(i, j), Integer(1)}, 0) : LaurentPoly::constant(-m(i, j));
    };
    struct P {
        LaurentPoly p;
        P() = default;
        P(LaurentPoly q) : p(std::move(q)) {}
        explicit P(int c) : p(LaurentPoly::constant(c)) {}
        P operator*(const P &o) const { return P(p * o.p); }
        P operator+(const P &o) const { return P(p + o.p); }
    };
    const LaurentPoly chi =
        laplace<P>(m.rows(), iota(m.rows()), iota(m.cols()), [&](std::size_t i, std::size_t j) { return P(get(i, j)); },
                   P(1))
            .p;
    std::vector<Integer> pos, neg;
    for (long e = 0; e <= chi.highdeg(); ++e) {
        pos.push_back(chi.coeff(e));
        neg.push_back(e % 2 == 0 ? chi.coeff(e) : Integer(-chi.coeff(e)));
    }
    return sign_changes(pos) - sign_changes(neg);
}

inline IntMatrix random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

// Product of elementary unimodular matrices, entries kept small.
inline IntMatrix random_unimodular(std::mt19937 &rng, std::size_t n, int ops = 4) {
    IntMatrix p = IntMatrix::identity(n);
    if (n == 0)
        return p;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int k = 0; k < ops; ++k) {
        const std::size_t i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
        case 0:
            p.swap_rows(i, j);
            break;
        case 1:
            p.negate_row(i);
            break;
        default:
            if (i != j)
                p.add_row_multiple(i, j, mult(rng));
        }
    }
    return p;
}

// 2x2 Seifert matrix ((a,b),(c,d)) with c = b +- 1, entries in [lo, hi] where possible.
inline IntMatrix random_seifert_2x2(std::mt19937 &rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        const long a = dist(rng), b = dist(rng), d = dist(rng);
        const long c = coin(rng) ? b + 1 : b - 1;
        if (c < lo || c > hi)
            continue;
        return IntMatrix{{a, b}, {c, d}};
    }
}

} // namespace oracle
