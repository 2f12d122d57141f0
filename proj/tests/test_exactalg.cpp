#include "doctest.h"

#include "oracles.hpp"

using namespace seifertkit;

TEST_CASE("det") {
    CHECK(det(IntMatrix::identity(2)) == 1);
    CHECK(det(IntMatrix{{3, 2}, {1, 0}}) == -2);
    CHECK(det(IntMatrix{{6, 3}, {3, 0}}) == -9);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK(det(IntMatrix{{0, 1, 2}, {0, 3, 4}, {5, 6, 7}}) == 5 * (4 - 6));
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);

    std::mt19937 rng(7);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + k % 5;
        const IntMatrix m = oracle::random_matrix(rng, n, n, -9, 9);
        REQUIRE(det(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("determinants stay exact past 64 bits") {
    IntMatrix m{{1, 0}, {0, 1}};
    m(0, 0) = Integer("123456789012345678901234567890");
    m(1, 1) = Integer("987654321098765432109876543210");
    CHECK(det(m) == m(0, 0) * m(1, 1));
}

TEST_CASE("congruent_transform") {
    const IntMatrix v{{3, 2}, {1, 0}};
    CHECK(congruent_transform(IntMatrix::identity(2), v) == v);
    CHECK(congruent_transform(IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{0, 1}, {2, 0}}) == IntMatrix{{3, 1}, {2, 0}});
    CHECK(congruent_transform(IntMatrix{{-1, 0}, {0, -1}}, v) == v);
    CHECK_THROWS_AS(congruent_transform(IntMatrix{{2, 0}, {0, 1}}, v), InvalidMoveError);
    CHECK_THROWS_AS(congruent_transform(IntMatrix::identity(3), v), DimensionError);
}

TEST_CASE("congruence preserves det V and det(V - V^T)") {
    std::mt19937 rng(11);
    for (int k = 0; k < 500; ++k) {
        const IntMatrix v = oracle::random_matrix(rng, 2, 2, -10, 10);
        const IntMatrix p = oracle::random_unimodular(rng, 2, 5);
        const IntMatrix w = congruent_transform(p, v);
        REQUIRE(det(w) == det(v));
        REQUIRE(det(w - w.transpose()) == det(v - v.transpose()));
    }
}

namespace {

void check_snf(const IntMatrix &m) {
    const SnfResult r = smith_normal_form(m);
    REQUIRE(r.u * m * r.w == r.s);
    REQUIRE(abs(det(r.u)) == 1);
    REQUIRE(abs(det(r.w)) == 1);
    for (std::size_t i = 0; i < r.s.rows(); ++i)
        for (std::size_t j = 0; j < r.s.cols(); ++j)
            if (i != j)
                REQUIRE(r.s(i, j) == 0);
    const auto d = r.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        REQUIRE(d[i] >= 0);
        if (i + 1 < d.size()) {
            if (d[i] == 0)
                REQUIRE(d[i + 1] == 0);
            else
                REQUIRE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
        }
    }
}

} // namespace

TEST_CASE("smith_normal_form examples") {
    CHECK(smith_normal_form(IntMatrix{{6, 3}, {3, 0}}).diagonal() == std::vector<Integer>{3, 3});
    CHECK(smith_normal_form(IntMatrix{{-2, 3}, {3, 0}}).diagonal() == std::vector<Integer>{1, 9});
    CHECK(smith_normal_form(IntMatrix(2, 2)).diagonal() == std::vector<Integer>{0, 0});
    check_snf(IntMatrix{{6, 3}, {3, 0}});
    check_snf(IntMatrix(0, 3));
}

TEST_CASE("smith_normal_form invariants on random matrices up to 4x4") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 1500; ++k) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        check_snf(oracle::random_matrix(rng, r, c, -20, 20));
    }
    // low-rank inputs exercise the zero tail of the diagonal
    for (int k = 0; k < 200; ++k) {
        const IntMatrix a = oracle::random_matrix(rng, 4, 1, -5, 5);
        const IntMatrix b = oracle::random_matrix(rng, 1, 4, -5, 5);
        check_snf(a * b);
    }
}

TEST_CASE("is_perfect_square") {
    CHECK(is_perfect_square(9) == Integer(3));
    CHECK_FALSE(is_perfect_square(15));
    CHECK(is_perfect_square(0) == Integer(0));
    CHECK_FALSE(is_perfect_square(-4));
    for (long n = 0; n <= 10000; ++n) {
        std::optional<long> root;
        for (long r = 0; r * r <= n; ++r)
            if (r * r == n)
                root = r;
        const auto got = is_perfect_square(n);
        REQUIRE(got.has_value() == root.has_value());
        if (root)
            REQUIRE(*got == *root);
    }
}

TEST_CASE("isotropic_vector") {
    CHECK(isotropic_vector(IntMatrix{{3, 2}, {1, 0}}) == IntVec2{0, 1});
    CHECK_FALSE(isotropic_vector(IntMatrix{{-1, 1}, {0, -1}}));
    CHECK_FALSE(isotropic_vector(IntMatrix{{1, 2}, {1, -2}}));
    // -x^2 - xy + 2y^2 = -(x + 2y)(x - y); "+" root first
    CHECK(isotropic_vector(IntMatrix{{-1, 0}, {-1, 2}}) == IntVec2{1, 1});
    CHECK(isotropic_lines(IntMatrix{{-1, 0}, {-1, 2}}) == std::vector<IntVec2>{{1, 1}, {2, -1}});
    CHECK(isotropic_lines(IntMatrix(2, 2)) == std::vector<IntVec2>{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(isotropic_vector(IntMatrix::identity(3)), DimensionError);
}

TEST_CASE("isotropic_vector agrees with exhaustive search on all 2x2 forms in [-6,6]") {
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c = -6; c <= 6; ++c)
                for (long d = -6; d <= 6; ++d) {
                    const IntMatrix v{{a, b}, {c, d}};
                    const long m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
                    const auto got = isotropic_vector(v);
                    REQUIRE(got.has_value() == oracle::exhaustive_isotropic(a, b + c, d, 4 * (1 + m) * (1 + m)));
                    if (got) {
                        const Integer q = a * got->x * got->x + (b + c) * got->x * got->y + d * got->y * got->y;
                        REQUIRE(q == 0);
                        REQUIRE(gcd(got->x, got->y) == 1);
                        REQUIRE((got->x > 0 || (got->x == 0 && got->y > 0)));
                    }
                }
}

TEST_CASE("signature") {
    CHECK(signature(IntMatrix{{-2, -1}, {-1, -2}}) == -2);
    CHECK(signature(IntMatrix::identity(2)) == 2);
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(signature(IntMatrix(3, 3)) == 0);
    CHECK_THROWS_AS(signature(IntMatrix{{0, 1}, {2, 0}}), DomainError);
    CHECK_THROWS_AS(signature(IntMatrix::identity(5)), DomainError);

    std::mt19937 rng(5);
    for (int k = 0; k < 600; ++k) {
        const std::size_t n = 1 + k % 4;
        const IntMatrix a = oracle::random_matrix(rng, n, n, -4, 4);
        IntMatrix s = a + a.transpose();
        if (k % 3 == 0) // zero diagonals force the off-diagonal pivot path
            for (std::size_t i = 0; i < n; ++i)
                s(i, i) = 0;
        REQUIRE(signature(s) == oracle::descartes_signature(s));
    }
}

TEST_CASE("matrix text round trip") {
    const IntMatrix m{{3, -2}, {1, 0}};
    CHECK(m.to_string() == "[[3,-2],[1,0]]");
    CHECK(parse_matrix(" [ [3, -2] , [1,0] ] ") == m);
    CHECK(parse_matrix("[]") == IntMatrix(0, 0));
    CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), InputError);
    CHECK_THROWS_AS(parse_matrix("[[1,x]]"), InputError);
}

TEST_CASE("SeifertMatrix validates det(V - V^T) = 1") {
    CHECK_NOTHROW(SeifertMatrix{{3, 2}, {1, 0}});
    CHECK_THROWS_AS((SeifertMatrix{{3, 3}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix(2, 3)), DimensionError);
    // 2x2 forces |b - c| = 1
    for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
            CHECK(SeifertMatrix::is_seifert(IntMatrix{{0, b}, {c, 0}}) == (std::abs(b - c) == 1));
}
