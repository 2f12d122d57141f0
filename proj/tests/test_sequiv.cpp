#include "doctest.h"

#include "certgen.hpp"

using namespace seifertkit;

namespace {

IntMatrix metab(long a, long b) { return IntMatrix{{a, b}, {b + 1, 0}}; }

} // namespace

TEST_CASE("apply_move") {
    const SeifertMatrix v{{3, 2}, {1, 0}};
    CHECK(apply_move(v, moves::ColumnExpansion{{1, -1}}).matrix() ==
          IntMatrix{{3, 2, 0, 0}, {1, 0, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 0}});
    CHECK(apply_move(v, moves::RowExpansion{{1, -1}}).matrix() ==
          IntMatrix{{3, 2, 1, 0}, {1, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(apply_move(apply_move(v, moves::ColumnExpansion{{4, 5}}), moves::ColumnContraction{}) == v);
    CHECK(apply_move(apply_move(v, moves::RowExpansion{{4, 5}}), moves::RowContraction{}) == v);
    CHECK(apply_move(v, moves::Congruence{IntMatrix{{0, 1}, {1, 0}}}).matrix() == IntMatrix{{0, 1}, {2, 3}});

    CHECK_THROWS_AS(apply_move(v, moves::Congruence{IntMatrix{{2, 1}, {1, 2}}}), InvalidMoveError);
    CHECK_THROWS_AS(apply_move(v, moves::Congruence{IntMatrix::identity(3)}), InvalidMoveError);
    CHECK_THROWS_AS(apply_move(v, moves::ColumnExpansion{{1}}), InvalidMoveError);
    CHECK_THROWS_AS(apply_move(v, moves::ColumnContraction{}), InvalidMoveError);
    CHECK_THROWS_AS(apply_move(apply_move(v, moves::RowExpansion{{0, 0}}), moves::ColumnContraction{}),
                    InvalidMoveError);
}

TEST_CASE("chain certificate passes through the expected intermediates") {
    const long a = 6, b = 5;
    const auto cert = lemma_chain_certificate(a, b);
    std::vector<IntMatrix> seen{cert.source()};
    for (const auto &s : cert.steps)
        seen.push_back(s.after);
    const std::vector<IntMatrix> expected = {
        metab(a, b),
        IntMatrix{{a, b, 1, 0}, {b + 1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}},
        IntMatrix{{a, 0, 1, 0}, {b + 1, 0, 0, -b}, {0, 0, 0, 1}, {0, 0, 0, 0}},
        IntMatrix{{a, 0, 1, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {b + 1, -b, 0, 0}},
        IntMatrix{{a, 0, 1, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}, {1, -b, 0, 0}},
        IntMatrix{{a, a * b, 1, 0}, {a * b, a * b * b, b, 0}, {0, 1 + b, 0, 0}, {1, 0, 0, 0}},
        IntMatrix{{0, 1 + b, 0, 0}, {b, a * b * b, b * a, 0}, {1, a * b, a, 0}, {0, 0, 1, 0}},
        IntMatrix{{0, 1 + b}, {b, a * b * b}},
        metab(a * b * b, b),
    };
    std::size_t pos = 0;
    for (const auto &m : expected) {
        while (pos < seen.size() && !(seen[pos] == m))
            ++pos;
        REQUIRE_MESSAGE(pos < seen.size(), "missing " << m.to_string());
    }
    CHECK(verify_certificate(cert));
}

TEST_CASE("chain certificate endpoints") {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {6, 5}, {-3, -2}, {2, 0}, {4, -1}}) {
        const auto cert = lemma_chain_certificate(a, b);
        CHECK(verify_certificate(cert));
        CHECK(cert.source() == metab(a, b));
        CHECK(cert.target() == metab(a * b * b, b));
    }
    CHECK(lemma_chain_certificate(6, 5).target() == IntMatrix{{150, 5}, {6, 0}});
}

TEST_CASE("verify_certificate reports the broken step") {
    auto cert = lemma_chain_certificate(2, 3);
    REQUIRE(verify_certificate(cert));
    cert.steps[4].after(0, 0) += 1;
    const auto r = verify_certificate(cert);
    CHECK_FALSE(r);
    REQUIRE(r.failed_step);
    CHECK(*r.failed_step == 4);

    auto broken = lemma_chain_certificate(2, 3);
    broken.steps[2].before(1, 1) += 1;
    const auto r2 = verify_certificate(broken);
    CHECK_FALSE(r2);
    CHECK(*r2.failed_step == 2);
}

TEST_CASE("congruence_classifier_2x2") {
    CHECK_FALSE(congruence_classifier_2x2(-1, 1, 0));
    CHECK(congruence_classifier_2x2(0, 1, 3) == Integer(1));
    CHECK(congruence_classifier_2x2(5, 0, 7) == Integer(2));
    CHECK(congruence_classifier_2x2(4, -1, 7) == Integer(-3));
    CHECK(congruence_classifier_2x2(2, 3, 2) == Integer(0));
    for (long a = -10; a <= 10; ++a)
        for (long b = -5; b <= 5; ++b)
            for (long c = -10; c <= 10; ++c) {
                const auto n = congruence_classifier_2x2(a, b, c);
                REQUIRE(n.has_value() == ((c - a) % (2 * b + 1) == 0));
                if (n) {
                    REQUIRE(a + *n * (2 * b + 1) == c);
                    const IntMatrix p(2, 2, {Integer(1), *n, Integer(0), Integer(1)});
                    REQUIRE(congruent_transform(p, metab(a, b)) == metab(c, b));
                }
            }
}

TEST_CASE("brute_force_congruence") {
    CHECK(brute_force_congruence(metab(3, 1), metab(3, 1), 1) == IntMatrix{{-1, 0}, {0, -1}});
    CHECK(brute_force_congruence(metab(0, 1), metab(3, 1), 3) == IntMatrix{{-1, -1}, {0, -1}});
    CHECK_FALSE(brute_force_congruence(IntMatrix{{-1, 2}, {1, 0}}, IntMatrix{{0, 2}, {1, 0}}, 6));
    CHECK(brute_force_congruence(IntMatrix(0, 0), IntMatrix(0, 0), 0) == IntMatrix(0, 0));
    CHECK_THROWS_AS(brute_force_congruence(IntMatrix::identity(2), IntMatrix::identity(3), 1), DimensionError);

    // every returned witness is genuine
    std::mt19937 rng(8);
    for (int k = 0; k < 60; ++k) {
        const IntMatrix v = oracle::random_seifert_2x2(rng, -3, 3);
        const IntMatrix p = oracle::random_unimodular(rng, 2, 3);
        const IntMatrix w = congruent_transform(p, v);
        const auto got = brute_force_congruence(v, w, static_cast<unsigned long>(p.max_abs().get_si()));
        REQUIRE(got);
        REQUIRE(is_unimodular(*got));
        REQUIRE(congruent_transform(*got, v) == w);
    }
}

TEST_CASE("construct_sequiv_pair") {
    const auto p5 = construct_sequiv_pair(5);
    CHECK(p5.a == 6);
    CHECK(p5.k == -13);
    const auto p6 = construct_sequiv_pair(6);
    CHECK(p6.a == 3);
    CHECK(p6.k == -8);
    CHECK(verify_certificate(p6.cert));
    CHECK(p6.cert.source() == metab(3, 6));
    CHECK(p6.cert.target() == metab(4, 6));
    CHECK_THROWS_AS(construct_sequiv_pair(7), PreconditionError);
    CHECK_THROWS_AS(construct_sequiv_pair(4), PreconditionError);
    CHECK_THROWS_AS(construct_sequiv_pair(-6), PreconditionError);
}

TEST_CASE("trotter_rigid") {
    CHECK(trotter_rigid(SeifertMatrix{{-1, 2}, {1, 0}}));
    CHECK(trotter_rigid(SeifertMatrix{{3, 2}, {1, 0}}));
    CHECK_FALSE(trotter_rigid(SeifertMatrix(metab(1, 2))));
    CHECK_FALSE(trotter_rigid(SeifertMatrix{{0, 0}, {1, 0}}));
    CHECK(trotter_rigid(SeifertMatrix{{-1, 1}, {0, -1}}));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(-7)); // callers pass |det|
}

TEST_CASE("certificate text round trip") {
    const auto cert = construct_sequiv_pair(8).cert;
    const std::string text = serialize_certificate(cert);
    CHECK(text.rfind("MOVE kind=row_expansion params=[1,0] from=[[", 0) == 0);
    const auto back = parse_certificate("# header\n\n" + text);
    CHECK(serialize_certificate(back) == text);
    CHECK(verify_certificate(back));
    CHECK_THROWS_AS(parse_certificate("MOVE kind=twist params=[] from=[] to=[]"), InputError);
    CHECK_THROWS_AS(parse_certificate("STEP kind=congruence"), InputError);
    CHECK_THROWS_AS(parse_certificate("MOVE kind=congruence params=[[1,0],[0,1]] from=[[0,1],[2,0]]"), InputError);
}

TEST_CASE("random certificates preserve Delta and H_1") {
    std::mt19937 rng(41);
    for (int k = 0; k < 200; ++k) {
        const IntMatrix v = oracle::random_seifert_2x2(rng, -5, 5);
        const auto cert = oracle::random_certificate(rng, v, 4);
        REQUIRE(verify_certificate(cert));
        const SeifertMatrix end(cert.target());
        REQUIRE(canonicalize(alexander(end)) == canonicalize(alexander(SeifertMatrix(v))));
        REQUIRE(h1_double_cover(end) == h1_double_cover(SeifertMatrix(v)));
        REQUIRE(parse_certificate(serialize_certificate(cert)).steps.size() == cert.steps.size());
    }
}
