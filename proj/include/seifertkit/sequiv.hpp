#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seifertkit/exactalg.hpp"

namespace seifertkit {

// The moves generating S-equivalence. Expansions take an n x n matrix V to
//
//   column expansion         row expansion
//   [ V   0  0 ]             [ V  u^T 0 ]
//   [ u   0  0 ]             [ 0   0  1 ]
//   [ 0   1  0 ]             [ 0   0  0 ]
//
// and the contractions undo them when the matrix has exactly that shape.
namespace moves {
struct Congruence {
    IntMatrix p;
};
struct ColumnExpansion {
    std::vector<Integer> u;
};
struct RowExpansion {
    std::vector<Integer> u;
};
struct ColumnContraction {};
struct RowContraction {};
} // namespace moves

using SMove = std::variant<moves::Congruence, moves::ColumnExpansion, moves::RowExpansion,
                           moves::ColumnContraction, moves::RowContraction>;

std::string move_kind(const SMove &mv);

struct CertificateStep {
    IntMatrix before;
    SMove move;
    IntMatrix after;
};

struct SEquivCertificate {
    std::vector<CertificateStep> steps;

    bool empty() const { return steps.empty(); }
    const IntMatrix &source() const { return steps.front().before; }
    const IntMatrix &target() const { return steps.back().after; }

    /// Applies mv to the current endpoint (or to start, for the first step) and records it.
    void push(const SMove &mv, const std::optional<IntMatrix> &start = std::nullopt);
};

struct VerifyResult {
    bool ok = true;
    std::optional<std::size_t> failed_step;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Throws InvalidMoveError for non-unimodular congruences, wrong expansion
/// lengths and contraction targets not in exact expansion shape.
SeifertMatrix apply_move(const SeifertMatrix &m, const SMove &mv);

VerifyResult verify_certificate(const SEquivCertificate &c);

/// n with a + n(2b+1) = c, i.e. the witness of a congruence between
/// ((a,b),(b+1,0)) and ((c,b),(b+1,0)); empty when none exists.
std::optional<Integer> congruence_classifier_2x2(const Integer &a, const Integer &b, const Integer &c);

/// Exhaustive search for p with entries in [-bound, bound], |det p| = 1 and
/// p v p^T = w. Returns the lexicographically least witness (row-major order).
std::optional<IntMatrix> brute_force_congruence(const IntMatrix &v, const IntMatrix &w, unsigned long bound);

/// Certificate ((a,b),(b+1,0)) ~ ((ab^2,b),(b+1,0)) through 4x4 intermediates.
SEquivCertificate lemma_chain_certificate(const Integer &a, const Integer &b);

struct SEquivPair {
    Integer a;
    Integer k;
    SEquivCertificate cert;
};

/// For b > 4 with b mod 3 in {0, 2}: least a >= 0 with a(1 - b^2) = -1 mod 2b+1,
/// k with a + 1 = ab^2 + k(2b+1), and a certificate ((a,b),(b+1,0)) ~ ((a+1,b),(b+1,0)).
SEquivPair construct_sequiv_pair(const Integer &b);

/// |det v| is 1 or a prime (trial division).
bool trotter_rigid(const SeifertMatrix &v);

bool is_prime(const Integer &n);

/// One line per step: "MOVE kind=... params=... from=[...] to=[...]".
std::string serialize_certificate(const SEquivCertificate &c);

/// Inverse of serialize_certificate; blank lines and lines starting with '#'
/// are skipped. Throws InputError on malformed text. The result is not verified.
SEquivCertificate parse_certificate(const std::string &text);

} // namespace seifertkit
