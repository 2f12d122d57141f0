#pragma once

#include <optional>
#include <string>
#include <variant>

#include "seifertkit/exactalg.hpp"

namespace seifertkit {

enum class Clasp { Positive, Negative };

namespace knots {
struct ExplicitMatrix {
    SeifertMatrix v;
};
struct Pretzel {
    Integer p, q, r;
};
struct Whitehead {
    Clasp clasp;
    Integer n;
};
struct Catalog {
    std::string name;
};
} // namespace knots

using KnotSpec = std::variant<knots::ExplicitMatrix, knots::Pretzel, knots::Whitehead, knots::Catalog>;

/// Grammar: "matrix a,b;c,d" | "pretzel p,q,r" | "whitehead +|- n" | "catalog NAME".
/// Throws InputError (including for even pretzel parameters and non-Seifert matrices).
KnotSpec parse_knot_spec(const std::string &text);
std::string to_string(const KnotSpec &spec);

/// (1/2) ((p+q, q+1), (q-1, q+r)) for odd p, q, r.
SeifertMatrix pretzel_seifert(const Integer &p, const Integer &q, const Integer &r);

/// |pq + qr + pr|.
Integer pretzel_determinant(const Integer &p, const Integer &q, const Integer &r);

/// n-twisted Whitehead double: ((-1,0),(-1,n)) for the positive clasp and the
/// negated form ((1,0),(1,n)) for the negative clasp.
SeifertMatrix whitehead_seifert(Clasp clasp, const Integer &n);

/// A 2x2 Seifert matrix in the basis (u, w) with w isotropic:
/// basis_change * V * basis_change^T == ((a, b), (b+1, 0)).
struct MetabolizerForm {
    Integer a;
    Integer b;
    IntMatrix basis_change;

    IntMatrix matrix() const { return IntMatrix(2, 2, {a, b, b + 1, Integer(0)}); }
};

/// Empty when V has no isotropic vector. Each isotropic line w is completed by
/// the first of (1,0), (0,1) spanning Z^2 with it (or a Bezout vector), u is
/// negated if needed so the lower-left entry is b+1, and the candidate with the
/// least (|b|, |a|) wins; ties keep the earlier line.
std::optional<MetabolizerForm> metabolizer_form(const SeifertMatrix &v);

} // namespace seifertkit
