#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seifertkit/exactalg.hpp"

namespace seifertkit {

/// Finitely generated abelian group Z_{t_1} + ... + Z_{t_k} + Z^r in
/// invariant-factor form: every t_i > 1 and t_i | t_{i+1}.
struct AbelianGroup {
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    /// Product of the torsion coefficients when finite, 0 when infinite.
    Integer order() const;
    /// "Z_3 ⊕ Z_3", "Z_9 ⊕ Z^2", "0" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

/// Z^cols / rowspace(m). Relations are rows, generators are columns.
AbelianGroup group_from_presentation(const IntMatrix &m);

/// H_1 of the double branched cover, presented by V + V^T.
AbelianGroup h1_double_cover(const SeifertMatrix &v);

/// Closed form for the group presented by ((2x, 2y+1), (2y+1, 0)):
/// trivial when y is 0 or -1, otherwise Z_d + Z_{(2y+1)^2 / d} with
/// d = gcd(2x, |2y+1|).
AbelianGroup lemma_abelian_closed_form(const Integer &x, const Integer &y);

/// Finite cyclic: no free part and at most one invariant factor.
bool is_cyclic(const AbelianGroup &g);

} // namespace seifertkit
