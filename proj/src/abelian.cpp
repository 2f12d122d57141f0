#include "seifertkit/abelian.hpp"

namespace seifertkit {

Integer AbelianGroup::order() const {
    if (free_rank > 0)
        return 0;
    Integer n = 1;
    for (const auto &t : torsion)
        n *= t;
    return n;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial())
        return "0";
    std::string out;
    for (const auto &t : torsion) {
        if (!out.empty())
            out += " ⊕ ";
        out += "Z_" + t.get_str();
    }
    if (free_rank > 0) {
        if (!out.empty())
            out += " ⊕ ";
        out += "Z";
        if (free_rank > 1)
            out += "^" + std::to_string(free_rank);
    }
    return out;
}

AbelianGroup group_from_presentation(const IntMatrix &m) {
    const SnfResult snf = smith_normal_form(m);
    AbelianGroup g;
    std::size_t nonzero = 0;
    for (const auto &d : snf.diagonal()) {
        if (d == 0)
            continue;
        ++nonzero;
        if (d != 1)
            g.torsion.push_back(d);
    }
    g.free_rank = m.cols() - nonzero;
    return g;
}

AbelianGroup h1_double_cover(const SeifertMatrix &v) {
    return group_from_presentation(v.matrix() + v.matrix().transpose());
}

AbelianGroup lemma_abelian_closed_form(const Integer &x, const Integer &y) {
    if (y == 0 || y == -1)
        return {};
    const Integer odd = abs(2 * y + 1);
    const Integer d = gcd(2 * x, odd);
    AbelianGroup g;
    if (d != 1)
        g.torsion.push_back(d);
    g.torsion.push_back(odd * odd / d);
    return g;
}

bool is_cyclic(const AbelianGroup &g) { return g.free_rank == 0 && g.torsion.size() <= 1; }

} // namespace seifertkit
