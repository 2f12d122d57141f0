#include "seifertkit/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "seifertkit/sequiv.hpp"

namespace seifertkit {

std::string to_string(Verdict v) { return v == Verdict::Obstructed ? "OBSTRUCTED" : "INCONCLUSIVE"; }

bool ObstructionReport::has_reason(const std::string &tag) const {
    return std::any_of(reasons.begin(), reasons.end(), [&](const Reason &r) { return r.tag == tag; });
}

const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        const std::string two_bridge = "2-bridge knot; such knots admit no cosmetic crossings (Torisu)";
        auto entry = [](std::string name, long det, bool bold) {
            return CatalogEntry{std::move(name), Integer(det), std::nullopt, bold, std::nullopt};
        };
        std::vector<CatalogEntry> t = {
            entry("3_1", 3, false),      entry("4_1", 5, false),       entry("5_2", 7, false),
            entry("6_1", 9, true),       entry("7_2", 11, false),      entry("7_4", 15, false),
            entry("8_1", 13, false),     entry("8_3", 17, false),      entry("9_2", 15, false),
            entry("9_5", 23, false),     entry("9_35", 27, false),     entry("9_46", 9, true),
            entry("10_1", 17, false),    entry("10_3", 25, true),      entry("11a_247", 19, false),
            entry("11a_343", 31, false), entry("11a_362", 39, false),  entry("11a_363", 35, false),
            entry("11n_139", 9, true),   entry("11n_141", 21, false),  entry("12a_803", 21, false),
            entry("12a_1287", 37, false), entry("12a_1166", 33, false),
        };
        for (auto &e : t) {
            if (e.name == "9_46")
                e.realization = knots::Pretzel{3, 3, -3};
            else if (e.name == "11n_139")
                e.realization = knots::Pretzel{-5, 3, -3};
            else if (e.name == "6_1" || e.name == "10_3")
                e.settled_by = two_bridge;
        }
        return t;
    }();
    return entries;
}

namespace {

std::string catalog_key(const std::string &name) {
    std::string key;
    for (unsigned char c : name)
        if (c != '_' && !std::isspace(c))
            key.push_back(static_cast<char>(std::tolower(c)));
    return key;
}

} // namespace

const CatalogEntry &find_catalog_entry(const std::string &name) {
    const std::string key = catalog_key(name);
    for (const auto &e : catalog())
        if (catalog_key(e.name) == key)
            return e;
    throw InputError("knot '" + name + "' is not in the catalog");
}

namespace {

SeifertMatrix resolve(const KnotSpec &spec) {
    if (const auto *m = std::get_if<knots::ExplicitMatrix>(&spec)) {
        if (m->v.size() != 2)
            throw InputError("analysis needs a 2x2 Seifert matrix, got " + m->v.matrix().to_string());
        return m->v;
    }
    if (const auto *p = std::get_if<knots::Pretzel>(&spec)) {
        try {
            return pretzel_seifert(p->p, p->q, p->r);
        } catch (const PreconditionError &e) {
            throw InputError(e.what());
        }
    }
    if (const auto *w = std::get_if<knots::Whitehead>(&spec))
        return whitehead_seifert(w->clasp, w->n);
    throw std::logic_error("resolve: catalog specs are handled by the caller");
}

void check_determinant(ObstructionReport &r) {
    r.det_square = is_perfect_square(r.determinant).has_value();
    if (!r.det_square)
        r.reasons.push_back({kReasonDetNotSquare, "det(K) = " + r.determinant.get_str() + " is not a perfect square"});
}

void finish(ObstructionReport &r) {
    r.verdict = r.reasons.empty() ? Verdict::Inconclusive : Verdict::Obstructed;
}

ObstructionReport analyze_determinant_only(const KnotSpec &spec, const CatalogEntry &entry, bool unique_surface) {
    ObstructionReport r{.input = spec};
    r.unique_surface_asserted = unique_surface;
    r.determinant = entry.determinant;
    check_determinant(r);
    r.notes.push_back("no Seifert matrix on record; only the determinant screen was run");
    if (entry.settled_by)
        r.notes.push_back("externally settled: " + *entry.settled_by);
    finish(r);
    return r;
}

ObstructionReport analyze_matrix(const KnotSpec &spec, const SeifertMatrix &v, bool unique_surface) {
    ObstructionReport r{.input = spec};
    r.unique_surface_asserted = unique_surface;
    r.seifert = v;
    const LaurentPoly delta = canonicalize(alexander(v));
    r.alexander = delta;

    // 1. determinant
    r.determinant = knot_determinant(v);
    check_determinant(r);

    // 2. algebraic sliceness: an isotropic vector of the Seifert form
    r.alg_slice = isotropic_vector(v.matrix()).has_value();
    if (*r.alg_slice) {
        if (auto f = symmetric_linear_factorization(delta))
            r.notes.push_back("Delta factors as f(t) f(1/t) with f(t) = " +
                              LaurentPoly({f->first, -f->second}, 0).to_string());
    } else {
        const Integer disc = -det(v.matrix() + v.matrix().transpose());
        r.reasons.push_back({kReasonNotAlgSlice, "Seifert form has no isotropic vector (discriminant " +
                                                     disc.get_str() + " is not a square): K is not algebraically slice"});
    }

    // 3. double branched cover
    r.h1 = h1_double_cover(v);
    r.h1_cyclic = is_cyclic(*r.h1);
    r.metab = metabolizer_form(v);
    if (r.metab)
        r.gcd_value = gcd(2 * r.metab->a, 2 * r.metab->b + 1);
    if (!*r.h1_cyclic) {
        std::string msg = "H_1(Y_K) = " + r.h1->to_string() + " is not finite cyclic";
        if (r.gcd_value && *r.gcd_value != 1)
            msg += " (gcd(2a, 2b+1) = " + r.gcd_value->get_str() + " for a = " + r.metab->a.get_str() +
                   ", b = " + r.metab->b.get_str() + ")";
        r.reasons.push_back({kReasonH1NotCyclic, msg});
    }

    // 4. Trotter rigidity plus the 2x2 congruence classification
    if (r.metab && trotter_rigid(v)) {
        r.trotter_applicable = true;
        const Integer &a = r.metab->a;
        const Integer &b = r.metab->b;
        const Integer odd = 2 * b + 1;
        const bool plus = congruence_classifier_2x2(a, b, a + 1).has_value();
        const bool minus = congruence_classifier_2x2(a, b, a - 1).has_value();
        r.congruence_blocked = !plus && !minus && abs(odd) != 1;
        if (r.congruence_blocked)
            r.reasons.push_back(
                {kReasonTrotterCongruence,
                 "Trotter rigid (|det V| = " + Integer(abs(det(v.matrix()))).get_str() + "), so S-equivalence is congruence; " +
                     "no congruence a ± 1 ≡ a mod 2b+1 since 2b+1 = " + odd.get_str() + " for a = " + a.get_str() +
                     ", b = " + b.get_str()});
    }

    // 5. unique minimal-genus Seifert surface
    if (unique_surface && !(delta == LaurentPoly::constant(1)))
        r.reasons.push_back({kReasonUniqueSurface,
                             "unique minimal-genus Seifert surface asserted and Delta = " + delta.to_string() + " ≠ 1"});

    finish(r);
    return r;
}

} // namespace

ObstructionReport analyze(const KnotSpec &spec, bool unique_surface) {
    if (const auto *c = std::get_if<knots::Catalog>(&spec)) {
        const CatalogEntry &entry = find_catalog_entry(c->name);
        if (!entry.realization)
            return analyze_determinant_only(spec, entry, unique_surface);
        ObstructionReport r = analyze_matrix(spec, resolve(*entry.realization), unique_surface);
        r.notes.push_back("realized as " + to_string(*entry.realization));
        if (r.determinant != entry.determinant)
            throw std::logic_error("catalog determinant disagrees with its realization for " + entry.name);
        return r;
    }
    return analyze_matrix(spec, resolve(spec), unique_surface);
}

TableScreen run_table_screen() {
    TableScreen screen;
    for (const auto &entry : catalog()) {
        if (is_perfect_square(entry.determinant))
            screen.survivors.push_back(entry.name);
        screen.reports.push_back(analyze(knots::Catalog{entry.name}));
    }
    return screen;
}

nlohmann::json to_json(const Integer &x) {
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

nlohmann::json to_json(const IntMatrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const LaurentPoly &p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : p.coeffs())
        coeffs.push_back(to_json(c));
    return {{"lowdeg", p.lowdeg()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const AbelianGroup &g) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto &t : g.torsion)
        torsion.push_back(to_json(t));
    return {{"torsion", torsion}, {"free_rank", g.free_rank}, {"text", g.to_string()}};
}

namespace {

template <class T, class F> nlohmann::json optional_json(const std::optional<T> &x, F f) {
    return x ? f(*x) : nlohmann::json(nullptr);
}

} // namespace

nlohmann::json to_json(const ObstructionReport &r) {
    nlohmann::json j;
    j["input"] = to_string(r.input);
    j["seifert"] = optional_json(r.seifert, [](const SeifertMatrix &v) { return to_json(v.matrix()); });
    j["alexander"] = optional_json(r.alexander, [](const LaurentPoly &p) { return to_json(p); });
    j["determinant"] = to_json(r.determinant);
    j["det_square"] = r.det_square;
    j["alg_slice"] = optional_json(r.alg_slice, [](bool b) { return nlohmann::json(b); });
    j["metab"] = optional_json(r.metab, [](const MetabolizerForm &m) {
        return nlohmann::json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"basis_change", to_json(m.basis_change)}};
    });
    j["h1"] = optional_json(r.h1, [](const AbelianGroup &g) { return to_json(g); });
    j["h1_cyclic"] = optional_json(r.h1_cyclic, [](bool b) { return nlohmann::json(b); });
    j["gcd_value"] = optional_json(r.gcd_value, [](const Integer &x) { return to_json(x); });
    j["trotter_applicable"] = r.trotter_applicable;
    j["congruence_blocked"] = r.congruence_blocked;
    j["unique_surface_asserted"] = r.unique_surface_asserted;
    j["verdict"] = to_string(r.verdict);
    nlohmann::json reasons = nlohmann::json::array();
    for (const auto &reason : r.reasons)
        reasons.push_back({{"tag", reason.tag}, {"message", reason.message}});
    j["reasons"] = reasons;
    j["notes"] = r.notes;
    return j;
}

std::string report_text(const ObstructionReport &r) {
    auto yes_no = [](std::optional<bool> b) -> std::string {
        if (!b)
            return "n/a";
        return *b ? "yes" : "no";
    };
    std::ostringstream out;
    out << "knot:               " << to_string(r.input) << '\n';
    out << "seifert matrix:     " << (r.seifert ? r.seifert->matrix().to_string() : "n/a") << '\n';
    out << "alexander:          " << (r.alexander ? r.alexander->to_string() : "n/a") << '\n';
    out << "determinant:        " << r.determinant.get_str() << (r.det_square ? " (square)" : "") << '\n';
    out << "algebraically slice: " << yes_no(r.alg_slice) << '\n';
    if (r.metab)
        out << "metabolizer form:   " << r.metab->matrix().to_string() << " via " << r.metab->basis_change.to_string()
            << '\n';
    out << "H_1(Y_K):           " << (r.h1 ? r.h1->to_string() : "n/a") << '\n';
    if (r.gcd_value)
        out << "gcd(2a, 2b+1):      " << r.gcd_value->get_str() << '\n';
    out << "trotter rigid:      " << (r.trotter_applicable ? "yes" : "no") << '\n';
    out << "verdict:            " << to_string(r.verdict) << '\n';
    for (const auto &reason : r.reasons)
        out << "  [" << reason.tag << "] " << reason.message << '\n';
    for (const auto &note : r.notes)
        out << "  note: " << note << '\n';
    return out.str();
}

} // namespace seifertkit
