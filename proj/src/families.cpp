#include "seifertkit/families.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace seifertkit {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string &raw) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
    if (s.size() == digits_from ||
        !std::all_of(s.begin() + static_cast<long>(digits_from), s.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        throw InputError("expected an integer, got '" + trim(raw) + "'");
    return Integer(s);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

bool is_odd(const Integer &x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

IntMatrix parse_matrix_body(const std::string &body) {
    if (!body.empty() && body.front() == '[')
        return parse_matrix(body);
    std::vector<std::vector<Integer>> rows;
    for (const auto &row : split(body, ';')) {
        std::vector<Integer> entries;
        for (const auto &x : split(row, ','))
            entries.push_back(parse_integer(x));
        rows.push_back(std::move(entries));
    }
    try {
        return IntMatrix::from_rows(rows);
    } catch (const DimensionError &e) {
        throw InputError(std::string("matrix spec: ") + e.what());
    }
}

} // namespace

KnotSpec parse_knot_spec(const std::string &text) {
    const std::string s = trim(text);
    const auto space = s.find_first_of(" \t");
    std::string keyword = s.substr(0, space);
    std::transform(keyword.begin(), keyword.end(), keyword.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const std::string body = space == std::string::npos ? std::string() : trim(s.substr(space));
    if (body.empty())
        throw InputError("knot spec '" + s + "' has no arguments");

    if (keyword == "matrix") {
        IntMatrix m = parse_matrix_body(body);
        try {
            return knots::ExplicitMatrix{SeifertMatrix(std::move(m))};
        } catch (const std::invalid_argument &e) {
            throw InputError(e.what());
        } catch (const std::domain_error &e) {
            throw InputError(e.what());
        }
    }
    if (keyword == "pretzel") {
        const auto parts = split(body, ',');
        if (parts.size() != 3)
            throw InputError("pretzel spec needs three parameters p,q,r");
        knots::Pretzel k{parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2])};
        if (!is_odd(k.p) || !is_odd(k.q) || !is_odd(k.r))
            throw InputError("pretzel parameters must all be odd");
        return k;
    }
    if (keyword == "whitehead") {
        const char sign = body.front();
        if (sign != '+' && sign != '-')
            throw InputError("whitehead spec must start with the clasp sign + or -");
        std::string rest = trim(body.substr(1));
        if (!rest.empty() && rest.front() == ',')
            rest = trim(rest.substr(1));
        return knots::Whitehead{sign == '+' ? Clasp::Positive : Clasp::Negative, parse_integer(rest)};
    }
    if (keyword == "catalog")
        return knots::Catalog{body};
    throw InputError("unknown knot spec kind '" + keyword + "'");
}

std::string to_string(const KnotSpec &spec) {
    if (const auto *m = std::get_if<knots::ExplicitMatrix>(&spec)) {
        const IntMatrix &v = m->v.matrix();
        std::string out = "matrix ";
        for (std::size_t i = 0; i < v.rows(); ++i) {
            if (i)
                out += ';';
            for (std::size_t j = 0; j < v.cols(); ++j) {
                if (j)
                    out += ',';
                out += v(i, j).get_str();
            }
        }
        return out;
    }
    if (const auto *p = std::get_if<knots::Pretzel>(&spec))
        return "pretzel " + p->p.get_str() + "," + p->q.get_str() + "," + p->r.get_str();
    if (const auto *w = std::get_if<knots::Whitehead>(&spec))
        return std::string("whitehead ") + (w->clasp == Clasp::Positive ? "+ " : "- ") + w->n.get_str();
    return "catalog " + std::get<knots::Catalog>(spec).name;
}

SeifertMatrix pretzel_seifert(const Integer &p, const Integer &q, const Integer &r) {
    if (!is_odd(p) || !is_odd(q) || !is_odd(r))
        throw PreconditionError("pretzel_seifert: p, q, r must all be odd");
    IntMatrix v(2, 2, {Integer((p + q) / 2), Integer((q + 1) / 2), Integer((q - 1) / 2), Integer((q + r) / 2)});
    return SeifertMatrix(std::move(v));
}

Integer pretzel_determinant(const Integer &p, const Integer &q, const Integer &r) {
    if (!is_odd(p) || !is_odd(q) || !is_odd(r))
        throw PreconditionError("pretzel_determinant: p, q, r must all be odd");
    return abs(p * q + q * r + p * r);
}

SeifertMatrix whitehead_seifert(Clasp clasp, const Integer &n) {
    const long s = clasp == Clasp::Positive ? -1 : 1;
    return SeifertMatrix(IntMatrix(2, 2, {Integer(s), Integer(0), Integer(s), n}));
}

namespace {

// u with det([u; w]) = +-1.
IntVec2 complete_basis(const IntVec2 &w) {
    if (abs(w.y) == 1)
        return {1, 0};
    if (abs(w.x) == 1)
        return {0, 1};
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w.x.get_mpz_t(), w.y.get_mpz_t());
    return {-t, s};
}

MetabolizerForm form_for_line(const IntMatrix &v, const IntVec2 &w) {
    IntVec2 u = complete_basis(w);
    IntMatrix p(2, 2, {u.x, u.y, w.x, w.y});
    IntMatrix m = congruent_transform(p, v);
    if (m(1, 0) == m(0, 1) - 1) {
        p.negate_row(0);
        m = congruent_transform(p, v);
    }
    if (m(1, 1) != 0 || m(1, 0) != m(0, 1) + 1)
        throw std::logic_error("metabolizer_form: basis change did not reach ((a,b),(b+1,0))");
    return {m(0, 0), m(0, 1), std::move(p)};
}

} // namespace

std::optional<MetabolizerForm> metabolizer_form(const SeifertMatrix &v) {
    const IntMatrix &m = v.matrix();
    if (m.rows() != 2)
        throw DimensionError("metabolizer_form: expected a 2x2 Seifert matrix");
    std::optional<MetabolizerForm> best;
    for (const auto &w : isotropic_lines(m)) {
        MetabolizerForm cand = form_for_line(m, w);
        if (!best || abs(cand.b) < abs(best->b) || (abs(cand.b) == abs(best->b) && abs(cand.a) < abs(best->a)))
            best = std::move(cand);
    }
    return best;
}

} // namespace seifertkit
