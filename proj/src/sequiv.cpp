#include "seifertkit/sequiv.hpp"

#include <sstream>
#include <type_traits>

namespace seifertkit {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

IntMatrix column_expand(const IntMatrix &v, const std::vector<Integer> &u) {
    const std::size_t n = v.rows();
    if (u.size() != n)
        throw InvalidMoveError("column expansion: u has length " + std::to_string(u.size()) +
                               ", matrix has size " + std::to_string(n));
    IntMatrix w(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = v(i, j);
    for (std::size_t j = 0; j < n; ++j)
        w(n, j) = u[j];
    w(n + 1, n) = 1;
    return w;
}

IntMatrix row_expand(const IntMatrix &v, const std::vector<Integer> &u) {
    const std::size_t n = v.rows();
    if (u.size() != n)
        throw InvalidMoveError("row expansion: u has length " + std::to_string(u.size()) +
                               ", matrix has size " + std::to_string(n));
    IntMatrix w(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = v(i, j);
    for (std::size_t i = 0; i < n; ++i)
        w(i, n) = u[i];
    w(n, n + 1) = 1;
    return w;
}

IntMatrix leading_block(const IntMatrix &w, std::size_t n) {
    IntMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v(i, j) = w(i, j);
    return v;
}

IntMatrix column_contract(const IntMatrix &w) {
    if (w.rows() < 2)
        throw InvalidMoveError("column contraction: matrix smaller than 2x2");
    const std::size_t n = w.rows() - 2;
    // Undo column_expand: u may be anything, everything else is fixed.
    IntMatrix expect = column_expand(leading_block(w, n), std::vector<Integer>(n));
    for (std::size_t j = 0; j < n; ++j)
        expect(n, j) = w(n, j);
    if (!(expect == w))
        throw InvalidMoveError("column contraction: matrix is not a column expansion: " + w.to_string());
    return leading_block(w, n);
}

IntMatrix row_contract(const IntMatrix &w) {
    if (w.rows() < 2)
        throw InvalidMoveError("row contraction: matrix smaller than 2x2");
    const std::size_t n = w.rows() - 2;
    IntMatrix expect = row_expand(leading_block(w, n), std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        expect(i, n) = w(i, n);
    if (!(expect == w))
        throw InvalidMoveError("row contraction: matrix is not a row expansion: " + w.to_string());
    return leading_block(w, n);
}

IntMatrix metabolizer_matrix(const Integer &a, const Integer &b) {
    return IntMatrix(2, 2, {a, b, b + 1, Integer(0)});
}

} // namespace

std::string move_kind(const SMove &mv) {
    return std::visit(overloaded{
                          [](const moves::Congruence &) { return std::string("congruence"); },
                          [](const moves::ColumnExpansion &) { return std::string("column_expansion"); },
                          [](const moves::RowExpansion &) { return std::string("row_expansion"); },
                          [](const moves::ColumnContraction &) { return std::string("column_contraction"); },
                          [](const moves::RowContraction &) { return std::string("row_contraction"); },
                      },
                      mv);
}

SeifertMatrix apply_move(const SeifertMatrix &m, const SMove &mv) {
    const IntMatrix &v = m.matrix();
    IntMatrix out = std::visit(
        overloaded{
            [&](const moves::Congruence &c) {
                if (c.p.rows() != v.rows() || !c.p.is_square())
                    throw InvalidMoveError("congruence: P has the wrong size");
                return congruent_transform(c.p, v);
            },
            [&](const moves::ColumnExpansion &e) { return column_expand(v, e.u); },
            [&](const moves::RowExpansion &e) { return row_expand(v, e.u); },
            [&](const moves::ColumnContraction &) { return column_contract(v); },
            [&](const moves::RowContraction &) { return row_contract(v); },
        },
        mv);
    return SeifertMatrix(std::move(out));
}

void SEquivCertificate::push(const SMove &mv, const std::optional<IntMatrix> &start) {
    IntMatrix before = steps.empty() ? start.value() : steps.back().after;
    IntMatrix after = apply_move(SeifertMatrix(before), mv).matrix();
    steps.push_back({std::move(before), mv, std::move(after)});
}

VerifyResult verify_certificate(const SEquivCertificate &c) {
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto &step = c.steps[i];
        auto fail = [i](std::string why) { return VerifyResult{false, i, std::move(why)}; };
        if (i > 0 && !(step.before == c.steps[i - 1].after))
            return fail("chain broken: step does not start where the previous one ended");
        if (!SeifertMatrix::is_seifert(step.before))
            return fail("not a Seifert matrix: " + step.before.to_string());
        try {
            const SeifertMatrix got = apply_move(SeifertMatrix(step.before), step.move);
            if (!(got.matrix() == step.after))
                return fail(move_kind(step.move) + " yields " + got.matrix().to_string() + ", certificate claims " +
                            step.after.to_string());
        } catch (const std::exception &e) {
            return fail(e.what());
        }
    }
    return {};
}

std::optional<Integer> congruence_classifier_2x2(const Integer &a, const Integer &b, const Integer &c) {
    const Integer m = 2 * b + 1;
    const Integer diff = c - a;
    if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t()))
        return std::nullopt;
    return Integer(diff / m);
}

namespace {

template <class T> T to_num(const Integer &x) {
    if constexpr (std::is_same_v<T, Integer>)
        return x;
    else
        return static_cast<T>(x.get_si());
}

template <class T> struct CongruenceSearch {
    std::size_t n;
    std::vector<T> v, w;
    long bound;
    std::vector<std::vector<std::vector<T>>> candidates;
    std::vector<const std::vector<T> *> chosen;

    T form(const std::vector<T> &r, const std::vector<T> &s) const {
        T acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (r[i] == 0)
                continue;
            T row = 0;
            for (std::size_t j = 0; j < n; ++j)
                row += v[i * n + j] * s[j];
            acc += r[i] * row;
        }
        return acc;
    }

    // Rows r (lexicographic) with r v r^T == w_kk.
    void collect() {
        candidates.assign(n, {});
        std::vector<T> r(n, T(-bound));
        while (true) {
            const T q = form(r, r);
            for (std::size_t k = 0; k < n; ++k)
                if (q == w[k * n + k])
                    candidates[k].push_back(r);
            std::size_t pos = n;
            while (pos > 0) {
                --pos;
                if (r[pos] < bound) {
                    r[pos] += 1;
                    break;
                }
                r[pos] = T(-bound);
                if (pos == 0)
                    return;
            }
            if (n == 0)
                return;
        }
    }

    std::optional<IntMatrix> dfs(std::size_t k) {
        if (k == n) {
            IntMatrix p(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if constexpr (std::is_same_v<T, Integer>)
                        p(i, j) = (*chosen[i])[j];
                    else
                        p(i, j) = static_cast<long>((*chosen[i])[j]);
                }
            if (abs(det(p)) == 1)
                return p;
            return std::nullopt;
        }
        for (const auto &r : candidates[k]) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                ok = form(r, *chosen[j]) == w[k * n + j] && form(*chosen[j], r) == w[j * n + k];
            if (!ok)
                continue;
            chosen[k] = &r;
            if (auto p = dfs(k + 1))
                return p;
        }
        return std::nullopt;
    }

    std::optional<IntMatrix> run() {
        if (n == 0)
            return IntMatrix(0, 0);
        collect();
        chosen.assign(n, nullptr);
        return dfs(0);
    }
};

template <class T>
std::optional<IntMatrix> search(const IntMatrix &v, const IntMatrix &w, unsigned long bound) {
    CongruenceSearch<T> s;
    s.n = v.rows();
    s.bound = static_cast<long>(bound);
    for (const auto &x : v.entries())
        s.v.push_back(to_num<T>(x));
    for (const auto &x : w.entries())
        s.w.push_back(to_num<T>(x));
    return s.run();
}

} // namespace

std::optional<IntMatrix> brute_force_congruence(const IntMatrix &v, const IntMatrix &w, unsigned long bound) {
    if (!v.is_square() || !w.is_square() || v.rows() != w.rows())
        throw DimensionError("brute_force_congruence: matrices must be square of equal size");
    const Integer n = static_cast<unsigned long>(v.rows());
    const Integer b = bound;
    const Integer worst = n * n * b * b * (v.max_abs() + 1);
    const Integer limit = Integer(1) << 60;
    if (worst < limit && w.max_abs() < limit)
        return search<long long>(v, w, bound);
    return search<Integer>(v, w, bound);
}

SEquivCertificate lemma_chain_certificate(const Integer &a, const Integer &b) {
    using moves::Congruence;
    SEquivCertificate cert;
    const IntMatrix id4 = IntMatrix::identity(4);

    // ((a,b),(b+1,0)) -> [[a,b,1,0],[b+1,0,0,0],[0,0,0,1],[0,0,0,0]]
    cert.push(moves::RowExpansion{{Integer(1), Integer(0)}}, metabolizer_matrix(a, b));

    // -> [[a,0,1,0],[b+1,0,0,-b],[0,0,0,1],[0,0,0,0]]: e1 -> e1 - b e2
    IntMatrix p = id4;
    p(1, 2) = -b;
    cert.push(Congruence{p});

    // -> [[a,0,1,0],[0,0,0,0],[0,1,0,0],[b+1,-b,0,0]]: basis order (e0, e3, e2, e1)
    cert.push(Congruence{IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}});

    // -> [[a,0,1,0],[0,0,0,0],[1,1,0,0],[1,-b,0,0]]: e0 -> e0 + e1
    p = id4;
    p(0, 1) = 1;
    cert.push(Congruence{p});

    // -> [[a,ab,1,0],[ab,ab^2,b,0],[0,1+b,0,0],[1,0,0,0]]: e1 -> e1 + b e0, e2 -> e2 - e3
    p = id4;
    p(1, 0) = b;
    p(2, 3) = -1;
    cert.push(Congruence{p});

    // -> [[0,1+b,0,0],[b,ab^2,ba,0],[1,ab,a,0],[0,0,1,0]]: basis order (e2, e1, e0, e3)
    cert.push(Congruence{IntMatrix{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}});

    // Clear column 2 against the last row so the matrix is a column expansion
    // of ((0,1+b),(b,ab^2)) with u = (1, ab): e1 -> e1 - ab e3, e2 -> e2 - a e3
    p = id4;
    p(1, 3) = -a * b;
    p(2, 3) = -a;
    cert.push(Congruence{p});

    // -> ((0,1+b),(b,ab^2))
    cert.push(moves::ColumnContraction{});

    // -> ((ab^2,b),(b+1,0))
    cert.push(Congruence{IntMatrix{{0, 1}, {1, 0}}});
    return cert;
}

SEquivPair construct_sequiv_pair(const Integer &b) {
    if (b <= 4)
        throw PreconditionError("construct_sequiv_pair: requires b > 4");
    const Integer residue = b % 3;
    if (residue == 1)
        throw PreconditionError("construct_sequiv_pair: requires b = 0 or 2 mod 3");

    const Integer modulus = 2 * b + 1;
    Integer coef = 1 - b * b;
    mpz_mod(coef.get_mpz_t(), coef.get_mpz_t(), modulus.get_mpz_t());
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), coef.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw PreconditionError("construct_sequiv_pair: 1 - b^2 is not invertible mod 2b+1");

    Integer a = -inv;
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    const Integer num = a + 1 - a * b * b;
    if (!mpz_divisible_p(num.get_mpz_t(), modulus.get_mpz_t()))
        throw std::logic_error("construct_sequiv_pair: a + 1 - ab^2 not divisible by 2b+1");
    const Integer k = num / modulus;

    SEquivPair out{a, k, lemma_chain_certificate(a, b)};
    // ((ab^2,b),(b+1,0)) -> ((ab^2 + k(2b+1),b),(b+1,0)) = ((a+1,b),(b+1,0))
    out.cert.push(moves::Congruence{IntMatrix(2, 2, {Integer(1), k, Integer(0), Integer(1)})});
    if (!(out.cert.target() == metabolizer_matrix(a + 1, b)))
        throw std::logic_error("construct_sequiv_pair: certificate ends at the wrong matrix");
    return out;
}

bool is_prime(const Integer &n) {
    if (n < 2)
        return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
            return false;
    return true;
}

bool trotter_rigid(const SeifertMatrix &v) {
    const Integer d = abs(det(v.matrix()));
    return d == 1 || is_prime(d);
}

namespace {

std::string vector_text(const std::vector<Integer> &u) {
    std::string out = "[";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i)
            out += ',';
        out += u[i].get_str();
    }
    return out + "]";
}

std::string move_params(const SMove &mv) {
    return std::visit(overloaded{
                          [](const moves::Congruence &c) { return c.p.to_string(); },
                          [](const moves::ColumnExpansion &e) { return vector_text(e.u); },
                          [](const moves::RowExpansion &e) { return vector_text(e.u); },
                          [](const moves::ColumnContraction &) { return std::string("[]"); },
                          [](const moves::RowContraction &) { return std::string("[]"); },
                      },
                      mv);
}

std::vector<Integer> parse_vector(const std::string &text) {
    const IntMatrix m = parse_matrix("[" + text + "]");
    if (m.rows() != 1)
        throw InputError("certificate: expected a flat integer list, got " + text);
    return m.entries();
}

} // namespace

std::string serialize_certificate(const SEquivCertificate &c) {
    std::ostringstream out;
    for (const auto &step : c.steps)
        out << "MOVE kind=" << move_kind(step.move) << " params=" << move_params(step.move)
            << " from=" << step.before.to_string() << " to=" << step.after.to_string() << '\n';
    return out.str();
}

SEquivCertificate parse_certificate(const std::string &text) {
    SEquivCertificate cert;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag != "MOVE")
            throw InputError("certificate line " + std::to_string(lineno) + ": expected MOVE");
        std::string kind, params, from, to;
        std::string tok;
        while (fields >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw InputError("certificate line " + std::to_string(lineno) + ": bad field " + tok);
            const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
            if (key == "kind")
                kind = value;
            else if (key == "params")
                params = value;
            else if (key == "from")
                from = value;
            else if (key == "to")
                to = value;
            else
                throw InputError("certificate line " + std::to_string(lineno) + ": unknown field " + key);
        }
        if (kind.empty() || params.empty() || from.empty() || to.empty())
            throw InputError("certificate line " + std::to_string(lineno) + ": missing field");

        SMove mv;
        if (kind == "congruence")
            mv = moves::Congruence{parse_matrix(params)};
        else if (kind == "column_expansion")
            mv = moves::ColumnExpansion{parse_vector(params)};
        else if (kind == "row_expansion")
            mv = moves::RowExpansion{parse_vector(params)};
        else if (kind == "column_contraction")
            mv = moves::ColumnContraction{};
        else if (kind == "row_contraction")
            mv = moves::RowContraction{};
        else
            throw InputError("certificate line " + std::to_string(lineno) + ": unknown move kind " + kind);
        cert.steps.push_back({parse_matrix(from), std::move(mv), parse_matrix(to)});
    }
    return cert;
}

} // namespace seifertkit
