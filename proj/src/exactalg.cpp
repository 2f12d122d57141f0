#include "seifertkit/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace seifertkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("IntMatrix: entry count does not match rows * cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw DimensionError("IntMatrix: ragged initializer");
        for (long x : row)
            entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>> &rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Integer> entries;
    entries.reserve(r * c);
    for (const auto &row : rows) {
        if (row.size() != c)
            throw DimensionError("IntMatrix: ragged rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Integer IntMatrix::max_abs() const {
    Integer best = 0;
    for (const auto &x : entries_)
        if (abs(x) > best)
            best = abs(x);
    return best;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix sum: shape mismatch");
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k)
        r.entries_[k] += b.entries_[k];
    return r;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference: shape mismatch");
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k)
        r.entries_[k] -= b.entries_[k];
    return r;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product: inner dimensions differ");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer &aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r(i, j) += aik * b(k, j);
        }
    return r;
}

IntMatrix operator*(const Integer &k, const IntMatrix &a) {
    IntMatrix r = a;
    for (auto &x : r.entries_)
        x *= k;
    return r;
}

bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            out += ',';
        out += '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += ',';
            out += (*this)(i, j).get_str();
        }
        out += ']';
    }
    out += ']';
    return out;
}

namespace {

class BracketParser {
  public:
    explicit BracketParser(const std::string &s) : s_(s) {}

    IntMatrix parse() {
        expect('[');
        std::vector<std::vector<Integer>> rows;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
        } else {
            while (true) {
                rows.push_back(parse_row());
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                expect(']');
                break;
            }
        }
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing characters");
        try {
            return IntMatrix::from_rows(rows);
        } catch (const DimensionError &) {
            fail("rows of unequal length");
        }
    }

  private:
    std::vector<Integer> parse_row() {
        expect('[');
        std::vector<Integer> row;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            return row;
        }
        while (true) {
            row.push_back(parse_int());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return row;
        }
    }

    Integer parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+')
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected integer");
        std::string tok = s_.substr(start, pos_ - start);
        if (tok.front() == '+')
            tok.erase(0, 1);
        return Integer(tok);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw InputError("matrix text: " + what + " at offset " + std::to_string(pos_));
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

} // namespace

IntMatrix parse_matrix(const std::string &text) { return BracketParser(text).parse(); }

SeifertMatrix::SeifertMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_square())
        throw DimensionError("Seifert matrix must be square");
    if (det(m_ - m_.transpose()) != 1)
        throw DomainError("not a Seifert matrix: det(V - V^T) != 1 for " + m_.to_string());
}

bool SeifertMatrix::is_seifert(const IntMatrix &m) {
    return m.is_square() && det(m - m.transpose()) == 1;
}

std::vector<Integer> SnfResult::diagonal() const {
    std::vector<Integer> d;
    const std::size_t n = std::min(s.rows(), s.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(s(i, i));
    return d;
}

Integer det(const IntMatrix &m) {
    if (!m.is_square())
        throw DimensionError("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && a(i, k) == 0)
                ++i;
            if (i == n)
                return 0;
            a.swap_rows(i, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix &p) { return p.is_square() && abs(det(p)) == 1; }

IntMatrix congruent_transform(const IntMatrix &p, const IntMatrix &v) {
    if (!p.is_square() || !v.is_square() || p.cols() != v.rows())
        throw DimensionError("congruent_transform: incompatible dimensions");
    if (!is_unimodular(p))
        throw InvalidMoveError("congruent_transform: p is not unimodular");
    return p * v * p.transpose();
}

namespace {

// Position of a nonzero entry of least absolute value in the block [t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(const IntMatrix &a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer &x = a(i, j);
            if (x == 0)
                continue;
            if (!best || abs(x) < best_abs) {
                best = {i, j};
                best_abs = abs(x);
            }
        }
    return best;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix &m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix w = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            auto pivot = min_abs_pivot(a, t);
            if (!pivot)
                return {std::move(a), std::move(u), std::move(w)};
            auto [pi, pj] = *pivot;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            w.swap_cols(t, pj);

            bool residue = false;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q = a(i, t) / a(t, t);
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                residue = residue || a(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q = a(t, j) / a(t, t);
                a.add_col_multiple(j, t, -q);
                w.add_col_multiple(j, t, -q);
                residue = residue || a(t, j) != 0;
            }
            if (residue)
                continue;

            // Row and column t are clear; enforce divisibility of the rest.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < a.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (bad_row) {
                a.add_row_multiple(t, *bad_row, 1);
                u.add_row_multiple(t, *bad_row, 1);
                continue;
            }
            if (a(t, t) < 0) {
                a.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    return {std::move(a), std::move(u), std::move(w)};
}

std::optional<Integer> is_perfect_square(const Integer &n) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t()))
        return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer gcd(const Integer &a, const Integer &b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

IntVec2 make_primitive(IntVec2 v) {
    Integer g = gcd(v.x, v.y);
    if (g == 0)
        return v;
    v.x /= g;
    v.y /= g;
    if (v.x < 0 || (v.x == 0 && v.y < 0)) {
        v.x = -v.x;
        v.y = -v.y;
    }
    return v;
}

namespace {

void require_2x2(const IntMatrix &v, const char *who) {
    if (v.rows() != 2 || v.cols() != 2)
        throw DimensionError(std::string(who) + ": expected a 2x2 matrix");
}

} // namespace

std::vector<IntVec2> isotropic_lines(const IntMatrix &v) {
    require_2x2(v, "isotropic_lines");
    const Integer &a = v(0, 0);
    const Integer mid = v(0, 1) + v(1, 0);
    const Integer &d = v(1, 1);
    const Integer disc = mid * mid - 4 * a * d;
    auto root = is_perfect_square(disc);
    if (!root)
        return {};

    std::vector<IntVec2> lines;
    auto push = [&lines](IntVec2 cand) {
        cand = make_primitive(std::move(cand));
        if (cand.x == 0 && cand.y == 0)
            return;
        if (std::find(lines.begin(), lines.end(), cand) == lines.end())
            lines.push_back(std::move(cand));
    };
    if (d == 0) {
        // x (a x + mid y) = 0
        push({0, 1});
        if (a == 0 && mid == 0)
            push({1, 0});
        else
            push({mid, -a});
    } else {
        push({2 * d, -mid + *root});
        push({2 * d, -mid - *root});
    }
    return lines;
}

std::optional<IntVec2> isotropic_vector(const IntMatrix &v) {
    auto lines = isotropic_lines(v);
    if (lines.empty())
        return std::nullopt;
    return lines.front();
}

long signature(const IntMatrix &m) {
    if (!m.is_square())
        throw DimensionError("signature: matrix is not square");
    if (m.rows() > 4)
        throw DomainError("signature: only matrices up to 4x4 are supported");
    if (!(m == m.transpose()))
        throw DomainError("signature: matrix is not symmetric");

    const std::size_t n = m.rows();
    std::vector<mpq_class> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = mpq_class(m(i, j));
    auto at = [&a, n](std::size_t i, std::size_t j) -> mpq_class & { return a[i * n + j]; };
    auto sym_swap = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < n; ++k)
            std::swap(at(i, k), at(j, k));
        for (std::size_t k = 0; k < n; ++k)
            std::swap(at(k, i), at(k, j));
    };

    long sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, p) == 0)
            ++p;
        if (p == n) {
            // Zero diagonal: x_i -> x_i + x_j produces the diagonal entry 2 a_ij.
            std::optional<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t i = k; i < n && !off; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (at(i, j) != 0) {
                        off = {i, j};
                        break;
                    }
            if (!off)
                break;
            auto [i, j] = *off;
            for (std::size_t c = 0; c < n; ++c)
                at(i, c) += at(j, c);
            for (std::size_t r = 0; r < n; ++r)
                at(r, i) += at(r, j);
            p = i;
        }
        sym_swap(k, p);
        const mpq_class pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (at(i, k) == 0)
                continue;
            const mpq_class f = at(i, k) / pivot;
            for (std::size_t c = 0; c < n; ++c)
                at(i, c) -= f * at(k, c);
            for (std::size_t r = 0; r < n; ++r)
                at(r, i) -= f * at(r, k);
        }
        sig += sgn(pivot);
    }
    return sig;
}

} // namespace seifertkit
