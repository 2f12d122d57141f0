#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "seifertkit/errors.hpp"

namespace seifertkit {

using Integer = mpz_class;

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// Every matrix in the library (Seifert matrices, presentation matrices,
/// basis changes) is an IntMatrix. Arithmetic is exact; shape mismatches
/// raise DimensionError.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<Integer> &entries() const { return entries_; }

    Integer &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;
    Integer max_abs() const;

    // Row/column operations used by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer &k); // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer &k); // col dst += k * col src
    void negate_row(std::size_t i);

    friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator*(const Integer &k, const IntMatrix &a);
    friend bool operator==(const IntMatrix &a, const IntMatrix &b);

    /// Row-major bracket form, e.g. "[[3,2],[1,0]]".
    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Parses the bracket form produced by IntMatrix::to_string. Throws InputError.
IntMatrix parse_matrix(const std::string &text);

/// A square integer matrix V with det(V - V^T) = 1.
class SeifertMatrix {
  public:
    /// Throws DimensionError for non-square input and DomainError when det(V - V^T) != 1.
    explicit SeifertMatrix(IntMatrix m);
    SeifertMatrix(std::initializer_list<std::initializer_list<long>> rows)
        : SeifertMatrix(IntMatrix(rows)) {}

    static bool is_seifert(const IntMatrix &m);

    const IntMatrix &matrix() const { return m_; }
    std::size_t size() const { return m_.rows(); }

    friend bool operator==(const SeifertMatrix &a, const SeifertMatrix &b) { return a.m_ == b.m_; }

  private:
    IntMatrix m_;
};

/// Smith normal form with transforms: u * input * w == s.
struct SnfResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix w;

    /// Diagonal entries d_1, d_2, ... (length min(rows, cols)).
    std::vector<Integer> diagonal() const;
};

struct IntVec2 {
    Integer x;
    Integer y;
    friend bool operator==(const IntVec2 &, const IntVec2 &) = default;
};

/// Exact determinant (fraction-free Bareiss elimination). The 0x0 determinant is 1.
Integer det(const IntMatrix &m);

/// p * v * p^T for unimodular p. Throws InvalidMoveError if |det p| != 1.
IntMatrix congruent_transform(const IntMatrix &p, const IntMatrix &v);

SnfResult smith_normal_form(const IntMatrix &m);

std::optional<Integer> is_perfect_square(const Integer &n);

/// Primitive nonzero (x, y) with (x, y) v (x, y)^T == 0, if one exists.
///
/// For v = ((a, b), (c, d)) the form is a x^2 + (b + c) x y + d y^2. It
/// represents zero iff its discriminant (b + c)^2 - 4 a d is a square. When
/// d == 0 the answer is (0, 1); otherwise the "+ sqrt(disc)" root
/// (2d, -(b + c) + sqrt(disc)) is returned, divided by its gcd and signed so
/// the first nonzero coordinate is positive.
std::optional<IntVec2> isotropic_vector(const IntMatrix &v);

/// Every isotropic line of a 2x2 form, one primitive representative each, in
/// the order (isotropic_vector result, other root). A form that vanishes
/// identically yields (0, 1) and (1, 0).
std::vector<IntVec2> isotropic_lines(const IntMatrix &v);

/// Signature of a symmetric matrix of size <= 4, by exact rational
/// congruence diagonalization. Throws DomainError for asymmetric or larger input.
long signature(const IntMatrix &m);

Integer gcd(const Integer &a, const Integer &b);
IntVec2 make_primitive(IntVec2 v);
bool is_unimodular(const IntMatrix &p);

} // namespace seifertkit
