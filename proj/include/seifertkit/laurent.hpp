#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seifertkit/exactalg.hpp"

namespace seifertkit {

/// Integer Laurent polynomial sum_k coeffs[k] * t^(lowdeg + k).
///
/// Stored trimmed: the first and last coefficients are nonzero, except for
/// the zero polynomial which has no coefficients and lowdeg 0.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(std::vector<Integer> coeffs, long lowdeg);

    static LaurentPoly constant(const Integer &c) { return LaurentPoly({c}, 0); }
    static LaurentPoly monomial(const Integer &c, long exponent) { return LaurentPoly({c}, exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer> &coeffs() const { return coeffs_; }
    long lowdeg() const { return lowdeg_; }
    long highdeg() const { return lowdeg_ + static_cast<long>(coeffs_.size()) - 1; }
    /// highdeg - lowdeg; 0 for monomials and the zero polynomial.
    long span() const { return is_zero() ? 0 : highdeg() - lowdeg_; }
    Integer coeff(long exponent) const;
    const Integer &leading() const { return coeffs_.back(); }

    /// Value at t (Laurent terms with negative exponents require t = +-1).
    Integer eval(const Integer &t) const;

    friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) = default;

    /// "c_k*t^k + ..." from the highest exponent down, e.g. "2*t^2 - 5*t + 2".
    std::string to_string() const;

  private:
    void trim();

    std::vector<Integer> coeffs_;
    long lowdeg_ = 0;
};

/// det(V - t V^T), exactly, with no unit normalization.
LaurentPoly alexander(const SeifertMatrix &v);

/// Representative of the class of p under multiplication by units +-t^k:
/// lowest exponent 0 and positive leading coefficient. Throws DomainError for 0.
LaurentPoly canonicalize(const LaurentPoly &p);

/// |Delta(-1)|, cross-checked against |det(V + V^T)|.
Integer knot_determinant(const SeifertMatrix &v);

/// Integers (b, c) with p equal, up to units, to (b - c t)(b - c t^-1).
///
/// b runs over the signed divisors of the constant coefficient and c over the
/// signed divisors of the leading coefficient (positives first, ascending);
/// the first pair that matches is returned. Throws DomainError for the zero
/// polynomial or when the canonical form has degree above 2.
std::optional<std::pair<Integer, Integer>> symmetric_linear_factorization(const LaurentPoly &p);

} // namespace seifertkit
