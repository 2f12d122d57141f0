#include "seifertkit/laurent.hpp"

#include <algorithm>

namespace seifertkit {

LaurentPoly::LaurentPoly(std::vector<Integer> coeffs, long lowdeg)
    : coeffs_(std::move(coeffs)), lowdeg_(lowdeg) {
    trim();
}

void LaurentPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c != 0; });
    lowdeg_ += static_cast<long>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty())
        lowdeg_ = 0;
}

Integer LaurentPoly::coeff(long exponent) const {
    if (is_zero() || exponent < lowdeg_ || exponent > highdeg())
        return 0;
    return coeffs_[static_cast<std::size_t>(exponent - lowdeg_)];
}

Integer LaurentPoly::eval(const Integer &t) const {
    if (lowdeg_ < 0 && abs(t) != 1)
        throw DomainError("LaurentPoly::eval: negative exponents need t = 1 or t = -1");
    Integer sum = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const long e = lowdeg_ + static_cast<long>(k);
        Integer power;
        if (e >= 0)
            mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(e));
        else
            power = (e % 2 == 0) ? Integer(1) : t; // t is +-1 here
        sum += coeffs_[k] * power;
    }
    return sum;
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const long lo = std::min(a.lowdeg_, b.lowdeg_);
    const long hi = std::max(a.highdeg(), b.highdeg());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e)
        c[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    return LaurentPoly(std::move(c), lo);
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) {
    return a + LaurentPoly::constant(-1) * b;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(std::move(c), a.lowdeg_ + b.lowdeg_);
}

std::string LaurentPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (long e = highdeg(); e >= lowdeg_; --e) {
        const Integer c = coeff(e);
        if (c == 0)
            continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const Integer mag = abs(c);
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + "*";
        out += "t";
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly alexander(const SeifertMatrix &v) {
    const IntMatrix &m = v.matrix();
    const IntMatrix mt = m.transpose();
    const std::size_t n = m.rows();

    // det(V - t V^T) has degree <= n: sample t = 0..n and interpolate in the
    // falling-factorial basis, whose coefficients Delta^k f(0) / k! are integers.
    std::vector<Integer> diffs(n + 1);
    for (std::size_t t = 0; t <= n; ++t)
        diffs[t] = det(m - Integer(static_cast<unsigned long>(t)) * mt);
    std::vector<Integer> newton(n + 1);
    Integer factorial = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0)
            factorial *= static_cast<unsigned long>(k);
        Integer q;
        mpz_divexact(q.get_mpz_t(), diffs[0].get_mpz_t(), factorial.get_mpz_t());
        newton[k] = q;
        for (std::size_t i = 0; i + k < n; ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
    }

    LaurentPoly result;
    LaurentPoly falling = LaurentPoly::constant(1); // t (t-1) ... (t-k+1)
    for (std::size_t k = 0; k <= n; ++k) {
        result = result + LaurentPoly::constant(newton[k]) * falling;
        falling = falling * LaurentPoly({-Integer(static_cast<unsigned long>(k)), 1}, 0);
    }
    return result;
}

LaurentPoly canonicalize(const LaurentPoly &p) {
    if (p.is_zero())
        throw DomainError("canonicalize: zero polynomial has no unit normalization");
    std::vector<Integer> c = p.coeffs();
    if (c.back() < 0)
        for (auto &x : c)
            x = -x;
    return LaurentPoly(std::move(c), 0);
}

Integer knot_determinant(const SeifertMatrix &v) {
    const Integer from_poly = abs(alexander(v).eval(-1));
    const Integer from_form = abs(det(v.matrix() + v.matrix().transpose()));
    if (from_poly != from_form)
        throw std::logic_error("knot_determinant: |Delta(-1)| disagrees with |det(V + V^T)|");
    return from_poly;
}

namespace {

// Signed divisors of n != 0: positives ascending, then negatives.
std::vector<Integer> signed_divisors(const Integer &n) {
    const Integer m = abs(n);
    std::vector<Integer> low, high;
    for (Integer d = 1; d * d <= m; ++d) {
        if (!mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()))
            continue;
        low.push_back(d);
        if (d * d != m)
            high.push_back(m / d);
    }
    std::reverse(high.begin(), high.end());
    low.insert(low.end(), high.begin(), high.end());
    const std::size_t k = low.size();
    for (std::size_t i = 0; i < k; ++i)
        low.push_back(-low[i]);
    return low;
}

} // namespace

std::optional<std::pair<Integer, Integer>> symmetric_linear_factorization(const LaurentPoly &p) {
    if (p.is_zero())
        throw DomainError("symmetric_linear_factorization: zero polynomial");
    const LaurentPoly q = canonicalize(p);
    if (q.span() > 2)
        throw DomainError("symmetric_linear_factorization: degree span above 2");

    if (q.span() == 0) {
        if (auto r = is_perfect_square(q.leading()))
            return std::make_pair(*r, Integer(0));
        return std::nullopt;
    }
    for (const Integer &b : signed_divisors(q.coeff(0))) {
        for (const Integer &c : signed_divisors(q.leading())) {
            LaurentPoly f({b, -c}, 0);          // b - c t
            LaurentPoly f_inv({-c, b}, -1);     // b - c t^-1
            if (canonicalize(f * f_inv) == q)
                return std::make_pair(b, c);
        }
    }
    return std::nullopt;
}

} // namespace seifertkit
