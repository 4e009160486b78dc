#pragma once
// Dense univariate integer polynomials and rational functions whose
// denominators are products of binomials (1 - t^b).
//
// Coefficients are int64 with overflow checks on every operation; an
// overflow throws std::overflow_error instead of producing a wrong value.

#include <cstdint>
#include <string>
#include <vector>

namespace swcap {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::int64_t> coeffs);
    static Poly constant(std::int64_t c);
    static Poly monomial(std::int64_t c, std::size_t degree);

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    [[nodiscard]] const std::vector<std::int64_t>& coeffs() const { return c_; }

    [[nodiscard]] std::int64_t eval_at_one() const;
    [[nodiscard]] std::int64_t eval(std::int64_t t) const;
    /// Derivative at t = 1 and half the second derivative at t = 1.
    [[nodiscard]] std::int64_t derivative_at_one() const;

    /// this * (1 - t^b)
    [[nodiscard]] Poly times_binomial(std::size_t b) const;
    /// this / (1 - t^b); throws std::domain_error if the division is not exact.
    [[nodiscard]] Poly exact_div_binomial(std::size_t b) const;
    /// Quotient of the division by (1 - t^b), remainder dropped.
    [[nodiscard]] Poly quotient_binomial(std::size_t b) const;
    /// p(t) -> p(t^k)
    [[nodiscard]] Poly stretch(std::size_t k) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Exact division by a polynomial with leading coefficient +-1 and
    /// constant term +-1; throws std::domain_error on a nonzero remainder.
    [[nodiscard]] Poly exact_div(const Poly& d) const;

    [[nodiscard]] std::string to_string(const char* var = "t") const;

private:
    void trim();
    std::vector<std::int64_t> c_;
};

/// N(s) / prod_i (1 - s^{b_i}) with s = t^scale.
struct BinomialRational {
    Poly numerator;
    std::vector<std::size_t> denominator;  // exponents b_i (in s)
    std::size_t scale = 1;

    /// Polynomial part, as a polynomial in s.
    [[nodiscard]] Poly polynomial_part() const;
    [[nodiscard]] std::int64_t polynomial_part_at_one() const { return polynomial_part().eval_at_one(); }
    /// R(t) -> R(t^k)
    [[nodiscard]] BinomialRational substitute_power(std::size_t k) const;
    /// Rewrite in the variable t itself (scale 1).
    [[nodiscard]] BinomialRational in_t() const;
    /// Exact quotient when the denominator divides the numerator.
    [[nodiscard]] Poly as_polynomial() const;
};

/// Equality as rational functions of t (cross multiplication).
bool same_rational_function(const BinomialRational& a, const BinomialRational& b);

}  // namespace swcap
