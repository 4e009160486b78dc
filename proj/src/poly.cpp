#include "swcap/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "swcap/kernels.hpp"

namespace swcap {

namespace {

void check(bool ok) {
    if (!ok) throw std::overflow_error("polynomial coefficient overflow");
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

}  // namespace

Poly::Poly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(std::int64_t c) { return Poly(std::vector<std::int64_t>{c}); }

Poly Poly::monomial(std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t Poly::eval_at_one() const {
    std::int64_t s;
    check(kernels::sum_i64(c_.data(), c_.size(), s));
    return s;
}

std::int64_t Poly::eval(std::int64_t t) const {
    std::int64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = mul_checked(acc, t);
        check(!__builtin_add_overflow(acc, c_[i], &acc));
    }
    return acc;
}

std::int64_t Poly::derivative_at_one() const {
    std::int64_t acc = 0;
    for (std::size_t i = 1; i < c_.size(); ++i)
        check(!__builtin_add_overflow(acc, mul_checked(static_cast<std::int64_t>(i), c_[i]), &acc));
    return acc;
}

Poly Poly::times_binomial(std::size_t b) const {
    if (c_.empty()) return {};
    if (b == 0) return {};
    std::vector<std::int64_t> out(c_.size() + b, 0);
    std::copy(c_.begin(), c_.end(), out.begin());
    check(kernels::sub_i64(out.data() + b, c_.data(), c_.size()));
    return Poly(std::move(out));
}

Poly Poly::exact_div_binomial(std::size_t b) const {
    if (b == 0) throw std::domain_error("division by zero binomial");
    if (c_.empty()) return {};
    // Q = P / (1 - t^b): Q[i] = P[i] + Q[i-b], processed block by block.
    std::vector<std::int64_t> q = c_;
    for (std::size_t start = b; start < q.size(); start += b) {
        std::size_t len = std::min(b, q.size() - start);
        check(kernels::add_i64(q.data() + start, q.data() + start - b, len));
    }
    // The series must terminate: the last b coefficients of Q are the
    // would-be tail and have to vanish.
    if (q.size() < b) throw std::domain_error("binomial does not divide polynomial");
    for (std::size_t i = q.size() - b; i < q.size(); ++i)
        if (q[i] != 0) throw std::domain_error("binomial does not divide polynomial");
    q.resize(q.size() - b);
    return Poly(std::move(q));
}

Poly Poly::quotient_binomial(std::size_t b) const {
    if (b == 0) throw std::domain_error("division by zero binomial");
    if (c_.size() <= b) return {};
    // P = Q (1 - t^b) + R: Q[j] = Q[j+b] - P[j+b], descending in blocks.
    const std::size_t qlen = c_.size() - b;
    std::vector<std::int64_t> q(qlen + b, 0);  // padded so q[j+b] is addressable
    for (std::size_t end = qlen; end > 0;) {
        std::size_t start = end > b ? end - b : 0;
        std::size_t len = end - start;
        std::copy(q.begin() + static_cast<long>(start + b), q.begin() + static_cast<long>(start + b + len),
                  q.begin() + static_cast<long>(start));
        check(kernels::sub_i64(q.data() + start, c_.data() + start + b, len));
        end = start;
    }
    q.resize(qlen);
    return Poly(std::move(q));
}

Poly Poly::stretch(std::size_t k) const {
    if (k == 1 || c_.empty()) return *this;
    std::vector<std::int64_t> out((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
    return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<std::int64_t> out = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& other = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    check(kernels::add_i64(out.data(), other.data(), other.size()));
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<std::int64_t> out = a.c_;
    if (out.size() < b.c_.size()) out.resize(b.c_.size(), 0);
    check(kernels::sub_i64(out.data(), b.c_.data(), b.c_.size()));
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            check(!__builtin_add_overflow(out[i + j], mul_checked(a.c_[i], b.c_[j]), &out[i + j]));
    }
    return Poly(std::move(out));
}

Poly Poly::exact_div(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const std::int64_t lead = d.c_.back();
    if (lead != 1 && lead != -1) throw std::domain_error("divisor is not monic up to sign");
    if (c_.size() < d.c_.size()) {
        if (is_zero()) return {};
        throw std::domain_error("polynomial division leaves a remainder");
    }
    std::vector<std::int64_t> r = c_;
    const std::size_t dd = d.c_.size() - 1;
    std::vector<std::int64_t> q(r.size() - dd, 0);
    for (std::size_t j = q.size(); j-- > 0;) {
        const std::int64_t coef = r[j + dd] * lead;  // lead = +-1
        q[j] = coef;
        if (coef == 0) continue;
        for (std::size_t k = 0; k <= dd; ++k)
            if (d.c_[k] != 0) check(!__builtin_sub_overflow(r[j + k], mul_checked(coef, d.c_[k]), &r[j + k]));
    }
    for (auto x : r)
        if (x != 0) throw std::domain_error("polynomial division leaves a remainder");
    return Poly(std::move(q));
}

std::string Poly::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        auto c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        auto a = c < 0 ? -c : c;
        if (i == 0 || a != 1) os << a;
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// --- BinomialRational -------------------------------------------------------------

Poly BinomialRational::polynomial_part() const {
    // pol(N / (D1 D2)) = pol(quot(N, D1) / D2): remainders stay proper.
    Poly q = numerator;
    for (auto b : denominator) q = q.quotient_binomial(b);
    return q;
}

BinomialRational BinomialRational::substitute_power(std::size_t k) const {
    BinomialRational r = *this;
    r.scale *= k;
    return r;
}

BinomialRational BinomialRational::in_t() const {
    BinomialRational r;
    r.numerator = numerator.stretch(scale);
    for (auto b : denominator) r.denominator.push_back(b * scale);
    r.scale = 1;
    return r;
}

Poly BinomialRational::as_polynomial() const {
    Poly q = numerator;
    for (auto b : denominator) q = q.exact_div_binomial(b);
    return q.stretch(scale);
}

bool same_rational_function(const BinomialRational& a, const BinomialRational& b) {
    const std::size_t common = std::lcm(a.scale, b.scale);
    auto lift = [common](const BinomialRational& r) {
        const std::size_t k = common / r.scale;
        BinomialRational out;
        out.numerator = r.numerator.stretch(k);
        for (auto e : r.denominator) out.denominator.push_back(e * k);
        return out;
    };
    BinomialRational x = lift(a), y = lift(b);
    Poly lhs = x.numerator, rhs = y.numerator;
    for (auto e : y.denominator) lhs = lhs.times_binomial(e);
    for (auto e : x.denominator) rhs = rhs.times_binomial(e);
    return lhs == rhs;
}

}  // namespace swcap
