#include "swcap/group_series.hpp"

#include <numeric>
#include <stdexcept>

#include "swcap/kernels.hpp"

namespace swcap {

namespace {

constexpr std::size_t kMaxEntries = std::size_t{1} << 28;

void check(bool ok) {
    if (!ok) throw std::overflow_error("group ring coefficient overflow");
}

}  // namespace

GroupSeries::GroupSeries(FiniteAbelianGroup group, std::size_t scale)
    : group_(std::move(group)), order_(static_cast<std::size_t>(group_.order())), scale_(scale), num_(order_, 0) {
    num_[0] = 1;
}

long GroupSeries::degree() const { return static_cast<long>(num_.size() / order_) - 1; }

std::int64_t GroupSeries::coeff(std::size_t deg, std::int64_t g) const {
    std::size_t idx = deg * order_ + static_cast<std::size_t>(g);
    return idx < num_.size() ? num_[idx] : 0;
}

void GroupSeries::multiply_binomial(std::int64_t g, std::size_t a) {
    const std::size_t blocks = num_.size() / order_;
    if ((blocks + a) * order_ > kMaxEntries) throw std::length_error("group series too large");
    std::vector<std::int64_t> out(num_);
    out.resize((blocks + a) * order_, 0);
    const auto perm = group_.translation(g);
    std::vector<std::int64_t> shifted(order_);
    for (std::size_t d = 0; d < blocks; ++d) {
        const std::int64_t* src = num_.data() + d * order_;
        for (std::size_t x = 0; x < order_; ++x) shifted[static_cast<std::size_t>(perm[x])] = src[x];
        check(kernels::sub_i64(out.data() + (d + a) * order_, shifted.data(), order_));
    }
    num_ = std::move(out);
}

void GroupSeries::divide_binomial(std::int64_t g, std::size_t a) {
    const std::size_t ord = static_cast<std::size_t>(group_.order_of(g));
    const std::size_t b = a * ord;
    const std::size_t blocks = num_.size() / order_;
    if ((blocks + b) * order_ > kMaxEntries) throw std::length_error("group series too large");

    // P * (1 - s^b)
    std::vector<std::int64_t> p(num_);
    p.resize((blocks + b) * order_, 0);
    check(kernels::sub_i64(p.data() + b * order_, num_.data(), num_.size()));

    // Q = P / (1 - g s^a): Q_d = P_d + g * Q_{d-a}, ascending.
    const auto perm = group_.translation(g);
    std::vector<std::int64_t> shifted(order_);
    const std::size_t total = p.size() / order_;
    for (std::size_t d = a; d < total; ++d) {
        const std::int64_t* prev = p.data() + (d - a) * order_;
        for (std::size_t x = 0; x < order_; ++x) shifted[static_cast<std::size_t>(perm[x])] = prev[x];
        check(kernels::add_i64(p.data() + d * order_, shifted.data(), order_));
    }
    // exact: the top a blocks vanish
    for (std::size_t i = (total - a) * order_; i < p.size(); ++i)
        if (p[i] != 0) throw std::logic_error("group ring binomial division is not exact");
    p.resize((total - a) * order_);
    while (p.size() > order_) {
        bool zero = true;
        for (std::size_t i = p.size() - order_; i < p.size() && zero; ++i) zero = p[i] == 0;
        if (!zero) break;
        p.resize(p.size() - order_);
    }
    num_ = std::move(p);
    denom_.push_back(b);
}

BinomialRational GroupSeries::component(std::int64_t h) const {
    const std::size_t blocks = num_.size() / order_;
    std::vector<std::int64_t> c(blocks);
    for (std::size_t d = 0; d < blocks; ++d) c[d] = num_[d * order_ + static_cast<std::size_t>(h)];
    BinomialRational r;
    r.numerator = Poly(std::move(c));
    r.denominator = denom_;
    r.scale = scale_;
    return r;
}

BinomialRational GroupSeries::augmentation() const {
    const std::size_t blocks = num_.size() / order_;
    std::vector<std::int64_t> c(blocks);
    for (std::size_t d = 0; d < blocks; ++d) check(kernels::sum_i64(num_.data() + d * order_, order_, c[d]));
    BinomialRational r;
    r.numerator = Poly(std::move(c));
    r.denominator = denom_;
    r.scale = scale_;
    return r;
}

GroupSeries zeta_series(const Lattice& lat, int v, const std::vector<int>& extra_degree) {
    const auto& g = lat.graph();
    const int n = g.size();
    std::vector<int> power(n);
    std::vector<std::size_t> expo(n, 0);
    std::size_t common = 0;
    for (int w = 0; w < n; ++w) {
        power[w] = g.degree(w) + (extra_degree.empty() ? 0 : extra_degree.at(w)) - 2;
        if (power[w] == 0) continue;
        const Int& a = lat.adjugate()[v][w];
        if (a <= 0) throw StructureError("zeta series needs a connected graph");
        if (!a.fits_ulong_p()) throw std::overflow_error("series exponent too large");
        expo[w] = a.get_ui();
        common = std::gcd(common, expo[w]);
    }
    if (common == 0) common = 1;
    GroupSeries s(lat.group(), common);
    // numerator factors first keeps intermediate sizes small
    for (int w = 0; w < n; ++w) {
        if (power[w] <= 0) continue;
        auto cls = lat.class_of(lat.anti_dual(w));
        for (int k = 0; k < power[w]; ++k) s.multiply_binomial(cls, expo[w] / common);
    }
    for (int w = 0; w < n; ++w) {
        if (power[w] >= 0) continue;
        auto cls = lat.class_of(lat.anti_dual(w));
        for (int k = 0; k < -power[w]; ++k) s.divide_binomial(cls, expo[w] / common);
    }
    return s;
}

Poly alexander_polynomial(const PlumbingGraph& g) {
    if (g.arrows().size() != 1) throw InputError("Alexander polynomial needs exactly one arrow");
    if (!g.is_tree()) throw StructureError("graph is not a tree");
    Lattice lat(g);
    const int a = g.arrows()[0].vertex;
    std::vector<int> extra(g.size(), 0);
    extra[a] = 1;
    GroupSeries s = zeta_series(lat, a, extra);
    // exponents of s are adj/scale; the knot variable is t^det
    const Int& det = lat.det();
    if (!det.fits_ulong_p() || s.scale() % det.get_ui() != 0)
        throw InputError("anti-dual of the arrow vertex is not integral");
    BinomialRational r = s.component(0);
    r.scale = s.scale() / det.get_ui();
    BinomialRational tr = r.in_t();
    Poly num = tr.numerator.times_binomial(1);
    BinomialRational full{num, tr.denominator, 1};
    Poly delta;
    try {
        delta = full.as_polynomial();
    } catch (const std::domain_error&) {
        throw std::logic_error("Alexander quotient is not a polynomial");
    }
    auto at1 = delta.eval_at_one();
    if (at1 == -1) delta = Poly::constant(0) - delta;
    else if (at1 != 1) throw std::logic_error("Alexander polynomial does not normalize to 1 at t = 1");
    return delta;
}

Poly torus_knot_alexander(std::int64_t a, std::int64_t b) {
    BinomialRational r;
    r.numerator = Poly::constant(1).times_binomial(static_cast<std::size_t>(a * b)).times_binomial(1);
    r.denominator = {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
    return r.as_polynomial();
}

}  // namespace swcap
