#include "swcap/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace swcap {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::vector<std::int64_t> primary_factors(const std::vector<std::int64_t>& invariant_factors) {
    std::vector<std::int64_t> out;
    for (auto f : invariant_factors) {
        for (std::int64_t p = 2; p * p <= f; ++p) {
            std::int64_t q = 1;
            while (f % p == 0) {
                f /= p;
                q *= p;
            }
            if (q > 1) out.push_back(q);
        }
        if (f > 1) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

std::int64_t to_i64(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return x.get_si();
}

IntMatrix identity(int n) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

// --- FiniteAbelianGroup -------------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (auto d : factors_) {
        if (d < 2) throw std::invalid_argument("group factors must exceed 1");
        order_ *= d;
    }
}

std::int64_t FiniteAbelianGroup::encode(const std::vector<std::int64_t>& r) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto d = factors_[i];
        idx = idx * d + ((r[i] % d) + d) % d;
    }
    return idx;
}

std::vector<std::int64_t> FiniteAbelianGroup::decode(std::int64_t index) const {
    std::vector<std::int64_t> r(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        r[i] = index % factors_[i];
        index /= factors_[i];
    }
    return r;
}

std::int64_t FiniteAbelianGroup::add(std::int64_t a, std::int64_t b) const {
    if (factors_.size() == 1) return (a + b) % order_;
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return encode(x);
}

std::int64_t FiniteAbelianGroup::neg(std::int64_t a) const {
    auto x = decode(a);
    for (auto& v : x) v = -v;
    return encode(x);
}

std::int64_t FiniteAbelianGroup::mul(std::int64_t a, std::int64_t k) const {
    auto x = decode(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::int64_t>((static_cast<__int128>(x[i]) * k) % factors_[i]);
    return encode(x);
}

std::int64_t FiniteAbelianGroup::order_of(std::int64_t a) const {
    auto x = decode(a);
    std::int64_t o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto d = factors_[i];
        o = std::lcm(o, d / std::gcd(d, x[i]));
    }
    return o;
}

std::vector<std::int64_t> FiniteAbelianGroup::translation(std::int64_t g) const {
    std::vector<std::int64_t> perm(order_);
    if (factors_.size() <= 1) {
        for (std::int64_t x = 0; x < order_; ++x) perm[x] = (x + g) % order_;
        return perm;
    }
    auto gd = decode(g);
    std::vector<std::int64_t> digits(factors_.size(), 0);
    for (std::int64_t x = 0; x < order_; ++x) {
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + (digits[i] + gd[i]) % factors_[i];
        perm[x] = idx;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            if (++digits[i] < factors_[i]) break;
            digits[i] = 0;
        }
    }
    return perm;
}

// --- free functions ------------------------------------------------------------

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    const int n = g.size();
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (int v = 0; v < n; ++v) m[v][v] = g.euler(v);
    for (auto [a, b] : g.edges()) {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    return m;
}

namespace {

// Leading principal minors of m by Bareiss elimination without pivoting;
// stops at the first non-positive minor.
std::vector<Int> leading_minors(IntMatrix m) {
    const int n = static_cast<int>(m.size());
    std::vector<Int> minors;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] <= 0) {
            minors.push_back(m[k][k]);
            return minors;
        }
        minors.push_back(m[k][k]);
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return minors;
}

IntMatrix negated(IntMatrix m) {
    for (auto& row : m)
        for (auto& x : row) x = -x;
    return m;
}

}  // namespace

bool is_negative_definite(const PlumbingGraph& g) {
    auto minors = leading_minors(negated(intersection_matrix(g)));
    return std::all_of(minors.begin(), minors.end(), [](const Int& x) { return x > 0; });
}

SmithForm smith_normal_form(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    IntMatrix m = a;
    IntMatrix u = identity(n), ui = identity(n);

    auto row_add = [&](int dst, int src, const Int& c) {  // R_dst += c R_src
        for (int j = 0; j < n; ++j) {
            m[dst][j] += c * m[src][j];
            u[dst][j] += c * u[src][j];
        }
        for (int i = 0; i < n; ++i) ui[i][src] -= c * ui[i][dst];
    };
    auto row_swap = [&](int x, int y) {
        std::swap(m[x], m[y]);
        std::swap(u[x], u[y]);
        for (int i = 0; i < n; ++i) std::swap(ui[i][x], ui[i][y]);
    };
    auto col_add = [&](int dst, int src, const Int& c) {
        for (int i = 0; i < n; ++i) m[i][dst] += c * m[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < n; ++i) std::swap(m[i][x], m[i][y]);
    };

    for (int k = 0; k < n; ++k) {
        while (true) {
            int pi = -1, pj = -1;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            if (pi != k) row_swap(pi, k);
            if (pj != k) col_swap(pj, k);

            bool clean = true;
            for (int i = k + 1; i < n; ++i) {
                if (m[i][k] == 0) continue;
                Int q = floor_div(m[i][k], m[k][k]);
                row_add(i, k, -q);
                if (m[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (m[k][j] == 0) continue;
                Int q = floor_div(m[k][j], m[k][k]);
                col_add(j, k, -q);
                if (m[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = k + 1; i < n && bad < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (m[i][j] % m[k][k] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_add(k, bad, 1);
        }
        if (m[k][k] < 0) {
            for (int j = 0; j < n; ++j) {
                m[k][j] = -m[k][j];
                u[k][j] = -u[k][j];
            }
            for (int i = 0; i < n; ++i) ui[i][k] = -ui[i][k];
        }
    }
    SmithForm out;
    for (int k = 0; k < n; ++k) out.diagonal.push_back(m[k][k]);
    out.left = std::move(u);
    out.left_inverse = std::move(ui);
    return out;
}

// --- Lattice ------------------------------------------------------------------

Lattice::Lattice(const PlumbingGraph& g) : graph_(g), n_(g.size()) {
    if (!g.is_forest()) throw StructureError("plumbing graph contains a cycle");
    form_ = intersection_matrix(g);
    auto minors = leading_minors(negated(form_));
    for (const auto& x : minors)
        if (x <= 0) throw InputError("intersection form is not negative definite");
    det_ = n_ == 0 ? Int(1) : minors.back();

    // adj = det * (-I)^{-1} by Gauss-Jordan over Q.
    std::vector<std::vector<Rat>> aug(n_, std::vector<Rat>(2 * n_, 0));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) aug[i][j] = -form_[i][j];
        aug[i][n_ + i] = 1;
    }
    for (int c = 0; c < n_; ++c) {
        int p = c;
        while (aug[p][c] == 0) ++p;
        std::swap(aug[p], aug[c]);
        Rat inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (int r = 0; r < n_; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            Rat f = aug[r][c];
            for (int j = c; j < 2 * n_; ++j) aug[r][j] -= f * aug[c][j];
        }
    }
    adj_.assign(n_, std::vector<Int>(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rat v = aug[i][n_ + j] * det_;
            if (v.get_den() != 1) throw std::logic_error("adjugate is not integral");
            adj_[i][j] = v.get_num();
        }

    std::vector<Int> kstar(n_);
    for (int v = 0; v < n_; ++v) kstar[v] = g.euler(v) + 2;
    canonical_ = from_star(std::move(kstar));

    auto snf = smith_normal_form(negated(form_));
    std::vector<std::int64_t> factors;
    for (int i = 0; i < n_; ++i) {
        if (snf.diagonal[i] == 0) throw std::logic_error("degenerate Smith form of a definite matrix");
        if (snf.diagonal[i] > 1) {
            factors.push_back(to_i64(snf.diagonal[i]));
            class_rows_.push_back(snf.left[i]);
            std::vector<Int> gen(n_);
            for (int r = 0; r < n_; ++r) gen[r] = snf.left_inverse[r][i];
            generators_.push_back(std::move(gen));
        }
    }
    group_ = FiniteAbelianGroup(factors);
    if (Int(group_.order()) != det_) throw std::logic_error("Smith form order differs from determinant");
}

DualVector Lattice::from_star(std::vector<Int> star) const {
    if (static_cast<int>(star.size()) != n_) throw std::invalid_argument("dual vector has wrong length");
    DualVector d;
    d.e.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
        Int acc = 0;
        for (int j = 0; j < n_; ++j) acc += adj_[i][j] * star[j];
        d.e[i] = Rat(acc, det_);
        d.e[i].canonicalize();
    }
    d.star = std::move(star);
    return d;
}

DualVector Lattice::from_e(std::vector<Rat> e) const {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("dual vector has wrong length");
    DualVector d;
    d.star.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
        Rat acc = 0;
        for (int w = 0; w < n_; ++w) acc -= form_[v][w] * e[w];
        if (acc.get_den() != 1) throw InputError("vector is not in the dual lattice");
        d.star[v] = acc.get_num();
    }
    d.e = std::move(e);
    return d;
}

DualVector Lattice::from_lattice(const LatticeVector& l) const {
    std::vector<Rat> e(l.begin(), l.end());
    return from_e(std::move(e));
}

DualVector Lattice::zero() const { return from_star(std::vector<Int>(n_, 0)); }

DualVector Lattice::anti_dual(int v) const {
    std::vector<Int> s(n_, 0);
    s.at(v) = 1;
    return from_star(std::move(s));
}

Rat Lattice::pair(const DualVector& a, const DualVector& b) const {
    // (a, b) = -sum_v a_v^E * star_v(b)
    Rat acc = 0;
    for (int v = 0; v < n_; ++v) acc -= a.e[v] * b.star[v];
    return acc;
}

Rat Lattice::pair_star(int a, int b) const {
    Rat r(-adj_[a][b], det_);
    r.canonicalize();
    return r;
}

DualVector Lattice::add(const DualVector& a, const DualVector& b) const {
    DualVector d = a;
    for (int v = 0; v < n_; ++v) {
        d.e[v] += b.e[v];
        d.star[v] += b.star[v];
    }
    return d;
}

DualVector Lattice::sub(const DualVector& a, const DualVector& b) const {
    DualVector d = a;
    for (int v = 0; v < n_; ++v) {
        d.e[v] -= b.e[v];
        d.star[v] -= b.star[v];
    }
    return d;
}

DualVector Lattice::scale(const DualVector& a, const Int& k) const {
    DualVector d = a;
    for (int v = 0; v < n_; ++v) {
        d.e[v] *= k;
        d.star[v] *= k;
    }
    return d;
}

Rat Lattice::chi(const DualVector& l) const { return -pair(l, add(l, canonical_)) / 2; }

Rat Lattice::i_invariant(const DualVector& l) const {
    auto x = add(canonical_, scale(l, 2));
    return (pair(x, x) + n_) / 8;
}

std::int64_t Lattice::class_of_star(const std::vector<Int>& star) const {
    std::vector<std::int64_t> residues;
    const auto& f = group_.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int acc = 0;
        for (int j = 0; j < n_; ++j) acc += class_rows_[i][j] * star[j];
        Int r = acc % Int(f[i]);
        if (r < 0) r += f[i];
        residues.push_back(r.get_si());
    }
    return group_.encode(residues);
}

std::int64_t Lattice::class_of(const DualVector& l) const { return class_of_star(l.star); }

DualVector Lattice::representative(std::int64_t cls) const {
    auto digits = group_.decode(cls);
    std::vector<Int> star(n_, 0);
    for (std::size_t i = 0; i < digits.size(); ++i)
        for (int j = 0; j < n_; ++j) star[j] += generators_[i][j] * digits[i];
    return from_star(std::move(star));
}

DualVector Lattice::minimal_rep(std::int64_t cls) const { return fractional_part(representative(cls)); }

LatticeVector Lattice::floor_part(const DualVector& l) const {
    LatticeVector out(n_);
    for (int v = 0; v < n_; ++v) out[v] = floor_rat(l.e[v]);
    return out;
}

DualVector Lattice::fractional_part(const DualVector& l) const {
    auto fl = floor_part(l);
    std::vector<Rat> e(n_);
    for (int v = 0; v < n_; ++v) e[v] = l.e[v] - fl[v];
    return from_e(std::move(e));
}

bool Lattice::in_lattice(const DualVector& l) const {
    return std::all_of(l.e.begin(), l.e.end(), [](const Rat& x) { return x.get_den() == 1; });
}

DualVector restrict_to(const Lattice& sub, const DualVector& l, const std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) != sub.rank()) throw StructureError("restriction subset does not match the subgraph");
    std::vector<Int> star;
    star.reserve(subset.size());
    for (int v : subset) {
        if (v < 0 || v >= static_cast<int>(l.star.size())) throw StructureError("restriction subset is not a subgraph");
        star.push_back(l.star[v]);
    }
    return sub.from_star(std::move(star));
}

}  // namespace swcap
