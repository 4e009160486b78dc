#include "swcap/latcoh.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "swcap/kernels.hpp"

namespace swcap {

namespace {

std::int64_t to_i64(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
    return x.get_si();
}

std::int64_t ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return to_i64(q);
}

__int128 signed_sum(const std::vector<std::int64_t>& a) {
    std::int64_t s;
    if (kernels::sum_i64(a.data(), a.size(), s)) return s;
    __int128 acc = 0;
    for (auto x : a) acc += x;
    return acc;
}

// Maximum of neighbouring entries along `axis`; the axis extent shrinks by one.
std::vector<std::int64_t> shrink(const std::vector<std::int64_t>& src, const std::vector<std::int64_t>& ext, std::size_t axis) {
    std::size_t outer = 1, inner = 1;
    for (std::size_t j = 0; j < axis; ++j) outer *= static_cast<std::size_t>(ext[j]);
    for (std::size_t j = axis + 1; j < ext.size(); ++j) inner *= static_cast<std::size_t>(ext[j]);
    const std::size_t n = static_cast<std::size_t>(ext[axis]);
    std::vector<std::int64_t> dst(outer * (n - 1) * inner);
    for (std::size_t o = 0; o < outer; ++o) {
        const std::int64_t* s = src.data() + o * n * inner;
        kernels::max_i64(dst.data() + o * (n - 1) * inner, s, s + inner, (n - 1) * inner);
    }
    return dst;
}

// sum over cubes of the array (axes >= i free) of (-1)^dim * max weight
__int128 alt_rest(const std::vector<std::int64_t>& arr, std::vector<std::int64_t> ext, std::size_t i) {
    if (i == ext.size()) return signed_sum(arr);
    __int128 s = alt_rest(arr, ext, i + 1);
    if (ext[i] >= 2) {
        auto sh = shrink(arr, ext, i);
        ext[i] -= 1;
        s -= alt_rest(sh, ext, i + 1);
    }
    return s;
}

template <class F>
void for_each_cube_max(const std::vector<std::int64_t>& arr, std::vector<std::int64_t> ext, std::size_t i, int sign, F&& f) {
    if (i == ext.size()) {
        f(arr, sign);
        return;
    }
    for_each_cube_max(arr, ext, i + 1, sign, f);
    if (ext[i] >= 2) {
        auto sh = shrink(arr, ext, i);
        ext[i] -= 1;
        for_each_cube_max(sh, ext, i + 1, -sign, f);
    }
}

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(x & kPrime), hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t r = lo + hi;
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

using SparseCol = std::vector<std::pair<std::int32_t, std::uint64_t>>;  // sorted by row

// rank of a matrix given by columns, modulo kPrime
std::int64_t rank_mod_p(std::vector<SparseCol> cols) {
    std::unordered_map<std::int32_t, std::size_t> pivot_of;  // lowest row -> column
    std::int64_t rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto& col = cols[c];
        while (!col.empty()) {
            auto low = col.back().first;
            auto it = pivot_of.find(low);
            if (it == pivot_of.end()) {
                pivot_of.emplace(low, c);
                ++rank;
                break;
            }
            const auto& piv = cols[it->second];
            // col -= factor * piv, cancelling the lowest entry
            std::uint64_t factor = mulmod(col.back().second, powmod(piv.back().second, kPrime - 2));
            SparseCol merged;
            std::size_t a = 0, b = 0;
            while (a < col.size() || b < piv.size()) {
                if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
                    merged.push_back(col[a++]);
                } else if (a == col.size() || piv[b].first < col[a].first) {
                    merged.emplace_back(piv[b].first, (kPrime - mulmod(factor, piv[b].second)) % kPrime);
                    ++b;
                } else {
                    std::uint64_t v = (col[a].second + kPrime - mulmod(factor, piv[b].second)) % kPrime;
                    if (v != 0) merged.emplace_back(col[a].first, v);
                    ++a;
                    ++b;
                }
            }
            col = std::move(merged);
        }
    }
    return rank;
}

}  // namespace

// --- WeightedBox -----------------------------------------------------------------

WeightedBox::WeightedBox(const Lattice& lat, const DualVector& l, std::vector<std::int64_t> origin, std::vector<std::int64_t> bound)
    : origin_(std::move(origin)), bound_(std::move(bound)) {
    const auto& g = lat.graph();
    const int n = g.size();
    if (static_cast<int>(origin_.size()) != n || static_cast<int>(bound_.size()) != n)
        throw std::invalid_argument("box dimension differs from the lattice rank");
    for (auto b : bound_)
        if (b < 0) throw std::invalid_argument("box bound must be nonnegative");
    nbr_.resize(n);
    for (int v = 0; v < n; ++v) {
        euler_.push_back(g.euler(v));
        lin_.push_back(1 + to_i64(l.star[v]));
        nbr_[v] = g.neighbors(v);
    }
    edges_ = g.edges();
}

std::size_t WeightedBox::points() const {
    std::size_t p = 1;
    for (auto b : bound_) p *= static_cast<std::size_t>(b + 1);
    return p;
}

std::int64_t WeightedBox::weight(const std::vector<std::int64_t>& x) const {
    std::int64_t w = 0;
    const int n = dims();
    std::vector<std::int64_t> l(n);
    for (int v = 0; v < n; ++v) {
        l[v] = origin_[v] + x[v];
        w += -euler_[v] * (l[v] * (l[v] - 1) / 2) + l[v] * lin_[v];
    }
    for (auto [a, b] : edges_) w -= l[a] * l[b];
    return w;
}

void WeightedBox::slice(std::int64_t x0, std::vector<std::int64_t>& out) const {
    const int n = dims();
    std::vector<std::int64_t> x(n, 0);
    x[0] = x0;
    if (n == 1) {
        out.assign(1, weight(x));
        return;
    }
    const int k = n - 1;
    const std::size_t row = static_cast<std::size_t>(bound_[k] + 1);
    std::size_t rows = 1;
    for (int v = 1; v < k; ++v) rows *= static_cast<std::size_t>(bound_[v] + 1);
    out.resize(rows * row);
    for (std::size_t r = 0; r < rows; ++r) {
        x[k] = 0;
        std::int64_t c0 = weight(x);
        std::int64_t lk = origin_[k];
        std::int64_t c1 = -euler_[k] * lk + lin_[k];
        for (int a : nbr_[k]) c1 -= origin_[a] + x[a];
        kernels::quadratic_row(out.data() + r * row, row, c0, c1, -euler_[k]);
        for (int v = k - 1; v >= 1; --v) {  // odometer over axes 1..k-1
            if (++x[v] <= bound_[v]) break;
            x[v] = 0;
        }
    }
}

std::vector<std::int64_t> WeightedBox::all_weights() const {
    std::vector<std::int64_t> out, s;
    out.reserve(points());
    for (std::int64_t x0 = 0; x0 <= bound_[0]; ++x0) {
        slice(x0, s);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

// --- Euler characteristic ---------------------------------------------------------

namespace {

__int128 scan(const WeightedBox& box, std::int64_t& min_weight) {
    std::vector<std::int64_t> rest(box.bound().begin() + 1, box.bound().end());
    for (auto& e : rest) e += 1;
    std::vector<std::int64_t> cur, next, both;
    box.slice(0, cur);
    min_weight = *std::min_element(cur.begin(), cur.end());
    __int128 s = 0;
    for (std::int64_t x0 = 0; x0 <= box.bound()[0]; ++x0) {
        s += alt_rest(cur, rest, 0);
        if (x0 == box.bound()[0]) break;
        box.slice(x0 + 1, next);
        min_weight = std::min(min_weight, *std::min_element(next.begin(), next.end()));
        both.resize(cur.size());
        kernels::max_i64(both.data(), cur.data(), next.data(), cur.size());
        s -= alt_rest(both, rest, 0);
        std::swap(cur, next);
    }
    return s;
}

}  // namespace

__int128 alternating_cube_sum(const WeightedBox& box) {
    std::int64_t m;
    return scan(box, m);
}

std::vector<LevelInfo> level_profile(const WeightedBox& box, std::int64_t& min_weight) {
    auto w = box.all_weights();
    const auto [mn, mx] = std::minmax_element(w.begin(), w.end());
    min_weight = *mn;
    const std::int64_t lo = *mn, hi = *mx;
    if (hi - lo > 50'000'000) throw std::length_error("weight range too wide for a level profile");
    std::vector<std::int64_t> hist(static_cast<std::size_t>(hi - lo + 1), 0);
    std::vector<std::int64_t> ext;
    for (auto b : box.bound()) ext.push_back(b + 1);
    for_each_cube_max(w, ext, 0, 1, [&](const std::vector<std::int64_t>& arr, int sign) {
        for (auto x : arr) hist[static_cast<std::size_t>(x - lo)] += sign;
    });

    // b0 by union-find over points in weight order
    const std::size_t np = w.size();
    std::vector<std::int32_t> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) { return w[a] < w[b]; });
    std::vector<std::size_t> stride(ext.size());
    std::size_t st = 1;
    for (std::size_t j = ext.size(); j-- > 0;) {
        stride[j] = st;
        st *= static_cast<std::size_t>(ext[j]);
    }
    UnionFind uf(np);
    std::vector<char> in(np, 0);
    std::int64_t comps = 0, chi = 0;
    std::vector<LevelInfo> out;
    std::size_t i = 0;
    while (i < np) {
        const std::int64_t level = w[order[i]];
        for (; i < np && w[order[i]] == level; ++i) {
            const std::size_t p = static_cast<std::size_t>(order[i]);
            in[p] = 1;
            ++comps;
            for (std::size_t j = 0; j < ext.size(); ++j) {
                const std::size_t c = (p / stride[j]) % static_cast<std::size_t>(ext[j]);
                if (c > 0 && in[p - stride[j]] && uf.unite(static_cast<std::int32_t>(p), static_cast<std::int32_t>(p - stride[j]))) --comps;
                if (c + 1 < static_cast<std::size_t>(ext[j]) && in[p + stride[j]] &&
                    uf.unite(static_cast<std::int32_t>(p), static_cast<std::int32_t>(p + stride[j])))
                    --comps;
            }
        }
        // chi jumps only at point weights
        for (std::int64_t x = out.empty() ? lo : out.back().level + 1; x <= level; ++x) chi += hist[static_cast<std::size_t>(x - lo)];
        out.push_back({level, chi, comps});
    }
    return out;
}

// --- Betti numbers of one sublevel set -------------------------------------------

Betti sublevel_betti(const WeightedBox& box, std::int64_t n, std::size_t max_cells) {
    const int s = box.dims();
    auto w = box.all_weights();
    const std::size_t np = w.size();
    const std::size_t masks = std::size_t{1} << s;
    if (np * masks > 16'000'000) throw std::length_error("box too large for Betti numbers");
    std::vector<std::int64_t> ext;
    for (auto b : box.bound()) ext.push_back(b + 1);
    std::vector<std::size_t> stride(s);
    std::size_t st = 1;
    for (int j = s; j-- > 0;) {
        stride[j] = st;
        st *= static_cast<std::size_t>(ext[j]);
    }
    std::vector<std::int32_t> id(np * masks, -1);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells(s + 1);  // (point, mask) per dimension
    std::size_t total = 0;
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t m = 0; m < masks; ++m) {
            bool ok = true;
            std::int64_t mx = w[p];
            for (int j = 0; j < s && ok; ++j)
                if (m >> j & 1) ok = (p / stride[j]) % static_cast<std::size_t>(ext[j]) + 1 < static_cast<std::size_t>(ext[j]);
            if (!ok) continue;
            // max over vertices of the cube
            for (std::size_t sub = m;; sub = (sub - 1) & m) {
                std::size_t q = p;
                for (int j = 0; j < s; ++j)
                    if (sub >> j & 1) q += stride[j];
                mx = std::max(mx, w[q]);
                if (sub == 0) break;
            }
            if (mx > n) continue;
            int dim = __builtin_popcountll(m);
            id[p * masks + m] = static_cast<std::int32_t>(cells[dim].size());
            cells[dim].emplace_back(p, m);
            if (++total > max_cells) throw std::length_error("too many cells for Betti numbers");
        }
    }
    Betti out;
    out.empty = cells[0].empty();
    std::vector<std::int64_t> rank(s + 2, 0);
    for (int d = 1; d <= s; ++d) {
        std::vector<SparseCol> cols;
        cols.reserve(cells[d].size());
        for (auto [p, m] : cells[d]) {
            SparseCol col;
            int pos = 0;
            for (int j = 0; j < s; ++j) {
                if (!(m >> j & 1)) continue;
                const std::size_t fm = m & ~(std::size_t{1} << j);
                const std::uint64_t plus = pos % 2 == 0 ? 1 : kPrime - 1;
                const std::uint64_t minus = pos % 2 == 0 ? kPrime - 1 : 1;
                col.emplace_back(id[(p + stride[j]) * masks + fm], plus);
                col.emplace_back(id[p * masks + fm], minus);
                ++pos;
            }
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        rank[d] = rank_mod_p(std::move(cols));
    }
    for (int d = 0; d <= s; ++d) out.ranks.push_back(static_cast<std::int64_t>(cells[d].size()) - rank[d] - rank[d + 1]);
    while (out.ranks.size() > 1 && out.ranks.back() == 0) out.ranks.pop_back();
    return out;
}

// --- eu with box growth -------------------------------------------------------------

namespace {

struct BoxEval {
    std::int64_t eu = 0;
    std::int64_t min = 0;
    bool profile = false;
    std::vector<LevelInfo> levels;
    std::int64_t h0 = 0, higher = 0;
};

BoxEval evaluate(const Lattice& lat, const DualVector& l, const std::vector<std::int64_t>& origin,
                 const std::vector<std::int64_t>& bound, const EuOptions& opt) {
    WeightedBox box(lat, l, origin, bound);
    BoxEval ev;
    __int128 s = scan(box, ev.min);
    if (s > INT64_MAX || s < -INT64_MAX) throw std::overflow_error("cube sum overflow");
    ev.eu = -static_cast<std::int64_t>(s);
    if (box.points() <= opt.profile_points) {
        std::int64_t mn;
        ev.levels = level_profile(box, mn);
        ev.profile = true;
        for (std::size_t i = 0; i < ev.levels.size(); ++i) {
            const auto& lv = ev.levels[i];
            const std::int64_t span = i + 1 < ev.levels.size() ? ev.levels[i + 1].level - lv.level : 1;
            ev.h0 += (lv.b0 - 1) * span;
            ev.higher += (lv.euler_char - lv.b0) * span;
        }
        if (-ev.min + ev.h0 + ev.higher != ev.eu) throw std::logic_error("level profile disagrees with the cube sum");
    }
    return ev;
}

}  // namespace

EuResult lattice_eu(const Lattice& lat, const DualVector& l, const EuOptions& opt) {
    EuResult res;
    const int n = lat.rank();
    if (n > opt.max_vertices) {
        res.note = "graph exceeds the vertex cap";
        return res;
    }
    const auto cls = lat.class_of(l);
    const auto r = lat.minimal_rep(cls);
    std::vector<std::int64_t> origin(n), bound(n);
    for (int v = 0; v < n; ++v) {
        Rat shift = l.e[v] - r.e[v];
        if (shift.get_den() != 1) throw std::logic_error("representatives differ by a non-lattice vector");
        origin[v] = -to_i64(shift.get_num());
        // start from Z_K - 2 r_h, Z_K = -k
        Rat zk = -lat.canonical().e[v] - 2 * r.e[v];
        bound[v] = std::clamp<std::int64_t>(ceil_rat(zk), 2, opt.max_axis);
    }
    auto points = [](const std::vector<std::int64_t>& b) {
        long double p = 1;
        for (auto x : b) p *= static_cast<long double>(x + 1);
        return p;
    };
    if (points(bound) > static_cast<long double>(opt.max_points)) {
        res.note = "initial box exceeds the point budget";
        res.box = bound;
        return res;
    }
    BoxEval cur = evaluate(lat, l, origin, bound, opt);
    int agreed = 0;
    while (true) {
        std::vector<std::int64_t> nb(n);
        for (int v = 0; v < n; ++v) nb[v] = std::min(bound[v] * 2, opt.max_axis);
        if (nb == bound) {
            res.note = "box reached the axis cap before stabilizing";
            break;
        }
        if (points(nb) > static_cast<long double>(opt.max_points)) {
            res.note = "box growth exceeds the point budget";
            break;
        }
        BoxEval next = evaluate(lat, l, origin, nb, opt);
        bool same = next.eu == cur.eu && next.min == cur.min;
        if (same && next.profile && cur.profile) same = next.h0 == cur.h0 && next.higher == cur.higher;
        agreed = same ? agreed + 1 : 0;
        bound = nb;
        cur = std::move(next);
        if (agreed >= opt.confirmations) {
            res.conclusive = true;
            break;
        }
    }
    res.eu = cur.eu;
    res.min_weight = cur.min;
    res.box = bound;
    res.levels = std::move(cur.levels);
    res.profile = cur.profile;
    res.rank_h0_red = cur.h0;
    res.higher_alt = cur.higher;
    return res;
}

}  // namespace swcap
