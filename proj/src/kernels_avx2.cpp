// Compiled with -mavx2; only reached after a runtime CPU check.
#include "swcap/kernels.hpp"

#include <immintrin.h>

namespace swcap::kernels::avx2 {

namespace {
constexpr std::size_t kLanes = 4;

inline __m256i load(const std::int64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::int64_t* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }
}  // namespace

bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
    __m256i bad = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i a = load(dst + i);
        const __m256i b = load(src + i);
        const __m256i r = _mm256_add_epi64(a, b);
        // sign bit set where a and b agree in sign but r does not
        bad = _mm256_or_si256(bad, _mm256_and_si256(_mm256_xor_si256(a, r), _mm256_xor_si256(b, r)));
        store(dst + i, r);
    }
    bool ok = _mm256_movemask_pd(_mm256_castsi256_pd(bad)) == 0;
    return scalar::add_i64(dst + i, src + i, n - i) && ok;
}

bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
    __m256i bad = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i a = load(dst + i);
        const __m256i b = load(src + i);
        const __m256i r = _mm256_sub_epi64(a, b);
        bad = _mm256_or_si256(bad, _mm256_and_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(a, r)));
        store(dst + i, r);
    }
    bool ok = _mm256_movemask_pd(_mm256_castsi256_pd(bad)) == 0;
    return scalar::sub_i64(dst + i, src + i, n - i) && ok;
}

void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i x = load(a + i);
        const __m256i y = load(b + i);
        const __m256i gt = _mm256_cmpgt_epi64(y, x);
        store(dst + i, _mm256_blendv_epi8(x, y, gt));
    }
    scalar::max_i64(dst + i, a + i, b + i, n - i);
}

bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out) {
    __m256i acc = _mm256_setzero_si256();
    __m256i bad = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i b = load(src + i);
        const __m256i r = _mm256_add_epi64(acc, b);
        bad = _mm256_or_si256(bad, _mm256_and_si256(_mm256_xor_si256(acc, r), _mm256_xor_si256(b, r)));
        acc = r;
    }
    if (_mm256_movemask_pd(_mm256_castsi256_pd(bad)) != 0) return scalar::sum_i64(src, n, out);
    alignas(32) std::int64_t lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    __int128 total = 0;
    for (auto v : lanes) total += v;
    for (; i < n; ++i) total += src[i];
    out = static_cast<std::int64_t>(total);
    return total == static_cast<__int128>(out);
}

void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2) {
    if (n < 2 * kLanes) {
        scalar::quadratic_row(out, n, c0, c1, c2);
        return;
    }
    // Second-order differences: v(x+4) = v(x) + d(x), d(x+4) = d(x) + 16*c2.
    __m256i v = _mm256_setr_epi64x(c0, c0 + c1, c0 + 2 * c1 + c2, c0 + 3 * c1 + 3 * c2);
    __m256i d = _mm256_setr_epi64x(4 * c1 + 6 * c2, 4 * c1 + 10 * c2, 4 * c1 + 14 * c2, 4 * c1 + 18 * c2);
    const __m256i dd = _mm256_set1_epi64x(16 * c2);
    std::size_t x = 0;
    for (; x + kLanes <= n; x += kLanes) {
        store(out + x, v);
        v = _mm256_add_epi64(v, d);
        d = _mm256_add_epi64(d, dd);
    }
    for (; x < n; ++x) {
        const auto xi = static_cast<std::int64_t>(x);
        out[x] = c0 + c1 * xi + c2 * (xi * (xi - 1) / 2);
    }
}

}  // namespace swcap::kernels::avx2
