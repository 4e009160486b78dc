#include "swcap/kernels.hpp"

#include <arm_neon.h>

namespace swcap::kernels::neon {

namespace {
constexpr std::size_t kLanes = 2;
}

bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
    int64x2_t bad = vdupq_n_s64(0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const int64x2_t a = vld1q_s64(dst + i);
        const int64x2_t b = vld1q_s64(src + i);
        const int64x2_t r = vaddq_s64(a, b);
        bad = vorrq_s64(bad, vandq_s64(veorq_s64(a, r), veorq_s64(b, r)));
        vst1q_s64(dst + i, r);
    }
    const bool ok = (vgetq_lane_s64(bad, 0) | vgetq_lane_s64(bad, 1)) >= 0;
    return scalar::add_i64(dst + i, src + i, n - i) && ok;
}

bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
    int64x2_t bad = vdupq_n_s64(0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const int64x2_t a = vld1q_s64(dst + i);
        const int64x2_t b = vld1q_s64(src + i);
        const int64x2_t r = vsubq_s64(a, b);
        bad = vorrq_s64(bad, vandq_s64(veorq_s64(a, b), veorq_s64(a, r)));
        vst1q_s64(dst + i, r);
    }
    const bool ok = (vgetq_lane_s64(bad, 0) | vgetq_lane_s64(bad, 1)) >= 0;
    return scalar::sub_i64(dst + i, src + i, n - i) && ok;
}

void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const int64x2_t x = vld1q_s64(a + i);
        const int64x2_t y = vld1q_s64(b + i);
        vst1q_s64(dst + i, vbslq_s64(vcgtq_s64(y, x), y, x));
    }
    scalar::max_i64(dst + i, a + i, b + i, n - i);
}

bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out) {
    return scalar::sum_i64(src, n, out);
}

void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2) {
    scalar::quadratic_row(out, n, c0, c1, c2);
}

}  // namespace swcap::kernels::neon
