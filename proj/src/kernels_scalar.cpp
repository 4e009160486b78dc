#include "swcap/kernels.hpp"

namespace swcap::kernels::scalar {

bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t r;
        ok &= !__builtin_add_overflow(dst[i], src[i], &r);
        dst[i] = r;
    }
    return ok;
}

bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t r;
        ok &= !__builtin_sub_overflow(dst[i], src[i], &r);
        dst[i] = r;
    }
    return ok;
}

void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] < b[i] ? b[i] : a[i];
}

// Exact: accumulates in 128 bits, so the flag only reports a final sum that
// does not fit in 64 bits.
bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += src[i];
    out = static_cast<std::int64_t>(acc);
    return acc == static_cast<__int128>(out);
}

void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2) {
    for (std::size_t x = 0; x < n; ++x) {
        const auto xi = static_cast<std::int64_t>(x);
        out[x] = c0 + c1 * xi + c2 * (xi * (xi - 1) / 2);
    }
}

}  // namespace swcap::kernels::scalar
