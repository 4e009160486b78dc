#include "swcap/kernels.hpp"

#include <atomic>

namespace swcap::kernels {

namespace {

struct Table {
    bool (*add)(std::int64_t*, const std::int64_t*, std::size_t);
    bool (*sub)(std::int64_t*, const std::int64_t*, std::size_t);
    void (*max)(std::int64_t*, const std::int64_t*, const std::int64_t*, std::size_t);
    bool (*sum)(const std::int64_t*, std::size_t, std::int64_t&);
    void (*quad)(std::int64_t*, std::size_t, std::int64_t, std::int64_t, std::int64_t);
};

constexpr Table kScalar{scalar::add_i64, scalar::sub_i64, scalar::max_i64, scalar::sum_i64, scalar::quadratic_row};
#if defined(SWCAP_HAVE_AVX2)
constexpr Table kAvx2{avx2::add_i64, avx2::sub_i64, avx2::max_i64, avx2::sum_i64, avx2::quadratic_row};
#endif
#if defined(SWCAP_HAVE_NEON)
constexpr Table kNeon{neon::add_i64, neon::sub_i64, neon::max_i64, neon::sum_i64, neon::quadratic_row};
#endif

const Table* table_for(Backend b) {
    switch (b) {
#if defined(SWCAP_HAVE_AVX2)
        case Backend::Avx2: return &kAvx2;
#endif
#if defined(SWCAP_HAVE_NEON)
        case Backend::Neon: return &kNeon;
#endif
        default: return &kScalar;
    }
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect_backend()};
    return b;
}

const Table& active() { return *table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(SWCAP_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(SWCAP_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend detect_backend() {
    if (backend_supported(Backend::Avx2)) return Backend::Avx2;
    if (backend_supported(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) { current().store(backend_supported(b) ? b : Backend::Scalar); }

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) { return active().add(dst, src, n); }
bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) { return active().sub(dst, src, n); }
void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n) { active().max(dst, a, b, n); }
bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out) { return active().sum(src, n, out); }
void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2) {
    active().quad(out, n, c0, c1, c2);
}

}  // namespace swcap::kernels
