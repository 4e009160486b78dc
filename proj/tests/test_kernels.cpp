#include <doctest.h>

#include <limits>
#include <random>
#include <vector>

#include "swcap/kernels.hpp"

using namespace swcap::kernels;

namespace {

struct Impl {
    const char* name;
    bool (*add)(std::int64_t*, const std::int64_t*, std::size_t);
    bool (*sub)(std::int64_t*, const std::int64_t*, std::size_t);
    void (*max)(std::int64_t*, const std::int64_t*, const std::int64_t*, std::size_t);
    bool (*sum)(const std::int64_t*, std::size_t, std::int64_t&);
    void (*quad)(std::int64_t*, std::size_t, std::int64_t, std::int64_t, std::int64_t);
};

std::vector<Impl> vector_impls() {
    std::vector<Impl> out;
#if defined(__x86_64__) || defined(_M_X64)
    if (backend_supported(Backend::Avx2))
        out.push_back({"avx2", avx2::add_i64, avx2::sub_i64, avx2::max_i64, avx2::sum_i64, avx2::quadratic_row});
#endif
#if defined(__aarch64__)
    if (backend_supported(Backend::Neon))
        out.push_back({"neon", neon::add_i64, neon::sub_i64, neon::max_i64, neon::sum_i64, neon::quadratic_row});
#endif
    return out;
}

std::vector<std::int64_t> random_vec(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
    std::uniform_int_distribution<std::int64_t> d(-range, range);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_SUITE("kernels") {
TEST_CASE("scalar reference values") {
    std::vector<std::int64_t> a{1, 2, 3}, b{10, -20, 30};
    CHECK(scalar::add_i64(a.data(), b.data(), 3));
    CHECK(a == std::vector<std::int64_t>{11, -18, 33});
    std::int64_t s = 0;
    CHECK(scalar::sum_i64(a.data(), 3, s));
    CHECK(s == 26);
    std::vector<std::int64_t> q(5);
    scalar::quadratic_row(q.data(), 5, 7, -3, 4);
    CHECK(q == std::vector<std::int64_t>{7, 4, 5, 10, 19});
    std::int64_t big = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> o{big}, one{1};
    CHECK_FALSE(scalar::add_i64(o.data(), one.data(), 1));
}

TEST_CASE("vector backends match the scalar reference") {
    std::mt19937_64 rng(11);
    for (const auto& impl : vector_impls()) {
        CAPTURE(impl.name);
        for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 17u, 64u, 1001u}) {
            for (std::int64_t range : {std::int64_t{100}, std::int64_t{1} << 40, std::numeric_limits<std::int64_t>::max()}) {
                auto a = random_vec(rng, n, range), b = random_vec(rng, n, range);
                auto x = a, y = a;
                bool rx = scalar::add_i64(x.data(), b.data(), n), ry = impl.add(y.data(), b.data(), n);
                CHECK(rx == ry);
                if (rx) CHECK(x == y);
                x = a, y = a;
                rx = scalar::sub_i64(x.data(), b.data(), n), ry = impl.sub(y.data(), b.data(), n);
                CHECK(rx == ry);
                if (rx) CHECK(x == y);
                std::vector<std::int64_t> mx(n), my(n);
                scalar::max_i64(mx.data(), a.data(), b.data(), n);
                impl.max(my.data(), a.data(), b.data(), n);
                CHECK(mx == my);
                std::int64_t sx = 0, sy = 0;
                rx = scalar::sum_i64(a.data(), n, sx), ry = impl.sum(a.data(), n, sy);
                CHECK(rx == ry);
                if (rx) CHECK(sx == sy);
            }
            auto c = random_vec(rng, 3, 1000);
            std::vector<std::int64_t> qx(n), qy(n);
            scalar::quadratic_row(qx.data(), n, c[0], c[1], c[2]);
            impl.quad(qy.data(), n, c[0], c[1], c[2]);
            CHECK(qx == qy);
        }
    }
}

TEST_CASE("max aliasing and dispatch") {
    std::vector<std::int64_t> a{5, -1, 9, 2, 0}, b{1, 4, 9, -7, 3};
    for (auto be : {Backend::Scalar, detect_backend()}) {
        set_backend(be);
        auto x = a;
        max_i64(x.data(), x.data(), b.data(), x.size());
        CHECK(x == std::vector<std::int64_t>{5, 4, 9, 2, 3});
    }
    set_backend(detect_backend());
    CHECK(active_backend() == detect_backend());
}
}
