#pragma once
// Data-parallel integer kernels used by the series and lattice code.
//
// Every kernel has a scalar reference implementation. Vector variants
// (AVX2 on x86-64, NEON on AArch64) are selected once at runtime and must
// produce bit-identical results; tests/test_kernels.cpp checks this.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace swcap::kernels {

enum class Backend { Scalar, Avx2, Neon };

/// Backend used by the dispatching entry points below.
Backend active_backend();
std::string_view backend_name(Backend b);
/// Best backend the running CPU supports.
Backend detect_backend();
/// Force a backend (tests); falls back to Scalar if unsupported.
void set_backend(Backend b);
bool backend_supported(Backend b);

// dst[i] += src[i]. Returns false if any lane overflowed (dst then holds
// wrapped values and must be discarded).
bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
// dst[i] -= src[i], same overflow contract.
bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
// dst[i] = max(a[i], b[i]). dst may alias a or b.
void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n);
// Sum of src[0..n). Returns false on overflow.
bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out);
// out[x] = c0 + c1*x + c2*x*(x-1)/2 for x in [0, n). Inputs are kept small
// enough by callers that no lane overflows.
void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2);

namespace scalar {
bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n);
bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out);
void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n);
bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out);
void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
bool add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
bool sub_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n);
void max_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n);
bool sum_i64(const std::int64_t* src, std::size_t n, std::int64_t& out);
void quadratic_row(std::int64_t* out, std::size_t n, std::int64_t c0, std::int64_t c1, std::int64_t c2);
}  // namespace neon
#endif

}  // namespace swcap::kernels
