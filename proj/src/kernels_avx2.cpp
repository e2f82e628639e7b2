#include "asai/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <vector>

namespace asai {

namespace {

// Products of residues below 2^26 stay below 2^52, so each 64-bit lane absorbs 2^11 of them.
constexpr int kFlush = 2048;

__attribute__((target("avx2"))) uint64_t drain(__m256i acc, uint64_t total, uint64_t q) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (uint64_t l : lanes) total = (total + l % q) % q;
    return total;
}

__attribute__((target("avx2"))) uint64_t dot_avx2(const uint64_t* a, const uint64_t* b, size_t n, uint64_t q) {
    __m256i acc = _mm256_setzero_si256();
    uint64_t total = 0;
    int pending = 0;
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, _mm256_mul_epu32(x, y));
        if (++pending == kFlush) {
            total = drain(acc, total, q);
            acc = _mm256_setzero_si256();
            pending = 0;
        }
    }
    total = drain(acc, total, q);
    for (; i < n; ++i) total = (total + a[i] * b[i] % q) % q;
    return total;
}

__attribute__((target("avx2"))) void convolve_avx2(const uint64_t* a, const uint64_t* b, uint64_t* c, size_t n,
                                                   uint64_t q) {
    std::vector<uint64_t> rb(n);
    for (size_t j = 0; j < n; ++j) rb[j] = b[n - 1 - j];
    for (size_t k = 0; k < n; ++k) c[k] = dot_avx2(a, rb.data() + (n - 1 - k), k + 1, q);
}

const Kernels kAvx2{KernelKind::Avx2, uint64_t(1) << 26, dot_avx2, convolve_avx2};

}  // namespace

const Kernels* avx2_kernels() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &kAvx2 : nullptr;
}

}  // namespace asai

#else

namespace asai {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace asai

#endif
