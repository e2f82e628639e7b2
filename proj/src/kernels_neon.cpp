#include "asai/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <vector>

namespace asai {

namespace {

constexpr int kFlush = 2048;

uint64_t dot_neon(const uint64_t* a, const uint64_t* b, size_t n, uint64_t q) {
    uint64x2_t acc = vdupq_n_u64(0);
    uint64_t total = 0;
    int pending = 0;
    auto flush = [&] {
        total = (total + vgetq_lane_u64(acc, 0) % q) % q;
        total = (total + vgetq_lane_u64(acc, 1) % q) % q;
        acc = vdupq_n_u64(0);
        pending = 0;
    };
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint32x2_t x = vmovn_u64(vld1q_u64(a + i));
        uint32x2_t y = vmovn_u64(vld1q_u64(b + i));
        acc = vmlal_u32(acc, x, y);
        if (++pending == kFlush) flush();
    }
    flush();
    for (; i < n; ++i) total = (total + a[i] * b[i] % q) % q;
    return total;
}

void convolve_neon(const uint64_t* a, const uint64_t* b, uint64_t* c, size_t n, uint64_t q) {
    std::vector<uint64_t> rb(n);
    for (size_t j = 0; j < n; ++j) rb[j] = b[n - 1 - j];
    for (size_t k = 0; k < n; ++k) c[k] = dot_neon(a, rb.data() + (n - 1 - k), k + 1, q);
}

const Kernels kNeon{KernelKind::Neon, uint64_t(1) << 26, dot_neon, convolve_neon};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

}  // namespace asai

#else

namespace asai {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace asai

#endif
