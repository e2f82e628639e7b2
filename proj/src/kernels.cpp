#include "asai/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace asai {

namespace {

uint64_t dot_scalar(const uint64_t* a, const uint64_t* b, size_t n, uint64_t q) {
    unsigned __int128 acc = 0;
    for (size_t i = 0; i < n; ++i) acc = (acc + static_cast<unsigned __int128>(a[i]) * b[i]) % q;
    return static_cast<uint64_t>(acc);
}

void convolve_scalar(const uint64_t* a, const uint64_t* b, uint64_t* c, size_t n, uint64_t q) {
    for (size_t k = 0; k < n; ++k) {
        unsigned __int128 acc = 0;
        for (size_t i = 0; i <= k; ++i) acc = (acc + static_cast<unsigned __int128>(a[i]) * b[k - i]) % q;
        c[k] = static_cast<uint64_t>(acc);
    }
}

const Kernels kScalar{KernelKind::Scalar, uint64_t(1) << 63, dot_scalar, convolve_scalar};

}  // namespace

std::string kernel_name(KernelKind k) {
    switch (k) {
        case KernelKind::Scalar: return "scalar";
        case KernelKind::Avx2: return "avx2";
        case KernelKind::Neon: return "neon";
    }
    return "?";
}

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active_kernels() {
    static const Kernels* chosen = [] {
        const char* env = std::getenv("ASAI_KERNEL");
        if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
        if (const Kernels* k = avx2_kernels()) return k;
        if (const Kernels* k = neon_kernels()) return k;
        return &kScalar;
    }();
    return *chosen;
}

const Kernels& kernels_for(uint64_t q) {
    const Kernels& k = active_kernels();
    return q < k.max_modulus ? k : kScalar;
}

}  // namespace asai
