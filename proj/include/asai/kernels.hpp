#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace asai {

enum class KernelKind { Scalar, Avx2, Neon };

std::string kernel_name(KernelKind k);

// Residue kernels modulo q; inputs are already reduced below q.
struct Kernels {
    KernelKind kind;
    // Largest modulus the kernel accepts (exclusive).
    uint64_t max_modulus;
    // sum_i a[i] b[i] mod q
    uint64_t (*dot)(const uint64_t* a, const uint64_t* b, size_t n, uint64_t q);
    // c[k] = sum_{i+j=k} a[i] b[j] mod q for k < n
    void (*convolve)(const uint64_t* a, const uint64_t* b, uint64_t* c, size_t n, uint64_t q);
};

const Kernels& scalar_kernels();
// nullptr when the build or the CPU lacks the instruction set.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// Fastest supported kernel set; ASAI_KERNEL=scalar forces the scalar one.
const Kernels& active_kernels();

// active_kernels() when q fits, else scalar_kernels().
const Kernels& kernels_for(uint64_t q);

}  // namespace asai
