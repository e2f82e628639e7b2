#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

#include "asai/kernels.hpp"

using namespace asai;

namespace {

std::vector<uint64_t> random_residues(std::mt19937_64& rng, size_t n, uint64_t q) {
    std::uniform_int_distribution<uint64_t> d(0, q - 1);
    std::vector<uint64_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

std::vector<const Kernels*> simd_variants() {
    std::vector<const Kernels*> out;
    if (auto* k = avx2_kernels()) out.push_back(k);
    if (auto* k = neon_kernels()) out.push_back(k);
    return out;
}

}  // namespace

TEST_CASE("scalar kernels against schoolbook big-integer sums") {
    std::mt19937_64 rng(11);
    const uint64_t q = (uint64_t(1) << 61) - 1;
    auto a = random_residues(rng, 40, q), b = random_residues(rng, 40, q);
    unsigned __int128 want = 0;
    for (size_t i = 0; i < a.size(); ++i) want = (want + static_cast<unsigned __int128>(a[i]) * b[i] % q) % q;
    CHECK(scalar_kernels().dot(a.data(), b.data(), a.size(), q) == static_cast<uint64_t>(want));

    std::vector<uint64_t> c(a.size());
    scalar_kernels().convolve(a.data(), b.data(), c.data(), a.size(), q);
    unsigned __int128 c7 = 0;
    for (size_t i = 0; i <= 7; ++i) c7 = (c7 + static_cast<unsigned __int128>(a[i]) * b[7 - i] % q) % q;
    CHECK(c[7] == static_cast<uint64_t>(c7));
    CHECK(c[0] == static_cast<uint64_t>(static_cast<unsigned __int128>(a[0]) * b[0] % q));
}

TEST_CASE("simd kernels agree with scalar") {
    std::mt19937_64 rng(7);
    auto variants = simd_variants();
    for (const Kernels* k : variants) {
        INFO("kernel " << kernel_name(k->kind));
        for (uint64_t q : {uint64_t(3), uint64_t(125), uint64_t(15625), uint64_t(1) << 25, (uint64_t(1) << 26) - 5}) {
            for (size_t n : {size_t(0), size_t(1), size_t(3), size_t(4), size_t(5), size_t(17), size_t(64),
                             size_t(301), size_t(9000)}) {
                auto a = random_residues(rng, n, q), b = random_residues(rng, n, q);
                CHECK(k->dot(a.data(), b.data(), n, q) == scalar_kernels().dot(a.data(), b.data(), n, q));
                if (n <= 301) {
                    std::vector<uint64_t> c1(n), c2(n);
                    k->convolve(a.data(), b.data(), c1.data(), n, q);
                    scalar_kernels().convolve(a.data(), b.data(), c2.data(), n, q);
                    CHECK(c1 == c2);
                }
            }
        }
        // all-maximal residues stress the lane flush
        const uint64_t q = (uint64_t(1) << 26) - 1;
        std::vector<uint64_t> big(5000, q - 1);
        CHECK(k->dot(big.data(), big.data(), big.size(), q) ==
              scalar_kernels().dot(big.data(), big.data(), big.size(), q));
    }
}

TEST_CASE("runtime selection") {
    const Kernels& k = active_kernels();
    const char* env = std::getenv("ASAI_KERNEL");
    if (env && std::strcmp(env, "scalar") == 0) CHECK(k.kind == KernelKind::Scalar);
    if (!env && avx2_kernels()) CHECK(k.kind == KernelKind::Avx2);
    // oversized moduli always fall back to the scalar kernel
    CHECK(kernels_for(uint64_t(1) << 40).kind == KernelKind::Scalar);
    CHECK(kernels_for(125).kind == k.kind);
}
