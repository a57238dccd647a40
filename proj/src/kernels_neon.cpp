// NEON variants for aarch64. NEON is baseline there, so no runtime check.

#include "turan/kernels.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <bit>
#include <cstdint>

namespace turan::kernels {

namespace {

// 2 adjacency bits -> 2 double lane masks.
alignas(16) constexpr std::uint64_t kBitMask[4][2] = {
    {0, 0}, {~0ull, 0}, {0, ~0ull}, {~0ull, ~0ull}};

void masked_matvec64_neon(const std::uint64_t* rows, const double* diag, int n, const double* x, double* y) {
    const int blocks = (n + 1) / 2;
    for (int i = 0; i < n; ++i) {
        std::uint64_t bits = rows[i];
        float64x2_t acc = vdupq_n_f64(0.0);
        for (int b = 0; b < blocks; ++b) {
            const uint64x2_t mask = vld1q_u64(kBitMask[(bits >> (2 * b)) & 3]);
            const float64x2_t xv = vld1q_f64(x + 2 * b);
            acc = vaddq_f64(acc, vreinterpretq_f64_u64(vandq_u64(mask, vreinterpretq_u64_f64(xv))));
        }
        y[i] = vaddvq_f64(acc) + diag[i] * x[i];
    }
}

bool has_common_pair64_neon(const std::uint64_t* rows, int n) {
    for (int u = 0; u < n; ++u) {
        const std::uint64_t ru = rows[u];
        const uint64x2_t ru2 = vdupq_n_u64(ru);
        int v = u + 1;
        for (; v + 2 <= n; v += 2) {
            const uint64x2_t rv = vld1q_u64(rows + v);
            const uint8x16_t cnt8 = vcntq_u8(vreinterpretq_u8_u64(vandq_u64(ru2, rv)));
            const uint64x2_t cnt = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(cnt8)));
            if (vgetq_lane_u64(cnt, 0) >= 2 || vgetq_lane_u64(cnt, 1) >= 2) return true;
        }
        for (; v < n; ++v) {
            if (std::popcount(ru & rows[v]) >= 2) return true;
        }
    }
    return false;
}

constexpr Ops kNeon{"neon", masked_matvec64_neon, has_common_pair64_neon};

}  // namespace

const Ops* neon_ops() { return &kNeon; }

}  // namespace turan::kernels

#endif  // aarch64
