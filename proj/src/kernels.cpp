#include "turan/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace turan::kernels {

namespace {

void masked_matvec64_scalar(const std::uint64_t* rows, const double* diag, int n, const double* x, double* y) {
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        std::uint64_t bits = rows[i];
        while (bits) {
            acc += x[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        y[i] = acc + diag[i] * x[i];
    }
}

bool has_common_pair64_scalar(const std::uint64_t* rows, int n) {
    for (int u = 0; u < n; ++u) {
        const std::uint64_t ru = rows[u];
        for (int v = u + 1; v < n; ++v) {
            if (std::popcount(ru & rows[v]) >= 2) return true;
        }
    }
    return false;
}

constexpr Ops kScalar{"scalar", masked_matvec64_scalar, has_common_pair64_scalar};

const Ops& pick_active() {
    if (const char* env = std::getenv("TURAN_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return kScalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (const Ops* ops = avx2_ops()) return *ops;
            throw std::runtime_error("TURAN_KERNELS=avx2 but AVX2 is unavailable");
        }
        if (std::strcmp(env, "neon") == 0) {
            if (const Ops* ops = neon_ops()) return *ops;
            throw std::runtime_error("TURAN_KERNELS=neon but NEON is unavailable");
        }
        if (std::strcmp(env, "auto") != 0) throw std::runtime_error("unknown TURAN_KERNELS value");
    }
    if (const Ops* ops = avx2_ops()) return *ops;
    if (const Ops* ops = neon_ops()) return *ops;
    return kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

#if !defined(__x86_64__) && !defined(_M_X64)
const Ops* avx2_ops() { return nullptr; }
#endif
#if !defined(__aarch64__) && !defined(_M_ARM64)
const Ops* neon_ops() { return nullptr; }
#endif

const Ops& active_ops() {
    static const Ops& ops = pick_active();
    return ops;
}

}  // namespace turan::kernels
