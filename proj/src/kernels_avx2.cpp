// AVX2 variants of the bit-masked kernels. Compiled with -mavx2 on x86-64
// only; callers go through active_ops(), which checks CPU support first.

#include "turan/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstdint>

namespace turan::kernels {

namespace {

// 4 adjacency bits -> 4 double lane masks.
alignas(32) constexpr std::uint64_t kBitMask[16][4] = {
#define ROW(b) {((b) & 1) ? ~0ull : 0ull, ((b) & 2) ? ~0ull : 0ull, ((b) & 4) ? ~0ull : 0ull, ((b) & 8) ? ~0ull : 0ull}
    ROW(0), ROW(1), ROW(2), ROW(3), ROW(4), ROW(5), ROW(6), ROW(7),
    ROW(8), ROW(9), ROW(10), ROW(11), ROW(12), ROW(13), ROW(14), ROW(15),
#undef ROW
};

void masked_matvec64_avx2(const std::uint64_t* rows, const double* diag, int n, const double* x, double* y) {
    const int blocks = (n + 3) / 4;
    for (int i = 0; i < n; ++i) {
        std::uint64_t bits = rows[i];
        __m256d acc = _mm256_setzero_pd();
        for (int b = 0; b < blocks; ++b) {
            const __m256d mask = _mm256_load_pd(reinterpret_cast<const double*>(kBitMask[(bits >> (4 * b)) & 15]));
            acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(x + 4 * b)));
        }
        __m128d lo = _mm256_castpd256_pd128(acc);
        __m128d hi = _mm256_extractf128_pd(acc, 1);
        lo = _mm_add_pd(lo, hi);
        lo = _mm_add_sd(lo, _mm_unpackhi_pd(lo, lo));
        y[i] = _mm_cvtsd_f64(lo) + diag[i] * x[i];
    }
}

// Per-lane popcount of 4x64 via the nibble-table trick.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

bool has_common_pair64_avx2(const std::uint64_t* rows, int n) {
    const __m256i one = _mm256_set1_epi64x(1);
    for (int u = 0; u < n; ++u) {
        const std::uint64_t ru = rows[u];
        const __m256i ru4 = _mm256_set1_epi64x(static_cast<long long>(ru));
        int v = u + 1;
        for (; v + 4 <= n; v += 4) {
            const __m256i rv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + v));
            const __m256i cnt = popcount_epi64(_mm256_and_si256(ru4, rv));
            if (!_mm256_testz_si256(_mm256_cmpgt_epi64(cnt, one), _mm256_set1_epi64x(-1))) return true;
        }
        for (; v < n; ++v) {
            if (std::popcount(ru & rows[v]) >= 2) return true;
        }
    }
    return false;
}

constexpr Ops kAvx2{"avx2", masked_matvec64_avx2, has_common_pair64_avx2};

}  // namespace

const Ops* avx2_ops() {
    static const Ops* ops = __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
    return ops;
}

}  // namespace turan::kernels

#endif  // x86-64
