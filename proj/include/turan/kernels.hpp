#pragma once

#include <cstdint>

namespace turan::kernels {

/// Inner loops shared by the spectral solver and the C4 scan, for graphs
/// whose adjacency rows fit one 64-bit word (n <= 64). Each entry has a
/// scalar reference implementation and, where the hardware supports it, a
/// SIMD variant selected once at startup. Variants are interchangeable:
/// the popcount kernel is bit-exact and the matvec kernels agree up to
/// summation-order rounding.
struct Ops {
    const char* name;

    /// y[i] = diag[i] * x[i] + sum of x[j] over set bits j of rows[i].
    /// x must stay readable through index pad4(n) - 1 (lane padding);
    /// y gets exactly n entries written.
    void (*masked_matvec64)(const std::uint64_t* rows, const double* diag, int n, const double* x, double* y);

    /// True iff some pair u < v has popcount(rows[u] & rows[v]) >= 2,
    /// i.e. two vertices share two common neighbors.
    bool (*has_common_pair64)(const std::uint64_t* rows, int n);
};

constexpr int pad4(int n) { return (n + 3) & ~3; }

const Ops& scalar_ops();

/// Null when the binary or the machine lacks the instruction set.
const Ops* avx2_ops();
const Ops* neon_ops();

/// Best supported variant; override with TURAN_KERNELS=scalar|avx2|neon.
const Ops& active_ops();

}  // namespace turan::kernels
