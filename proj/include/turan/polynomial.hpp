#pragma once

#include <gmpxx.h>

#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Integer polynomial, coefficients low degree first, no trailing zeros
/// (the zero polynomial has empty coefficients).
struct IntPoly {
    std::vector<mpz_class> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const mpz_class& lead() const { return c.back(); }

    void normalize();
};

IntPoly derivative(const IntPoly& p);
mpq_class eval(const IntPoly& p, const mpq_class& t);

/// Divides out the positive integer content (keeps the sign of the lead).
IntPoly primitive_part(IntPoly p);

/// Exact division; throws std::logic_error if the remainder is nonzero.
IntPoly exact_divide(const IntPoly& p, const IntPoly& d);

/// Primitive gcd with positive leading coefficient (constant 1 for coprime).
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// A real comparison point: `value` itself, or sqrt(value) with value >= 0.
struct RootThreshold {
    mpq_class value;
    bool is_sqrt = false;

    static RootThreshold rational(mpq_class v) { return {std::move(v), false}; }
    static RootThreshold sqrt_of(mpq_class v) { return {std::move(v), true}; }
};

/// Sign of p at the threshold point, computed exactly. For sqrt thresholds
/// p splits into even and odd parts: p(sqrt c) = E(c) + sqrt(c) O(c), and
/// the sign falls out of comparing E(c)^2 with c O(c)^2.
int sign_at(const IntPoly& p, const RootThreshold& t);

/// Sturm chain: p, p', then negated sign-preserving pseudo-remainders.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Number of distinct real roots strictly above the threshold. Roots at
/// the threshold itself are deflated away first; `deflations` (optional)
/// reports how many times the threshold's minimal polynomial divided p.
/// Extra diagnostics land in `variations_*` when non-null.
int count_roots_above(IntPoly p, const RootThreshold& t, int* deflations = nullptr,
                      int* variations_at_threshold = nullptr, int* variations_at_infinity = nullptr);

enum class Rel { less, equal, greater };

/// Compares the largest real root of p against the threshold. p must have
/// at least one real root (always true for characteristic polynomials of
/// symmetric matrices).
Rel compare_largest_root(const IntPoly& p, const RootThreshold& t,
                         int* deflations = nullptr, int* variations_at_threshold = nullptr,
                         int* variations_at_infinity = nullptr);

/// Sign of (largest real root of p) - (largest real root of q), decided
/// exactly: equality via the gcd factor, otherwise rational bisection until
/// a separating point appears.
Rel compare_largest_roots(const IntPoly& p, const IntPoly& q);

/// Largest real root by Sturm-guided bisection, to within `tol`. This is
/// the certified root path used to cross-check the floating solver.
double largest_root(const IntPoly& p, double tol = 1e-12);

/// 1 + max |c_i| / |lead|, an upper bound on root magnitudes.
mpq_class cauchy_bound(const IntPoly& p);

/// Characteristic polynomial det(xI - M) by the Berkowitz recursion:
/// division-free, exact over the integers.
IntPoly charpoly(const std::vector<std::vector<mpz_class>>& m);

IntPoly adjacency_charpoly(const Graph& g);
IntPoly signless_charpoly(const Graph& g);

}  // namespace turan
