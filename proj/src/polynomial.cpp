#include "turan/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace turan {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (int i = 1; i <= p.degree(); ++i) d.c.push_back(mpz_class(i) * p.c[i]);
    d.normalize();
    return d;
}

mpq_class eval(const IntPoly& p, const mpq_class& t) {
    mpq_class acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + p.c[i];
    return acc;
}

IntPoly primitive_part(IntPoly p) {
    if (p.is_zero()) return p;
    mpz_class g = 0;
    for (const auto& ci : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
    if (g > 1)
        for (auto& ci : p.c) mpz_divexact(ci.get_mpz_t(), ci.get_mpz_t(), g.get_mpz_t());
    return p;
}

IntPoly exact_divide(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::logic_error("division by zero polynomial");
    if (p.is_zero()) return p;
    if (p.degree() < d.degree()) throw std::logic_error("non-exact polynomial division");
    std::vector<mpz_class> rem = p.c;
    const int dq = p.degree() - d.degree();
    std::vector<mpz_class> quot(dq + 1);
    for (int k = dq; k >= 0; --k) {
        mpz_class& top = rem[k + d.degree()];
        if (mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()) == 0)
            throw std::logic_error("non-exact polynomial division");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
        for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= q * d.c[i];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("non-exact polynomial division");
    return IntPoly(std::move(quot));
}

namespace {

// Remainder of a by b scaled by a positive constant: each elimination step
// multiplies by |lead(b)| and subtracts a sign-matched multiple of b, so the
// result's sign pattern equals the rational remainder's.
IntPoly positive_prem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const mpz_class abs_lb = abs(b.lead());
    const int lb_sign = sgn(b.lead());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        const mpz_class top = r.lead() * lb_sign;
        for (auto& ci : r.c) ci *= abs_lb;
        for (int i = 0; i <= b.degree(); ++i) r.c[shift + i] -= top * b.c[i];
        r.normalize();
        r = primitive_part(std::move(r));
    }
    return r;
}

int sign_at_pos_inf(const IntPoly& p) { return p.is_zero() ? 0 : sgn(p.lead()); }

int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Minimal integer polynomial vanishing at the threshold. Perfect-square
// rationals under a sqrt must be normalized away by the caller first.
IntPoly threshold_minpoly(const RootThreshold& t) {
    const mpz_class num = t.value.get_num();
    const mpz_class den = t.value.get_den();
    if (!t.is_sqrt) return IntPoly({-num, den});
    return IntPoly({-num, 0, den});
}

// Rewrites sqrt(r) as a rational when r is a perfect square of a rational.
RootThreshold normalize_threshold(RootThreshold t) {
    if (!t.is_sqrt) return t;
    if (t.value < 0) throw std::invalid_argument("sqrt threshold of a negative value");
    const mpz_class num = t.value.get_num();
    const mpz_class den = t.value.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return RootThreshold::rational(mpq_class(rn) / mpq_class(rd));
    }
    return t;
}

struct SturmChain {
    std::vector<IntPoly> polys;

    explicit SturmChain(const IntPoly& p) {
        if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
        polys.push_back(primitive_part(p));
        IntPoly d = primitive_part(derivative(p));
        if (d.is_zero()) return;
        polys.push_back(std::move(d));
        for (;;) {
            IntPoly r = positive_prem(polys[polys.size() - 2], polys.back());
            if (r.is_zero()) break;
            for (auto& ci : r.c) ci = -ci;
            polys.push_back(std::move(r));
        }
    }

    int variations_at(const RootThreshold& t) const {
        std::vector<int> signs;
        signs.reserve(polys.size());
        for (const auto& q : polys) signs.push_back(sign_at(q, t));
        return variations(signs);
    }

    int variations_at_pos_inf() const {
        std::vector<int> signs;
        signs.reserve(polys.size());
        for (const auto& q : polys) signs.push_back(sign_at_pos_inf(q));
        return variations(signs);
    }

    // Distinct real roots in (t, +inf); requires polys[0](t) != 0.
    int count_above(const RootThreshold& t) const { return variations_at(t) - variations_at_pos_inf(); }
};

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = positive_prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lead() < 0)
        for (auto& ci : a.c) ci = -ci;
    return a;
}

int sign_at(const IntPoly& p, const RootThreshold& t) {
    if (p.is_zero()) return 0;
    if (!t.is_sqrt) return sgn(eval(p, t.value));
    if (t.value < 0) throw std::invalid_argument("sqrt threshold of a negative value");
    // p(x) = E(x^2) + x O(x^2); at sqrt(c) compare E(c) against -sqrt(c) O(c).
    IntPoly even, odd;
    for (int i = 0; i <= p.degree(); ++i) ((i % 2 == 0) ? even : odd).c.push_back(p.c[i]);
    even.normalize();
    odd.normalize();
    const mpq_class e = eval(even, t.value);
    const mpq_class o = eval(odd, t.value);
    const int se = sgn(e);
    const int so = (t.value == 0) ? 0 : sgn(o);
    if (se == 0) return so;
    if (so == 0 || se == so) return se;
    const mpq_class d = e * e - t.value * o * o;
    if (d == 0) return 0;
    return sgn(d) > 0 ? se : so;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) { return SturmChain(p).polys; }

int count_roots_above(IntPoly p, const RootThreshold& t_in, int* deflations,
                      int* variations_at_threshold, int* variations_at_infinity) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    const RootThreshold t = normalize_threshold(t_in);
    int defl = 0;
    while (!p.is_zero() && p.degree() >= 1 && sign_at(p, t) == 0) {
        p = exact_divide(primitive_part(std::move(p)), threshold_minpoly(t));
        ++defl;
    }
    if (deflations) *deflations = defl;
    if (p.degree() < 1) {
        if (variations_at_threshold) *variations_at_threshold = 0;
        if (variations_at_infinity) *variations_at_infinity = 0;
        return 0;
    }
    SturmChain chain(p);
    const int vt = chain.variations_at(t);
    const int vi = chain.variations_at_pos_inf();
    if (variations_at_threshold) *variations_at_threshold = vt;
    if (variations_at_infinity) *variations_at_infinity = vi;
    return vt - vi;
}

Rel compare_largest_root(const IntPoly& p, const RootThreshold& t,
                         int* deflations, int* variations_at_threshold, int* variations_at_infinity) {
    int defl = 0;
    const int above = count_roots_above(p, t, &defl, variations_at_threshold, variations_at_infinity);
    if (deflations) *deflations = defl;
    if (above >= 1) return Rel::greater;
    return defl >= 1 ? Rel::equal : Rel::less;
}

mpq_class cauchy_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) return 1;
    mpq_class best = 0;
    const mpz_class lead = abs(p.lead());
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class v = mpq_class(abs(p.c[i])) / lead;
        if (v > best) best = v;
    }
    return best + 1;
}

namespace {

// A point in (lo, hi) where every chain's lead polynomial is nonzero; tries
// the midpoint first, then other interior fractions (there are more
// candidates than possible roots, so one always works).
mpq_class pick_nonroot_point(const mpq_class& lo, const mpq_class& hi,
                             const std::vector<const SturmChain*>& chains) {
    int total_deg = 0;
    for (const auto* ch : chains) total_deg += ch->polys[0].degree();
    const mpq_class width = hi - lo;
    for (int den = 2; den <= total_deg + 2; ++den) {
        for (int num = 1; num < den; ++num) {
            if (den > 2 && 2 * num == den) continue;  // midpoint already tried
            mpq_class t = lo + width * num / den;
            bool ok = true;
            for (const auto* ch : chains)
                if (sign_at(ch->polys[0], RootThreshold::rational(t)) == 0) {
                    ok = false;
                    break;
                }
            if (ok) return t;
        }
    }
    throw std::logic_error("no root-free interior point found");
}

}  // namespace

Rel compare_largest_roots(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("largest-root comparison of a zero polynomial");
    SturmChain cp(p), cq(q);

    auto count_above = [](const SturmChain& ch, const mpq_class& t) {
        // Deflating copies is cheap at these degrees and keeps endpoints safe.
        return count_roots_above(ch.polys[0], RootThreshold::rational(t));
    };

    const IntPoly g = poly_gcd(p, q);
    if (g.degree() >= 1) {
        SturmChain cg(g);
        const mpq_class bound = cauchy_bound(g);
        if (count_above(cg, -bound) >= 1) {
            // Largest real root of g lies in (a, b]; shrink until p and q
            // each keep at most one distinct root inside.
            mpq_class a = -bound, b = bound;
            while (count_above(cg, a) != 1) {
                const mpq_class mid = pick_nonroot_point(a, b, {&cg});
                (count_above(cg, mid) >= 1 ? a : b) = mid;
            }
            auto in_window = [&](const SturmChain& ch) { return count_above(ch, a) - count_above(ch, b); };
            while (in_window(cp) > 1 || in_window(cq) > 1) {
                const mpq_class mid = pick_nonroot_point(a, b, {&cg, &cp, &cq});
                (count_above(cg, mid) >= 1 ? a : b) = mid;
            }
            if (count_above(cp, b) == 0 && count_above(cq, b) == 0) return Rel::equal;
        }
    }

    // Largest roots differ; bisect until a separating point shows up.
    mpq_class lo = -std::max(cauchy_bound(p), cauchy_bound(q));
    mpq_class hi = -lo;
    for (int iter = 0; iter < 100000; ++iter) {
        const mpq_class mid = pick_nonroot_point(lo, hi, {&cp, &cq});
        const bool ap = count_above(cp, mid) >= 1;
        const bool aq = count_above(cq, mid) >= 1;
        if (ap && !aq) return Rel::greater;
        if (!ap && aq) return Rel::less;
        (ap ? lo : hi) = mid;
    }
    throw std::logic_error("largest-root separation did not terminate");
}

double largest_root(const IntPoly& p, double tol) {
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("largest root of a (near-)constant polynomial");
    SturmChain chain(p);
    mpq_class hi = cauchy_bound(p);
    mpq_class lo = -hi;
    const auto count_above = [&](const mpq_class& t) {
        return count_roots_above(chain.polys[0], RootThreshold::rational(t));
    };
    if (count_above(lo) < 1) throw std::invalid_argument("polynomial has no real root");
    const mpq_class eps(tol);
    while (hi - lo > eps) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        (count_above(mid) >= 1 ? lo : hi) = mid;
    }
    return mpq_class((lo + hi) / 2).get_d();
}

IntPoly charpoly(const std::vector<std::vector<mpz_class>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return IntPoly({1});
    // Berkowitz: extend the charpoly of the leading principal r x r block via
    // a Toeplitz product, division-free throughout.
    std::vector<mpz_class> coeffs{1, -m[0][0]};  // leading coefficient first
    for (int r = 2; r <= n; ++r) {
        std::vector<mpz_class> moments(r);
        moments[0] = m[r - 1][r - 1];
        std::vector<mpz_class> v(r - 1);
        for (int i = 0; i < r - 1; ++i) v[i] = m[i][r - 1];
        for (int j = 1; j < r; ++j) {
            mpz_class acc = 0;
            for (int i = 0; i < r - 1; ++i) acc += m[r - 1][i] * v[i];
            moments[j] = acc;
            if (j + 1 < r) {
                std::vector<mpz_class> nv(r - 1);
                for (int i = 0; i < r - 1; ++i) {
                    mpz_class s = 0;
                    for (int t = 0; t < r - 1; ++t) s += m[i][t] * v[t];
                    nv[i] = std::move(s);
                }
                v = std::move(nv);
            }
        }
        std::vector<mpz_class> col0(r + 1);
        col0[0] = 1;
        for (int j = 0; j < r; ++j) col0[j + 1] = -moments[j];
        std::vector<mpz_class> next(r + 1);
        for (int i = 0; i <= r; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < r && j <= i; ++j) acc += col0[i - j] * coeffs[j];
            next[i] = std::move(acc);
        }
        coeffs = std::move(next);
    }
    std::vector<mpz_class> low_first(coeffs.rbegin(), coeffs.rend());
    return IntPoly(std::move(low_first));
}

IntPoly adjacency_charpoly(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) m[u][v] = 1;
    return charpoly(m);
}

IntPoly signless_charpoly(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (int u = 0; u < n; ++u) {
        m[u][u] = g.degree(u);
        for (int v : g.neighbors(u)) m[u][v] = 1;
    }
    return charpoly(m);
}

}  // namespace turan
