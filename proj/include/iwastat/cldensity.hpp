#ifndef IWASTAT_CLDENSITY_HPP
#define IWASTAT_CLDENSITY_HPP

// Cohen-Lenstra density formulas for imaginary quadratic class groups:
// the q-Pochhammer prefactor, rank densities, the lambda lower bound, the
// Durfee-square identity check, and automorphism counts of abelian p-groups.
//
// Fast path: double precision with rigorous truncation bounds carried in
// DensityValue.  Slow path (namespace exact): the same quantities as exact
// rationals at an explicit truncation, for golden tests.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "iwastat/arith.hpp"
#include "iwastat/classgroup.hpp"

namespace iwastat {

// A real in [0,1] plus a rigorous bound on the truncation error.
struct DensityValue {
    double value = 0.0;
    double error_bound = 0.0;
};

namespace detail {

// Tail of prod_{k>N} (1 - p^-k) written as exp(-delta):
//   0 <= delta = sum_{k>N} -log(1-p^-k)
//             <= (1/(1-1/p)) * sum_{k>N} p^-k  = p^{-N+1} / (p-1)^2,
// and |prod_inf - prod_N| <= prod_N * delta <= delta.
inline double pochhammer_tail_bound(std::int64_t p, int N) {
    double b = std::pow(static_cast<double>(p), -(N - 1));
    return b / (static_cast<double>(p - 1) * static_cast<double>(p - 1));
}

inline int pochhammer_terms_for(std::int64_t p, double tol) {
    int N = 1;
    while (pochhammer_tail_bound(p, N) > tol / 2 && N < 4096) ++N;
    return N;
}

} // namespace detail

// prod_{k=1}^inf (1 - p^-k), truncated so the proven tail bound is below tol.
inline DensityValue pochhammer(std::int64_t p, double tol = 1e-13) {
    detail::require_odd_prime(p, "pochhammer");
    int N = detail::pochhammer_terms_for(p, tol);
    double prod = 1.0, pk = 1.0;
    for (int k = 1; k <= N; ++k) {
        pk /= static_cast<double>(p);
        prod *= (1.0 - pk);
    }
    double bound = detail::pochhammer_tail_bound(p, N) + (N + 2) * 1e-16;
    return {prod, bound};
}

// Coefficients c_0..c_N of prod_{i>=1} (1 - q^i) as a power series, by
// truncated polynomial multiplication.  Nonzero entries are +-1 at the
// generalized pentagonal numbers.
inline std::vector<std::int64_t> euler_expansion_coeffs(int N) {
    if (N < 0) throw std::invalid_argument("euler_expansion_coeffs: N must be >= 0");
    std::vector<std::int64_t> c(N + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= N; ++i)
        for (int j = N; j >= i; --j)
            c[j] -= c[j - i];
    return c;
}

inline DensityValue density_rank_ge_1(std::int64_t p) {
    DensityValue poch = pochhammer(p);
    return {1.0 - poch.value, poch.error_bound};
}

// d(F_{p,n}) = p^{-n^2} * prod(1-p^-i) * prod_{k<=n} (1-p^-k)^{-2}.
inline DensityValue density_rank_exact(std::int64_t p, int n) {
    detail::require_odd_prime(p, "density_rank_exact");
    if (n < 0) throw std::invalid_argument("density_rank_exact: n must be >= 0");
    DensityValue poch = pochhammer(p);
    double factor = 1.0, pk = 1.0;
    for (int k = 1; k <= n; ++k) {
        pk /= static_cast<double>(p);
        factor /= (1.0 - pk) * (1.0 - pk);
    }
    double pn2 = std::pow(static_cast<double>(p), -static_cast<double>(n) * n);
    double value = pn2 * poch.value * factor;
    double bound = pn2 * factor * poch.error_bound + (n + 2) * 1e-16;
    return {value, bound};
}

// d(F_{p,>=n}) = 1 - prod(1-p^-i) * (1 + sum_{j<n} p^{-j^2} prod_{k<=j}(1-p^-k)^{-2}).
inline DensityValue density_rank_ge(std::int64_t p, int n) {
    detail::require_odd_prime(p, "density_rank_ge");
    if (n < 1) throw std::invalid_argument("density_rank_ge: n must be >= 1");
    DensityValue poch = pochhammer(p);
    double series = 1.0, factor = 1.0, pk = 1.0;
    for (int j = 1; j <= n - 1; ++j) {
        pk /= static_cast<double>(p);
        factor /= (1.0 - pk) * (1.0 - pk);
        series += std::pow(static_cast<double>(p), -static_cast<double>(j) * j) * factor;
    }
    double value = 1.0 - poch.value * series;
    double bound = series * poch.error_bound + (n + 4) * 1e-16;
    return {value, bound};
}

// Lower-density bound for the family with lambda_p >= n; the bound expression
// coincides with the d(F_{p,>=n}) rank-density value.
inline DensityValue lambda_lower_bound(std::int64_t p, int n) {
    return density_rank_ge(p, n);
}

namespace exact {

using Rat = mpq_class;

inline Rat pochhammer_rat(std::int64_t p, int N) {
    Rat prod = 1;
    Rat q(1, p);
    Rat qk = 1;
    for (int k = 1; k <= N; ++k) {
        qk *= q;
        prod *= (1 - qk);
    }
    prod.canonicalize();
    return prod;
}

inline Rat density_rank_exact_rat(std::int64_t p, int n, int N) {
    Rat poch = pochhammer_rat(p, N);
    Rat q(1, p);
    Rat qk = 1, factor = 1;
    for (int k = 1; k <= n; ++k) {
        qk *= q;
        Rat t = 1 - qk;
        factor /= t * t;
    }
    Rat pn2 = 1;
    for (int i = 0; i < n * n; ++i) pn2 *= q;
    Rat v = pn2 * poch * factor;
    v.canonicalize();
    return v;
}

inline Rat density_rank_ge_rat(std::int64_t p, int n, int N) {
    Rat poch = pochhammer_rat(p, N);
    Rat q(1, p);
    Rat series = 1, factor = 1, qk = 1;
    for (int j = 1; j <= n - 1; ++j) {
        qk *= q;
        Rat t = 1 - qk;
        factor /= t * t;
        Rat pj2 = 1;
        for (int i = 0; i < j * j; ++i) pj2 *= q;
        series += pj2 * factor;
    }
    Rat v = 1 - poch * series;
    v.canonicalize();
    return v;
}

// LHS_N of the Durfee-square identity: 1 + sum_{j<=N} q^{j^2} / prod_{k<=j}(1-q^k)^2.
inline Rat identity31_lhs_rat(const Rat& q, int N) {
    Rat sum = 1, denom = 1, qk = 1;
    for (int j = 1; j <= N; ++j) {
        qk *= q;
        Rat t = 1 - qk;
        denom *= t * t;
        Rat qj2 = 1;
        for (int i = 0; i < j * j; ++i) qj2 *= q;
        sum += qj2 / denom;
    }
    sum.canonicalize();
    return sum;
}

// RHS truncation: prod_{i<=M} (1-q^i)^{-1}.
inline Rat identity31_rhs_rat(const Rat& q, int M) {
    Rat prod = 1, qi = 1;
    for (int i = 1; i <= M; ++i) {
        qi *= q;
        prod /= (1 - qi);
    }
    prod.canonicalize();
    return prod;
}

// Exact residual |LHS_N - RHS_M|; with M far beyond (N+1)^2 the residual
// tracks the LHS truncation tail and is strictly decreasing in N.
inline Rat identity31_residual_rat(const Rat& q, int N, int M) {
    Rat r = identity31_lhs_rat(q, N) - identity31_rhs_rat(q, M);
    if (r < 0) r = -r;
    return r;
}

} // namespace exact

// Residual |LHS_N - RHS| of the Durfee-square identity
//     1 + sum_j q^{j^2}/prod_{k<=j}(1-q^k)^2 = prod_i (1-q^i)^{-1}
// at real 0 < q < 1.  The RHS is
// evaluated to machine precision (truncation at 2(N+1)^2 terms or until the
// factor tail is below 1e-18), so the residual measures the LHS truncation
// and tends to 0 as N grows.
inline double durfee_identity_residual(double q, int N) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("durfee_identity_residual: need 0 < q < 1");
    if (N < 1) throw std::invalid_argument("durfee_identity_residual: N must be >= 1");
    double lhs = 1.0, denom = 1.0, qk = 1.0;
    for (int j = 1; j <= N; ++j) {
        qk *= q;
        denom *= (1.0 - qk) * (1.0 - qk);
        lhs += std::pow(q, static_cast<double>(j) * j) / denom;
    }
    int M = 2 * (N + 1) * (N + 1);
    double rhs = 1.0, qi = 1.0;
    for (int i = 1; i <= M; ++i) {
        qi *= q;
        rhs /= (1.0 - qi);
        if (qi < 1e-18 && i > N) break;
    }
    return std::abs(lhs - rhs);
}

// |Aut(B)| for the abelian p-group B with ascending exponents e_1<=...<=e_n
// (Hillar-Rhea form of Hall's formula):
//   prod_k (p^{d_k} - p^{k-1}) * prod_j p^{e_j (n-d_j)} * prod_i p^{(e_i-1)(n-c_i+1)}
// with d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k}.
inline mpz_class aut_order(std::int64_t p, const AbelianGroupStructure& g) {
    detail::require_odd_prime(p, "aut_order");
    std::vector<int> e;
    for (std::int64_t d : g.divisors()) {
        int k = 0;
        while (d > 1) {
            if (d % p != 0) throw std::invalid_argument("aut_order: group is not a p-group");
            d /= p;
            ++k;
        }
        e.push_back(k);
    }
    const int n = static_cast<int>(e.size());
    if (n == 0) return 1;
    std::vector<int> dmax(n), cmin(n);
    for (int k = 0; k < n; ++k) {
        int lo = k, hi = k;
        while (lo > 0 && e[lo - 1] == e[k]) --lo;
        while (hi + 1 < n && e[hi + 1] == e[k]) ++hi;
        cmin[k] = lo + 1; // 1-indexed
        dmax[k] = hi + 1;
    }
    mpz_class P = p, result = 1;
    auto ppow = [&](long ex) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(ex));
        return r;
    };
    for (int k = 0; k < n; ++k) result *= ppow(dmax[k]) - ppow(k);
    for (int j = 0; j < n; ++j) result *= ppow(static_cast<long>(e[j]) * (n - dmax[j]));
    for (int i = 0; i < n; ++i) result *= ppow(static_cast<long>(e[i] - 1) * (n - cmin[i] + 1));
    return result;
}

// Cohen-Lenstra measure of a p-group B: prod(1-p^-k) / |Aut(B)|.
inline DensityValue cl_measure(std::int64_t p, const AbelianGroupStructure& g) {
    mpz_class aut = aut_order(p, g);
    DensityValue poch = pochhammer(p);
    double a = mpz_get_d(aut.get_mpz_t());
    return {poch.value / a, poch.error_bound / a + 1e-16};
}

} // namespace iwastat

#endif // IWASTAT_CLDENSITY_HPP
