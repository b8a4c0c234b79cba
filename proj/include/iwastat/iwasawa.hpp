#ifndef IWASTAT_IWASAWA_HPP
#define IWASTAT_IWASAWA_HPP

// Iwasawa lambda-invariants of imaginary quadratic fields for odd p not
// dividing the discriminant, read off the mod-p reduction of the twisted
// Stickelberger element expressed in the Gamma-variable T = gamma - 1.
//
// At level n the chi-component of the c-twisted Stickelberger element of
// conductor F = |D| p^{n+1} is
//     P(T) = sum_{a=1, gcd(a, Dp)=1}^{F} chi(a) floor(c a / F) (1+T)^{s_n(a)}
// reduced mod (p, T^{p^n}), where s_n(a) is the discrete logarithm of
// <a> = a/omega(a) with respect to 1+p.  Ferrero-Washington (mu = 0)
// guarantees a least nonzero coefficient; its index, stable across two
// consecutive levels, is lambda.  The twist factor is a unit in Lambda/p
// whenever 1 - c chi(c) is nonzero mod p, so the readout is twist-invariant.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "iwastat/arith.hpp"
#include "iwastat/classgroup.hpp"

namespace iwastat {

// coefficient window for the T-power series (see design notes: lambda
// candidates at or beyond the cap escalate the level, and lambda >= cap is
// reported unstable)
inline constexpr int kSeriesCoeffCap = 64;

inline constexpr std::int64_t kMaxLambdaDiscriminant = 20'000'000LL;

// omega(a) mod p^m: the Teichmuller lift, computed as a^(p^(m-1)) mod p^m.
inline std::int64_t teichmuller(std::int64_t a, std::int64_t p, int m) {
    detail::require_odd_prime(p, "teichmuller");
    if (m < 1) throw std::invalid_argument("teichmuller: precision must be >= 1");
    std::int64_t pm = 1;
    for (int i = 0; i < m; ++i) {
        if (pm > (INT64_MAX >> 2) / p) throw OverflowError("teichmuller: p^m too large");
        pm *= p;
    }
    if (detail::math_mod(a, p) == 0) throw std::invalid_argument("teichmuller: p divides a");
    std::uint64_t e = 1;
    for (int i = 0; i + 1 < m; ++i) e *= static_cast<std::uint64_t>(p);
    return detail::mod_pow(a, e, pm);
}

// The unique s in [0, p^n) with a * omega(a)^-1 = (1+p)^s  (mod p^(n+1)),
// computed digit-by-digit: (1+p)^(d p^j) = 1 + d p^(j+1) mod p^(j+2).
inline std::int64_t one_units_index(std::int64_t a, std::int64_t p, int n) {
    detail::require_odd_prime(p, "one_units_index");
    if (n < 1) throw std::invalid_argument("one_units_index: n must be >= 1");
    std::int64_t M = 1;
    for (int i = 0; i <= n; ++i) {
        if (M > (INT64_MAX >> 2) / p) throw OverflowError("one_units_index: p^(n+1) too large");
        M *= p;
    }
    if (detail::math_mod(a, p) == 0) throw std::invalid_argument("one_units_index: p divides a");
    std::int64_t omega = teichmuller(a, p, n + 1);
    std::int64_t z = detail::mulmod(detail::math_mod(a, M), detail::mod_inverse(omega, M), M);
    std::int64_t ginv = detail::mod_inverse(1 + p, M);
    std::int64_t s = 0, pj = 1, pj1 = p;
    for (int j = 0; j < n; ++j) {
        if ((z - 1) % pj1 != 0) throw InvariantViolation("one_units_index: lifting failed");
        std::int64_t d = detail::math_mod((z - 1) / pj1, p);
        s += d * pj;
        z = detail::mulmod(z, detail::mod_pow(ginv, static_cast<std::uint64_t>(d) * pj, M), M);
        pj *= p;
        if (j + 1 < n) pj1 *= p;
    }
    if (z != 1) throw InvariantViolation("one_units_index: residual not 1");
    return s;
}

struct IwasawaSeriesModP {
    std::int64_t p = 0;
    int level = 0;
    std::int64_t twist = 0;
    std::vector<int> coeffs; // coefficient of T^i, length min(p^level, cap)

    std::optional<int> least_nonzero() const {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) return static_cast<int>(i);
        return std::nullopt;
    }
};

namespace detail {

// C(s, j) mod p by Lucas' theorem; both arguments below p^digits.
struct LucasBinom {
    std::int64_t p;
    std::vector<int> pascal; // p x p table of C(i,j) mod p

    explicit LucasBinom(std::int64_t p_) : p(p_), pascal(p_ * p_, 0) {
        for (std::int64_t i = 0; i < p; ++i) {
            pascal[i * p] = 1;
            for (std::int64_t j = 1; j <= i; ++j)
                pascal[i * p + j] = static_cast<int>(
                    (pascal[(i - 1) * p + j - 1] + pascal[(i - 1) * p + j]) % p);
        }
    }

    int operator()(std::int64_t s, std::int64_t j) const {
        std::int64_t r = 1;
        while (j > 0 || s > 0) {
            std::int64_t sd = s % p, jd = j % p;
            if (jd > sd) return 0;
            r = r * pascal[sd * p + jd] % p;
            s /= p;
            j /= p;
        }
        return static_cast<int>(r);
    }
};

inline bool valid_twist(std::int64_t delta_value, std::int64_t p, std::int64_t c) {
    if (c < 2 || c > 1'000'000) return false; // keeps the floor(c*a/F) sums in range
    if (detail::math_mod(c, p) == 0) return false;
    std::int64_t absd = -delta_value;
    if (std::gcd(c, absd) != 1) return false;
    int chic = kronecker(delta_value, c);
    return detail::math_mod(c * chic - 1, p) != 0; // 1 - c chi(c) must be a unit
}

inline std::int64_t choose_twist(std::int64_t delta_value, std::int64_t p) {
    for (std::int64_t c = 2; c < 2 * p + 64; ++c)
        if (valid_twist(delta_value, p, c)) return c;
    throw InvariantViolation("choose_twist: no valid twist found");
}

} // namespace detail

// The level-n twisted Stickelberger series mod (p, T^(p^n)), truncated at the
// coefficient cap.
inline IwasawaSeriesModP stickelberger_series(const FundamentalDiscriminant& delta, std::int64_t p,
                                              int n, std::int64_t c) {
    detail::require_odd_prime(p, "stickelberger_series");
    if (n < 1) throw std::invalid_argument("stickelberger_series: level must be >= 1");
    std::int64_t D = delta.abs();
    if (D % p == 0) throw std::invalid_argument("stickelberger_series: p ramified (p | D) unsupported");
    if (D > kMaxLambdaDiscriminant)
        throw OverflowError("stickelberger_series: |D| beyond lambda computation range");
    if (!detail::valid_twist(delta.value(), p, c))
        throw std::invalid_argument("stickelberger_series: invalid twist c");

    std::int64_t P = 1; // p^(n+1)
    for (int i = 0; i <= n; ++i) {
        if (P > 200'000'000LL / p) throw OverflowError("stickelberger_series: p^(n+1) too large");
        P *= p;
    }
    std::int64_t pn = P / p; // p^n
    std::int64_t F = detail::mul_checked(D, P);
    if (F > 20'000'000'000LL) throw OverflowError("stickelberger_series: summation range too large");

    std::vector<signed char> chi(D);
    for (std::int64_t r = 0; r < D; ++r) chi[r] = static_cast<signed char>(kronecker(delta.value(), r));

    std::vector<std::int32_t> s_tab(P, -1);
    for (std::int64_t v = 1; v < P; ++v)
        if (v % p != 0) s_tab[v] = static_cast<std::int32_t>(one_units_index(v, p, n));

    std::vector<std::int64_t> acc(pn, 0);
    std::int64_t rD = 0, rP = 0;
    std::int64_t cur = 0, q = 0, thr = F;
    for (std::int64_t a = 1; a < F; ++a) {
        if (++rD == D) rD = 0;
        if (++rP == P) rP = 0;
        cur += c;
        while (cur >= thr) { ++q; thr += F; }
        int ch = chi[rD];
        if (ch == 0) continue;
        std::int32_t s = s_tab[rP];
        if (s < 0) continue;
        acc[s] += ch > 0 ? q : -q;
    }

    // collapse to coefficients of (1+T)^s mod (p, T^cap): binomials depend
    // only on s mod p^k0 where p^k0 >= cap
    int cap = static_cast<int>(std::min<std::int64_t>(pn, kSeriesCoeffCap));
    std::int64_t M0 = 1;
    while (M0 < cap) M0 *= p;
    std::vector<std::int64_t> acc2(M0, 0);
    for (std::int64_t s = 0; s < pn; ++s) acc2[s % M0] += acc[s];
    detail::LucasBinom binom(p);
    IwasawaSeriesModP out;
    out.p = p;
    out.level = n;
    out.twist = c;
    out.coeffs.assign(cap, 0);
    for (int j = 0; j < cap; ++j) {
        std::int64_t v = 0;
        for (std::int64_t t = 0; t < M0; ++t) {
            std::int64_t a2 = detail::math_mod(acc2[t], p);
            if (a2) v += a2 * binom(t, j);
        }
        out.coeffs[j] = static_cast<int>(detail::math_mod(v, p));
    }
    return out;
}

enum class LambdaMethod { stickelberger, inert_trivial, unsupported };

inline const char* to_string(LambdaMethod m) {
    switch (m) {
        case LambdaMethod::stickelberger: return "stickelberger";
        case LambdaMethod::inert_trivial: return "inert_trivial";
        case LambdaMethod::unsupported: return "unsupported";
    }
    return "?";
}

struct LambdaResult {
    int lambda = 0;
    int level_used = 0;
    bool stable = false;
    LambdaMethod method = LambdaMethod::unsupported;
};

// lambda_p(K).  Ramified or inert p with p not dividing h gives 0 by the
// triviality proposition; ramified p dividing h is unsupported; everything
// else is read off the Stickelberger series at two consecutive levels.
inline LambdaResult lambda_invariant(const FundamentalDiscriminant& delta, std::int64_t p,
                                     int max_level = 6, std::int64_t twist = 0) {
    detail::require_odd_prime(p, "lambda_invariant");
    int chip = kronecker(delta.value(), p);
    if (chip == 0) {
        std::int64_t h = class_number_forms(delta);
        if (h % p != 0) return {0, 0, true, LambdaMethod::inert_trivial};
        return {0, 0, false, LambdaMethod::unsupported};
    }
    if (chip == -1) {
        std::int64_t h = class_number_forms(delta);
        if (h % p != 0) return {0, 0, true, LambdaMethod::inert_trivial};
    }
    std::int64_t c = twist ? twist : detail::choose_twist(delta.value(), p);
    if (twist && !detail::valid_twist(delta.value(), p, twist))
        throw std::invalid_argument("lambda_invariant: invalid twist");
    if (max_level < 3) max_level = 3;

    std::optional<IwasawaSeriesModP> prev;
    int last_readout = -1;
    for (int n = 2; n + 1 <= max_level; ++n) {
        if (!prev) prev = stickelberger_series(delta, p, n, c);
        IwasawaSeriesModP next = stickelberger_series(delta, p, n + 1, c);
        auto r1 = prev->least_nonzero();
        auto r2 = next.least_nonzero();
        std::int64_t margin = 1;
        for (int i = 0; i < n - 1; ++i) margin *= p;
        if (margin > kSeriesCoeffCap) margin = kSeriesCoeffCap;
        if (r1 && r2 && *r1 == *r2 && *r1 < margin) {
            return {*r1, n, true, LambdaMethod::stickelberger};
        }
        if (r2) last_readout = *r2;
        prev = std::move(next);
    }
    return {last_readout >= 0 ? last_readout : kSeriesCoeffCap, max_level, false,
            LambdaMethod::stickelberger};
}

namespace detail {

// Cornacchia: a primitive solution of x^2 + d y^2 = M given r^2 = -d (mod M).
inline std::optional<std::pair<mpz_class, mpz_class>> cornacchia(const mpz_class& M,
                                                                 const mpz_class& d,
                                                                 const mpz_class& r) {
    mpz_class L;
    mpz_sqrt(L.get_mpz_t(), M.get_mpz_t());
    for (int which = 0; which < 2; ++which) {
        mpz_class a = M, b = which == 0 ? r : M - r;
        if (b < 0 || b >= M) b = ((b % M) + M) % M;
        while (b > L) {
            mpz_class t = a % b;
            a = b;
            b = t;
        }
        if (b == 0) continue;
        mpz_class t = M - b * b;
        if (t <= 0 || t % d != 0) continue;
        mpz_class s = t / d;
        if (mpz_perfect_square_p(s.get_mpz_t())) {
            mpz_class y;
            mpz_sqrt(y.get_mpz_t(), s.get_mpz_t());
            return std::make_pair(b, y);
        }
    }
    return std::nullopt;
}

// Square root of a mod p^k (p odd, a a unit square mod p) by Hensel lifting.
inline mpz_class sqrt_mod_p_power(const mpz_class& a, std::int64_t p, int k) {
    std::int64_t r0 = -1;
    mpz_class amodp = ((a % p) + p) % p;
    for (std::int64_t x = 0; x < p; ++x)
        if ((x * x) % p == amodp.get_si()) { r0 = x; break; }
    if (r0 < 0) throw std::invalid_argument("sqrt_mod_p_power: not a quadratic residue");
    mpz_class pk = p, r = r0;
    int prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        mpz_class pnew;
        mpz_pow_ui(pnew.get_mpz_t(), mpz_class(p).get_mpz_t(), prec);
        mpz_class inv2r;
        mpz_class two_r = 2 * r;
        if (mpz_invert(inv2r.get_mpz_t(), two_r.get_mpz_t(), pnew.get_mpz_t()) == 0)
            throw InvariantViolation("sqrt_mod_p_power: lift not invertible");
        r = (r - (r * r - a) * inv2r) % pnew;
        if (r < 0) r += pnew;
        pk = pnew;
    }
    return r;
}

} // namespace detail

// Gold's criterion for split p with p coprime to h: with (alpha) = pi^h for a
// prime pi above p, tests alpha^(p-1) = 1 (mod conj(pi)^2), i.e. whether the
// image of alpha in the completion at the conjugate prime is a (p-1)-st
// power residue mod p^2.  True means lambda_p >= 2, false means lambda_p = 1.
// The generator is found by solving x^2 + |D| y^2 = 4 p^h with Cornacchia's
// algorithm; the unit-direction embedding is the one not divisible by p.
inline bool gold_criterion(const FundamentalDiscriminant& delta, std::int64_t p) {
    detail::require_odd_prime(p, "gold_criterion");
    if (p > 1'000'000) throw std::invalid_argument("gold_criterion: p too large");
    if (splitting_type(delta, p) != SplittingType::split)
        throw std::invalid_argument("gold_criterion: p must split");
    std::int64_t h = class_number_forms(delta);
    if (h % p == 0) throw std::invalid_argument("gold_criterion: requires p coprime to h");

    const std::int64_t D = delta.value();
    const std::int64_t absD = -D;
    mpz_class m;
    mpz_pow_ui(m.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(h));

    // alpha = (x + y sqrt(D))/2, x^2 + |D| y^2 = 4 p^h, with p coprime to (x,y)
    mpz_class x, y;
    bool found = false;
    auto accept = [&](const mpz_class& xx, const mpz_class& yy) {
        if (yy == 0) return false;
        if (xx % p == 0 && yy % p == 0) return false;
        if (xx * xx + absD * yy * yy != 4 * m) return false;
        x = xx;
        y = yy;
        return true;
    };
    if (detail::math_mod(D, 4) == 0) {
        // alpha = X + Y sqrt(D/4) integral: X^2 + (|D|/4) Y^2 = p^h
        mpz_class r = detail::sqrt_mod_p_power(mpz_class(D / 4), p, h);
        auto sol = detail::cornacchia(m, mpz_class(absD / 4), r);
        if (sol) found = accept(2 * sol->first, sol->second);
    } else {
        mpz_class rp = detail::sqrt_mod_p_power(mpz_class(D), p, h);
        // integral alpha: X^2 + |D| Y^2 = p^h
        auto solB = detail::cornacchia(m, mpz_class(absD), rp);
        if (solB) found = accept(2 * solB->first, 2 * solB->second);
        if (!found) {
            // half-integral alpha: odd solution of x^2 + |D| y^2 = 4 p^h;
            // the four square roots of D mod 4 p^h are the odd lifts of +-rp
            mpz_class M4 = 4 * m;
            for (int sgn = 0; sgn < 2 && !found; ++sgn) {
                mpz_class base = sgn == 0 ? rp : m - rp;
                for (int lift = 0; lift < 4 && !found; ++lift) {
                    mpz_class cand = base + lift * m;
                    if (cand % 2 == 0) continue;
                    auto solA = detail::cornacchia(M4, mpz_class(absD), cand % M4);
                    if (solA) found = accept(solA->first, solA->second);
                }
            }
        }
    }
    if (!found) throw InvariantViolation("gold_criterion: norm equation not solved");

    mpz_class p2 = mpz_class(p) * p;
    mpz_class u = (detail::math_mod(D, 4) == 0)
                      ? mpz_class(2 * detail::sqrt_mod_p_power(mpz_class(D / 4), p, 2))
                      : detail::sqrt_mod_p_power(mpz_class(D), p, 2);
    mpz_class inv2;
    mpz_class two = 2;
    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p2.get_mpz_t());
    auto embed = [&](int sign) {
        mpz_class v = ((x + sign * y * u) * inv2) % p2;
        if (v < 0) v += p2;
        return v;
    };
    mpz_class v1 = embed(+1), v2 = embed(-1);
    mpz_class w = (v1 % p != 0) ? v1 : v2;
    if (w % p == 0) throw InvariantViolation("gold_criterion: no unit embedding");
    mpz_class res;
    mpz_powm_ui(res.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(p - 1), p2.get_mpz_t());
    return res == 1;
}

// ---- Lambda-module normal forms ------------------------------------------

// A distinguished polynomial: monic with all non-leading coefficients
// divisible by p, held at finite p-adic precision.
struct DistinguishedPoly {
    std::vector<std::int64_t> coeffs; // ascending degree; back() is the leading 1
    int precision = 1;                // coefficients known mod p^precision
};

struct LambdaNormalForm {
    std::int64_t p = 3;
    std::vector<int> mu_exponents;                             // mu_i >= 1
    std::vector<std::pair<DistinguishedPoly, int>> torsion_factors; // (f_i, multiplicity)
};

struct NormalFormInvariants {
    int mu = 0;
    int lambda = 0;
    int g = 0; // dim X / MX
};

// (mu, lambda, g) of a Lambda-module in normal form: mu = sum mu_i,
// lambda = sum lambda_i deg(f_i), and each cyclic summand contributes 1 to g.
inline NormalFormInvariants normal_form_invariants(const LambdaNormalForm& x) {
    detail::require_odd_prime(x.p, "normal_form_invariants");
    NormalFormInvariants out;
    for (int mu : x.mu_exponents) {
        if (mu < 1) throw std::invalid_argument("normal_form_invariants: mu exponents must be >= 1");
        out.mu += mu;
        out.g += 1;
    }
    for (const auto& [f, mult] : x.torsion_factors) {
        if (mult < 1) throw std::invalid_argument("normal_form_invariants: multiplicity must be >= 1");
        if (f.precision < 1) throw std::invalid_argument("normal_form_invariants: bad precision");
        if (f.coeffs.size() < 2 || f.coeffs.back() != 1)
            throw std::invalid_argument("normal_form_invariants: polynomial must be monic of degree >= 1");
        for (std::size_t i = 0; i + 1 < f.coeffs.size(); ++i)
            if (detail::math_mod(f.coeffs[i], x.p) != 0)
                throw std::invalid_argument(
                    "normal_form_invariants: non-leading coefficients must be divisible by p");
        out.lambda += mult * static_cast<int>(f.coeffs.size() - 1);
        out.g += 1;
    }
    return out;
}

} // namespace iwastat

#endif // IWASTAT_IWASAWA_HPP
