#ifndef IWASTAT_ARITH_HPP
#define IWASTAT_ARITH_HPP

// Base integer / number-theoretic primitives shared by all modules:
// Kronecker symbol, fundamental-discriminant tests and enumeration,
// modular helpers.  Everything here is pure and state-free.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iwastat {

// All discriminant/form arithmetic is done in int64.  Intermediates in form
// composition are bounded by ~|D|^2/2, so |D| <= 2e9 keeps every product
// comfortably inside the signed 128-bit checks used below.
inline constexpr std::int64_t kMaxAbsDiscriminant = 2'000'000'000LL;

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

inline std::int64_t math_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN)
        throw OverflowError("64-bit overflow in multiplication");
    return static_cast<std::int64_t>(p);
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    base = math_mod(base, mod);
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

// Extended gcd: returns g = gcd(a,b) and (x,y) with a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0; y = y0;
    return a;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t x, y;
    std::int64_t g = ext_gcd(math_mod(a, m), m, x, y);
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return math_mod(x, m);
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

inline bool is_squarefree(std::int64_t n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    if (n % 4 == 0) return false;
    for (std::int64_t f = 3; f * f <= n; f += 2) {
        if (n % (f * f) == 0) return false;
        // skip even squares beyond 4: already excluded by the mod-4 test
    }
    return true;
}

inline void require_odd_prime(std::int64_t p, const char* where) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument(std::string(where) + ": p must be an odd prime");
}

} // namespace detail

// Kronecker symbol (a/n), defined for all integer pairs.  Completely
// multiplicative in n, periodic in a with period |a| when a is a
// fundamental discriminant and n > 0.
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int k = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    while (n % 2 == 0) {
        n >>= 1;
        std::int64_t r = detail::math_mod(a, 8);
        if (r == 3 || r == 5) k = -k;
    }
    // n odd and positive: Jacobi symbol, periodic in a mod n.
    a = detail::math_mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a >>= 1;
            std::int64_t r = n & 7;
            if (r == 3 || r == 5) k = -k;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

// True iff d is the discriminant of a quadratic field (either sign).
// d == 0 or 1 is rejected.
inline bool is_fundamental(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    std::int64_t r4 = detail::math_mod(d, 4);
    if (r4 == 1) return detail::is_squarefree(d);
    if (r4 == 0) {
        std::int64_t q = d / 4;
        std::int64_t qr = detail::math_mod(q, 4);
        return (qr == 2 || qr == 3) && detail::is_squarefree(q);
    }
    return false;
}

// A validated negative fundamental discriminant.
class FundamentalDiscriminant {
public:
    explicit FundamentalDiscriminant(std::int64_t value) : value_(value) {
        if (value >= 0)
            throw std::invalid_argument("discriminant must be negative");
        if (-value > kMaxAbsDiscriminant)
            throw OverflowError("|discriminant| exceeds supported range");
        if (!is_fundamental(value))
            throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(value));
    }

    std::int64_t value() const { return value_; }
    std::int64_t abs() const { return -value_; }

    bool operator==(const FundamentalDiscriminant& o) const { return value_ == o.value_; }

private:
    std::int64_t value_;
};

// All fundamental D < 0 with |D| <= x, ascending in |D|.  Batch squarefree
// sieve instead of per-number trial division.
inline std::vector<FundamentalDiscriminant> enumerate_fundamental(double x) {
    if (x < 3) throw std::invalid_argument("enumerate_fundamental: x must be >= 3");
    if (x > static_cast<double>(kMaxAbsDiscriminant))
        throw OverflowError("enumerate_fundamental: x exceeds supported range");
    auto bound = static_cast<std::int64_t>(x);
    std::vector<bool> sqf(bound + 1, true);
    for (std::int64_t d = 2; d * d <= bound; ++d)
        for (std::int64_t m = d * d; m <= bound; m += d * d) sqf[m] = false;
    std::vector<FundamentalDiscriminant> out;
    for (std::int64_t m = 3; m <= bound; ++m) {
        // D = -m fundamental iff m = 3 mod 4 squarefree, or m = 0 mod 4 with
        // m/4 squarefree and m/4 = 1 or 2 mod 4.
        bool ok = false;
        if (m % 4 == 3) ok = sqf[m];
        else if (m % 4 == 0) {
            std::int64_t q = m / 4;
            ok = sqf[q] && (q % 4 == 1 || q % 4 == 2);
        }
        if (ok) out.push_back(FundamentalDiscriminant(-m));
    }
    return out;
}

enum class SplittingType { split, inert, ramified };

inline const char* to_string(SplittingType s) {
    switch (s) {
        case SplittingType::split: return "split";
        case SplittingType::inert: return "inert";
        case SplittingType::ramified: return "ramified";
    }
    return "?";
}

inline SplittingType splitting_type(const FundamentalDiscriminant& delta, std::int64_t p) {
    detail::require_odd_prime(p, "splitting_type");
    int chi = kronecker(delta.value(), p);
    if (chi == 1) return SplittingType::split;
    if (chi == -1) return SplittingType::inert;
    return SplittingType::ramified;
}

} // namespace iwastat

#endif // IWASTAT_ARITH_HPP
