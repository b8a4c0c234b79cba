#ifndef IWASTAT_CLASSGROUP_HPP
#define IWASTAT_CLASSGROUP_HPP

// Class groups of imaginary quadratic fields modeled by reduced binary
// quadratic forms (a,b,c), b^2 - 4ac = D < 0, a > 0.  Provides form
// reduction, Gauss composition, two independent class-number routes
// (form enumeration and the Dirichlet character sum), and the
// elementary-divisor structure of the class group.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "iwastat/arith.hpp"

namespace iwastat {

struct QuadraticForm {
    std::int64_t a = 1, b = 0, c = 0;

    bool operator==(const QuadraticForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadraticForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

struct FormHash {
    std::size_t operator()(const QuadraticForm& f) const {
        std::uint64_t h = static_cast<std::uint64_t>(f.a);
        h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(f.b);
        h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(f.c);
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

inline std::int64_t discriminant(const QuadraticForm& f) {
    __int128 d = static_cast<__int128>(f.b) * f.b - static_cast<__int128>(4) * f.a * f.c;
    if (d > INT64_MAX || d < INT64_MIN) throw OverflowError("form discriminant overflow");
    return static_cast<std::int64_t>(d);
}

inline bool is_reduced(const QuadraticForm& f) {
    std::int64_t ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return f.a > 0;
}

inline QuadraticForm principal_form(const FundamentalDiscriminant& delta) {
    std::int64_t d = delta.value();
    if (detail::math_mod(d, 2) == 0) return {1, 0, -d / 4};
    return {1, 1, (1 - d) / 4};
}

// Reduce a positive definite form: normalize b into (-a, a], swap (a,c)
// while a > c, and fix the boundary sign conventions.
inline QuadraticForm reduce(QuadraticForm f) {
    if (f.a <= 0 || discriminant(f) >= 0)
        throw std::invalid_argument("reduce: form must be positive definite");
    std::int64_t d = discriminant(f);
    for (;;) {
        // normalize: b in (-a, a]
        std::int64_t r = detail::math_mod(f.b, 2 * f.a);
        if (r > f.a) r -= 2 * f.a;
        if (r != f.b) {
            f.b = r;
            __int128 cc = (static_cast<__int128>(f.b) * f.b - d) / (4 * f.a);
            if (cc > INT64_MAX) throw OverflowError("reduce: c overflow");
            f.c = static_cast<std::int64_t>(cc);
        }
        if (f.a <= f.c) break;
        f = {f.c, -f.b, f.a};
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

inline QuadraticForm inverse(const QuadraticForm& f) {
    return reduce({f.a, -f.b, f.c});
}

// Gauss/Dirichlet composition (Cohen, Algorithm 5.4.7) followed by reduction.
inline QuadraticForm compose(QuadraticForm f1, QuadraticForm f2, const FundamentalDiscriminant& delta) {
    std::int64_t d = delta.value();
    if (discriminant(f1) != d || discriminant(f2) != d)
        throw std::invalid_argument("compose: discriminant mismatch");
    if (f1.a > f2.a) std::swap(f1, f2);
    std::int64_t s = (f1.b + f2.b) / 2;
    std::int64_t n = f2.b - s;
    std::int64_t y1, dgcd;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        dgcd = f1.a;
    } else {
        std::int64_t u, v;
        dgcd = detail::ext_gcd(f2.a, f1.a, u, v);
        y1 = u;
    }
    std::int64_t x2, y2, d1;
    if (dgcd != 0 && s % dgcd == 0) {
        x2 = 0;
        y2 = -1;
        d1 = dgcd;
    } else {
        std::int64_t u, v;
        d1 = detail::ext_gcd(s, dgcd, u, v);
        x2 = u;
        y2 = -v;
    }
    std::int64_t v1 = f1.a / d1;
    std::int64_t v2 = f2.a / d1;
    __int128 r128 = (static_cast<__int128>(y1) * y2 % v1) * n - static_cast<__int128>(x2) * f2.c;
    std::int64_t r = static_cast<std::int64_t>(((r128 % v1) + v1) % v1);
    std::int64_t a3 = detail::mul_checked(v1, v2);
    std::int64_t b3 = f2.b + detail::mul_checked(2 * v2, r);
    __int128 c128 = (static_cast<__int128>(b3) * b3 - d) / (4 * static_cast<__int128>(a3));
    if (c128 > INT64_MAX) throw OverflowError("compose: c overflow");
    return reduce({a3, b3, static_cast<std::int64_t>(c128)});
}

inline QuadraticForm form_pow(QuadraticForm f, std::uint64_t e, const FundamentalDiscriminant& delta) {
    QuadraticForm acc = principal_form(delta);
    while (e) {
        if (e & 1) acc = compose(acc, f, delta);
        f = compose(f, f, delta);
        e >>= 1;
    }
    return acc;
}

// One reduced form per ideal class; cardinality is h(D).
inline std::vector<QuadraticForm> reduced_forms(const FundamentalDiscriminant& delta) {
    std::int64_t d = delta.value();
    std::int64_t absd = -d;
    std::int64_t amax = detail::isqrt(absd / 3);
    std::int64_t parity = detail::math_mod(d, 2);
    std::vector<QuadraticForm> out;
    for (std::int64_t a = 1; a <= amax; ++a) {
        for (std::int64_t babs = parity; babs <= a; babs += 2) {
            std::int64_t t = babs * babs + absd;
            if (t % (4 * a) != 0) continue;
            std::int64_t c = t / (4 * a);
            if (c < a) continue;
            out.push_back({a, babs, c});
            if (babs != 0 && babs != a && a != c) out.push_back({a, -babs, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Dirichlet class number formula, exact integer arithmetic:
//   h = |sum_{a=1}^{|D|-1} a*chi(a)| / |D|   for D < -4 (unit count 2).
// Independent of the form-enumeration route.
inline std::int64_t class_number_analytic(const FundamentalDiscriminant& delta) {
    std::int64_t d = delta.value();
    if (d == -3 || d == -4) return 1;
    std::int64_t absd = -d;
    std::int64_t sum = 0;
    for (std::int64_t a = 1; a < absd; ++a)
        sum += a * kronecker(d, a);
    if (sum < 0) sum = -sum;
    if (sum % absd != 0)
        throw InvariantViolation("class_number_analytic: non-integral character sum");
    std::int64_t h = sum / absd;
    if (h <= 0) throw InvariantViolation("class_number_analytic: nonpositive class number");
    return h;
}

inline std::int64_t class_number_forms(const FundamentalDiscriminant& delta) {
    return static_cast<std::int64_t>(reduced_forms(delta).size());
}

// h(-m) for every fundamental -m with m <= x, by enumerating all reduced
// forms (a,b,c) with |b^2-4ac| <= x in one pass.  Entries at non-fundamental
// indices count forms of non-fundamental discriminants and must be ignored.
inline std::vector<std::uint16_t> class_numbers_upto(std::int64_t x) {
    if (x < 3 || x > 100'000'000LL)
        throw std::invalid_argument("class_numbers_upto: x out of range");
    std::vector<std::uint16_t> h(x + 1, 0);
    std::int64_t amax = detail::isqrt(x / 3);
    for (std::int64_t a = 1; a <= amax; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t c0 = (b < 0) ? a + 1 : a;
            std::int64_t m = 4 * a * c0 - b * b;
            for (; m <= x; m += 4 * a) {
                if (m > 0) {
                    if (h[m] == UINT16_MAX) throw OverflowError("class_numbers_upto: count overflow");
                    ++h[m];
                }
            }
        }
    }
    return h;
}

// Elementary divisors d_1 | d_2 | ... | d_r of a finite abelian group,
// each >= 2; empty sequence is the trivial group.
class AbelianGroupStructure {
public:
    AbelianGroupStructure() = default;

    explicit AbelianGroupStructure(std::vector<std::int64_t> divisors) : divisors_(std::move(divisors)) {
        for (std::size_t i = 0; i < divisors_.size(); ++i) {
            if (divisors_[i] < 2)
                throw std::invalid_argument("AbelianGroupStructure: divisors must be >= 2");
            if (i + 1 < divisors_.size() && divisors_[i + 1] % divisors_[i] != 0)
                throw std::invalid_argument("AbelianGroupStructure: divisibility chain violated");
        }
    }

    const std::vector<std::int64_t>& divisors() const { return divisors_; }

    std::int64_t order() const {
        std::int64_t o = 1;
        for (std::int64_t d : divisors_) o = detail::mul_checked(o, d);
        return o;
    }

    bool operator==(const AbelianGroupStructure& o) const { return divisors_ == o.divisors_; }

private:
    std::vector<std::int64_t> divisors_;
};

inline int p_rank(const AbelianGroupStructure& g, std::int64_t p) {
    detail::require_odd_prime(p, "p_rank");
    int r = 0;
    for (std::int64_t d : g.divisors())
        if (d % p == 0) ++r;
    return r;
}

// True iff Cl contains (Z/m)^n, i.e. at least n divisors are multiples of m.
inline bool contains_power(const AbelianGroupStructure& g, std::int64_t m, int n) {
    if (m < 2 || n < 1) throw std::invalid_argument("contains_power: need m >= 2, n >= 1");
    int count = 0;
    for (std::int64_t d : g.divisors())
        if (d % m == 0) ++count;
    return count >= n;
}

namespace detail {

// Prime form of norm ell (split or ramified ell), if one exists.
inline std::optional<QuadraticForm> prime_form(const FundamentalDiscriminant& delta, std::int64_t ell) {
    std::int64_t d = delta.value();
    if (ell == 2) {
        // (D/2) by residue of D mod 8: 1 -> split, 0 mod 4 -> check D/4
        std::int64_t r8 = math_mod(d, 8);
        if (r8 == 1) return reduce({2, 1, (1 - d) / 8});
        if (r8 == 0) return reduce({2, 0, -d / 8});
        if (r8 == 4) return reduce({2, 2, (4 - d) / 8});
        return std::nullopt; // inert or non-integral
    }
    int chi = kronecker(d, ell);
    if (chi == -1) return std::nullopt;
    // root of D mod ell by direct scan (ell is small here)
    std::int64_t root = -1;
    std::int64_t target = math_mod(d, ell);
    for (std::int64_t b = 0; b < ell; ++b) {
        if (mulmod(b, b, ell) == target) { root = b; break; }
    }
    if (root < 0) return std::nullopt;
    // fix parity so b^2 = D mod 4*ell
    std::int64_t b = (math_mod(root, 2) == math_mod(d, 2)) ? root : root + ell;
    __int128 c = (static_cast<__int128>(b) * b - d) / (4 * static_cast<__int128>(ell));
    if (c > INT64_MAX) return std::nullopt;
    QuadraticForm f{ell, b, static_cast<std::int64_t>(c)};
    if (discriminant(f) != d) return std::nullopt;
    return reduce(f);
}

// Grow the subgroup spanned by `have` (a full subgroup, as sorted set) by the
// element g: H' = H + gH + ... + g^{k-1}H where k = order of g mod H.
inline void subgroup_extend(std::vector<QuadraticForm>& have,
                            std::unordered_map<QuadraticForm, int, FormHash>& member,
                            const QuadraticForm& g,
                            const FundamentalDiscriminant& delta) {
    if (member.count(g)) return;
    std::vector<QuadraticForm> base = have;
    QuadraticForm gp = g;
    while (!member.count(gp)) {
        for (const auto& x : base) {
            QuadraticForm y = compose(x, gp, delta);
            if (!member.count(y)) {
                member.emplace(y, 1);
                have.push_back(y);
            }
        }
        gp = compose(gp, g, delta);
    }
}

// The q-Sylow subgroup as an explicit sorted element set of size q^e.
// Generators are the m-th powers (m = h / q^e) of the supplied class
// representatives; generation stops as soon as the known size is reached.
inline std::vector<QuadraticForm> sylow_subgroup(const FundamentalDiscriminant& delta,
                                                 std::int64_t h, std::int64_t q, int e,
                                                 const std::vector<QuadraticForm>* all_forms) {
    std::int64_t target = 1;
    for (int i = 0; i < e; ++i) target = mul_checked(target, q);
    std::int64_t m = h / target;
    std::vector<QuadraticForm> have{principal_form(delta)};
    std::unordered_map<QuadraticForm, int, FormHash> member;
    member.emplace(have[0], 1);
    auto feed = [&](const QuadraticForm& f) {
        subgroup_extend(have, member, form_pow(f, static_cast<std::uint64_t>(m), delta), delta);
        return static_cast<std::int64_t>(have.size()) == target;
    };
    if (all_forms) {
        for (const auto& f : *all_forms)
            if (feed(f)) break;
    } else {
        // prime forms generate the class group; scan small norms first
        for (std::int64_t ell = 2; ell < 100000; ell = (ell == 2 ? 3 : ell + 2)) {
            if (!is_prime(ell)) continue;
            auto pf = prime_form(delta, ell);
            if (pf && feed(*pf)) break;
        }
        if (static_cast<std::int64_t>(have.size()) != target) {
            // unconditional fallback: power every reduced form
            auto forms = reduced_forms(delta);
            for (const auto& f : forms)
                if (feed(f)) break;
        }
    }
    if (static_cast<std::int64_t>(have.size()) != target)
        throw InvariantViolation("sylow_subgroup: generated subgroup has wrong order");
    std::sort(have.begin(), have.end());
    return have;
}

// Invariant-factor exponents e1 >= e2 >= ... of an abelian q-group given as
// an explicit element set: repeatedly extract a coset of maximal order in
// G/H and enlarge H by it.
inline std::vector<int> q_group_exponents(std::vector<QuadraticForm> elems, std::int64_t q,
                                          const FundamentalDiscriminant& delta) {
    std::sort(elems.begin(), elems.end());
    const int nelem = static_cast<int>(elems.size());
    std::unordered_map<QuadraticForm, int, FormHash> index;
    for (int i = 0; i < nelem; ++i) index.emplace(elems[i], i);
    const QuadraticForm id = principal_form(delta);
    const int id_idx = index.at(id);

    std::vector<int> h_members{id_idx}; // subgroup H, as element indices
    std::vector<char> in_h(nelem, 0);
    in_h[id_idx] = 1;

    auto compose_idx = [&](int i, int j) { return index.at(compose(elems[i], elems[j], delta)); };
    auto pow_q_idx = [&](int i) { return index.at(form_pow(elems[i], static_cast<std::uint64_t>(q), delta)); };

    std::vector<int> exponents;
    while (static_cast<std::size_t>(nelem) > h_members.size()) {
        // partition into cosets of H; the first index of each coset is its rep
        std::vector<int> coset_of(nelem, -1);
        std::vector<int> reps;
        for (int i = 0; i < nelem; ++i) {
            if (coset_of[i] != -1) continue;
            reps.push_back(i);
            for (int hm : h_members) coset_of[compose_idx(i, hm)] = i;
        }
        // order of each coset in G/H via repeated q-th powers
        int best_rep = -1, best_e = -1;
        for (int r : reps) {
            if (r == coset_of[id_idx]) continue;
            int e = 0, x = r;
            while (coset_of[x] != coset_of[id_idx]) {
                x = pow_q_idx(x);
                ++e;
            }
            if (e > best_e) { best_e = e; best_rep = r; }
        }
        exponents.push_back(best_e);
        // enlarge H by the extracted generator: H' = union of g^t H, t < q^best_e
        std::vector<int> new_members = h_members;
        int g = best_rep;
        std::int64_t reps_needed = 1;
        for (int i = 0; i < best_e; ++i) reps_needed *= q;
        int gt = g;
        for (std::int64_t t = 1; t < reps_needed; ++t) {
            for (int hm : h_members) {
                int y = compose_idx(gt, hm);
                if (!in_h[y]) { in_h[y] = 1; new_members.push_back(y); }
            }
            gt = compose_idx(gt, g);
        }
        h_members = std::move(new_members);
    }
    return exponents; // descending by construction
}

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f) continue;
        int e = 0;
        while (n % f == 0) { n /= f; ++e; }
        out.emplace_back(f, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Assemble elementary divisors from per-prime invariant exponent lists
// (each descending).  Divisor i (from the top) multiplies the i-th largest
// exponent of every prime.
inline AbelianGroupStructure combine_sylow_exponents(
    const std::vector<std::pair<std::int64_t, std::vector<int>>>& per_prime) {
    std::size_t rank = 0;
    for (const auto& [q, exps] : per_prime) rank = std::max(rank, exps.size());
    std::vector<std::int64_t> divisors;
    for (std::size_t i = 0; i < rank; ++i) {
        std::int64_t d = 1;
        for (const auto& [q, exps] : per_prime) {
            if (i < exps.size()) {
                for (int k = 0; k < exps[i]; ++k) d = mul_checked(d, q);
            }
        }
        divisors.push_back(d);
    }
    std::reverse(divisors.begin(), divisors.end()); // ascending chain
    return AbelianGroupStructure(divisors);
}

inline AbelianGroupStructure group_structure_impl(const FundamentalDiscriminant& delta,
                                                  std::int64_t h,
                                                  const std::vector<QuadraticForm>* all_forms) {
    if (h == 1) return AbelianGroupStructure(std::vector<std::int64_t>{});
    std::vector<std::pair<std::int64_t, std::vector<int>>> per_prime;
    for (auto [q, e] : factorize(h)) {
        if (e == 1) {
            per_prime.emplace_back(q, std::vector<int>{1}); // Sylow is Z/q, no group work
        } else {
            auto sylow = sylow_subgroup(delta, h, q, e, all_forms);
            auto exps = q_group_exponents(std::move(sylow), q, delta);
            int sum = std::accumulate(exps.begin(), exps.end(), 0);
            if (sum != e) throw InvariantViolation("group_structure: Sylow exponent sum mismatch");
            per_prime.emplace_back(q, std::move(exps));
        }
    }
    auto g = combine_sylow_exponents(per_prime);
    if (g.order() != h) throw InvariantViolation("group_structure: order mismatch");
    return g;
}

} // namespace detail

// Elementary divisors of Cl(D), via q-Sylow decomposition of the reduced
// form classes.
inline AbelianGroupStructure group_structure(const FundamentalDiscriminant& delta) {
    auto forms = reduced_forms(delta);
    return detail::group_structure_impl(delta, static_cast<std::int64_t>(forms.size()), &forms);
}

// Same result, but takes a precomputed class number and generates the Sylow
// subgroups from prime forms; avoids materializing all h classes in sweeps.
inline AbelianGroupStructure group_structure_with_h(const FundamentalDiscriminant& delta, std::int64_t h) {
    return detail::group_structure_impl(delta, h, nullptr);
}

} // namespace iwastat

#endif // IWASTAT_CLASSGROUP_HPP
