#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "iwastat/classgroup.hpp"

using namespace iwastat;

namespace {

AbelianGroupStructure G(std::vector<std::int64_t> v) { return AbelianGroupStructure(std::move(v)); }

// #solutions of x^k = id in +Z/d_i is prod gcd(k, d_i); the full k -> count
// map determines a finite abelian group, so this is a complete independent
// oracle for group_structure.
std::int64_t expected_k_torsion(const AbelianGroupStructure& g, std::int64_t k) {
    std::int64_t n = 1;
    for (std::int64_t d : g.divisors()) n *= std::gcd(k, d);
    return n;
}

std::int64_t census_k_torsion(const FundamentalDiscriminant& d, const std::vector<QuadraticForm>& forms,
                              std::int64_t k) {
    std::int64_t n = 0;
    QuadraticForm id = principal_form(d);
    for (const auto& f : forms)
        if (form_pow(f, static_cast<std::uint64_t>(k), d) == id) ++n;
    return n;
}

} // namespace

TEST_CASE("reduced_forms spec examples") {
    auto f3 = reduced_forms(FundamentalDiscriminant(-3));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == QuadraticForm{1, 1, 1});

    auto f4 = reduced_forms(FundamentalDiscriminant(-4));
    REQUIRE(f4.size() == 1);
    CHECK(f4[0] == QuadraticForm{1, 0, 1});

    auto f23 = reduced_forms(FundamentalDiscriminant(-23));
    REQUIRE(f23.size() == 3);
    std::set<QuadraticForm> s(f23.begin(), f23.end());
    CHECK(s.count({1, 1, 6}));
    CHECK(s.count({2, 1, 3}));
    CHECK(s.count({2, -1, 3}));
}

TEST_CASE("every enumerated form is reduced with the right discriminant") {
    for (std::int64_t dv : {-3LL, -4LL, -20LL, -23LL, -47LL, -71LL, -95LL, -2047LL}) {
        FundamentalDiscriminant d(dv);
        for (const auto& f : reduced_forms(d)) {
            CHECK(is_reduced(f));
            CHECK(discriminant(f) == dv);
        }
    }
}

TEST_CASE("class_number_analytic spec examples") {
    CHECK(class_number_analytic(FundamentalDiscriminant(-23)) == 3);
    CHECK(class_number_analytic(FundamentalDiscriminant(-47)) == 5);
    CHECK(class_number_analytic(FundamentalDiscriminant(-3)) == 1);
    CHECK(class_number_analytic(FundamentalDiscriminant(-4)) == 1);
}

TEST_CASE("dual class-number oracle up to 2000") {
    for (const auto& d : enumerate_fundamental(2000))
        CHECK(class_number_forms(d) == class_number_analytic(d));
}

TEST_CASE("batch form-count sieve agrees with both per-field routes up to 2000") {
    auto hs = class_numbers_upto(2000);
    for (const auto& d : enumerate_fundamental(2000)) {
        CHECK(hs[d.abs()] == class_number_forms(d));
        CHECK(hs[d.abs()] == class_number_analytic(d));
    }
}

TEST_CASE("compose spec examples in D=-23") {
    FundamentalDiscriminant d(-23);
    QuadraticForm e{1, 1, 6}, g{2, 1, 3}, gi{2, -1, 3};
    CHECK(compose(e, g, d) == g);
    CHECK(compose(g, gi, d) == e);
    CHECK(compose(g, g, d) == gi);
}

TEST_CASE("compose rejects mismatched discriminants") {
    FundamentalDiscriminant d(-23);
    CHECK_THROWS_AS(compose({1, 1, 6}, {1, 0, 1}, d), std::invalid_argument);
}

TEST_CASE("group axioms hold exhaustively on small class groups") {
    // h up to 30 per the module property; these cover h = 3, 5, 7, 8, ...
    for (std::int64_t dv : {-23LL, -47LL, -71LL, -95LL, -1991LL}) {
        FundamentalDiscriminant d(dv);
        auto forms = reduced_forms(d);
        QuadraticForm id = principal_form(d);
        // identity and inverses
        for (const auto& f : forms) {
            CHECK(compose(id, f, d) == f);
            CHECK(compose(f, inverse(f), d) == id);
        }
        // commutativity and associativity
        for (const auto& f : forms)
            for (const auto& g : forms) {
                CHECK(compose(f, g, d) == compose(g, f, d));
                for (const auto& k : forms)
                    CHECK(compose(compose(f, g, d), k, d) == compose(f, compose(g, k, d), d));
            }
        // closure
        for (const auto& f : forms)
            for (const auto& g : forms) {
                auto fg = compose(f, g, d);
                CHECK(std::binary_search(forms.begin(), forms.end(), fg));
            }
    }
}

TEST_CASE("group_structure frozen examples") {
    CHECK(group_structure(FundamentalDiscriminant(-3)).divisors().empty());
    CHECK(group_structure(FundamentalDiscriminant(-23)).divisors() == std::vector<std::int64_t>{3});
    // h(-3299) = 27 with order-9 elements: Z/3 + Z/9 (order census in the
    // torsion test below); 3-rank 2
    CHECK(group_structure(FundamentalDiscriminant(-3299)).divisors() ==
          std::vector<std::int64_t>{3, 9});
    // elementary 3-part of shape [3,3]
    CHECK(group_structure(FundamentalDiscriminant(-4027)).divisors() ==
          std::vector<std::int64_t>{3, 3});
    CHECK(group_structure(FundamentalDiscriminant(-3896)).divisors() ==
          std::vector<std::int64_t>{3, 12});
}

TEST_CASE("group_structure order equals class number, both paths agree (|D| <= 600)") {
    auto hs = class_numbers_upto(600);
    for (const auto& d : enumerate_fundamental(600)) {
        auto g = group_structure(d);
        CHECK(g.order() == hs[d.abs()]);
        CHECK(group_structure_with_h(d, hs[d.abs()]) == g);
    }
}

TEST_CASE("k-torsion census matches the claimed structure (|D| <= 400)") {
    for (const auto& d : enumerate_fundamental(400)) {
        auto forms = reduced_forms(d);
        auto g = group_structure(d);
        std::int64_t h = static_cast<std::int64_t>(forms.size());
        for (std::int64_t k = 1; k <= h; ++k) {
            if (h % k != 0) continue;
            CHECK(census_k_torsion(d, forms, k) == expected_k_torsion(g, k));
        }
    }
}

TEST_CASE("k-torsion census for the larger frozen structures") {
    for (std::int64_t dv : {-3299LL, -4027LL, -3896LL}) {
        FundamentalDiscriminant d(dv);
        auto forms = reduced_forms(d);
        auto g = group_structure(d);
        for (std::int64_t k : {2LL, 3LL, 4LL, 6LL, 9LL, 12LL})
            CHECK(census_k_torsion(d, forms, k) == expected_k_torsion(g, k));
    }
}

TEST_CASE("p_rank spec examples") {
    CHECK(p_rank(G({3}), 3) == 1);
    CHECK(p_rank(G({2, 6}), 3) == 1);
    CHECK(p_rank(G({3, 3, 3}), 3) == 3);
    CHECK(p_rank(G({}), 3) == 0);
}

TEST_CASE("contains_power spec examples and prime equivalence") {
    CHECK_FALSE(contains_power(G({3}), 3, 2));
    CHECK(contains_power(G({15, 15}), 15, 2));
    CHECK_FALSE(contains_power(G({3, 15}), 15, 2));
    // contains (Z/p)^n iff p_rank >= n, for prime p
    std::vector<AbelianGroupStructure> samples{
        G({}),
        G({3}),
        G({2, 6}),
        G({3, 9}),
        G({5, 15, 15}),
    };
    for (const auto& g : samples)
        for (std::int64_t p : {3LL, 5LL})
            for (int n = 1; n <= 4; ++n)
                CHECK(contains_power(g, p, n) == (p_rank(g, p) >= n));
}

TEST_CASE("AbelianGroupStructure validation") {
    CHECK_THROWS_AS(G({1}), std::invalid_argument);
    CHECK_THROWS_AS(G({3, 5}), std::invalid_argument); // not a chain
    CHECK(G({2, 4, 12}).order() == 96);
}

TEST_CASE("overflow guard on oversized discriminants") {
    CHECK_THROWS_AS(FundamentalDiscriminant(-4'000'000'003LL), OverflowError);
}
