#include <doctest.h>

#include <numeric>

#include "iwastat/randmatrix.hpp"

using namespace iwastat;

TEST_CASE("exhaustive 1x1 over F_3: singular iff the entry is 0") {
    auto h = exhaustive_corank_distribution(3, 1);
    CHECK(h.trials == 3);
    CHECK(h.counts[0] == 2);
    CHECK(h.counts[1] == 1);
}

TEST_CASE("exhaustive 2x2 distributions match the GL2 counts") {
    auto h3 = exhaustive_corank_distribution(3, 2);
    CHECK(h3.trials == 81);
    CHECK(h3.counts[0] == 48); // |GL_2(F_3)|
    CHECK(h3.counts[1] == 32);
    CHECK(h3.counts[2] == 1);

    auto h5 = exhaustive_corank_distribution(5, 2);
    CHECK(h5.trials == 625);
    CHECK(h5.counts[0] == 480); // (25-1)(25-5)
    CHECK(h5.counts[1] == 144);
    CHECK(h5.counts[2] == 1);
}

TEST_CASE("histogram counts sum to trials and coranks stay in range") {
    auto h = sample_corank_distribution(3, 10, 5000, 7, 1);
    CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::int64_t{0}) == 5000);
    CHECK(h.counts.size() == 11);
}

TEST_CASE("reproducibility: same seed, any worker count") {
    auto a = sample_corank_distribution(3, 12, 4000, 99, 1);
    auto b = sample_corank_distribution(3, 12, 4000, 99, 4);
    auto c = sample_corank_distribution(3, 12, 4000, 99, 3);
    CHECK(a.counts == b.counts);
    CHECK(a.counts == c.counts);
    // and a different seed genuinely changes the data
    auto d = sample_corank_distribution(3, 12, 4000, 100, 1);
    CHECK(a.counts != d.counts);
}

TEST_CASE("empirical corank-0 frequency approaches the CL density") {
    auto h = sample_corank_distribution(3, 40, 20000, 12345, 0);
    CHECK(std::abs(h.empirical(0) - 0.5601260779) < 0.02); // ~5.7 sigma at T=2e4
    CHECK(std::abs(h.empirical(1) - 0.4200945584) < 0.02);
}

TEST_CASE("total variation shrinks from N=4 to N=40 at equal trials") {
    auto small = sample_corank_distribution(3, 4, 20000, 2024, 0);
    auto large = sample_corank_distribution(3, 40, 20000, 2024, 0);
    CHECK(total_variation_to_prediction(large) < total_variation_to_prediction(small));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(sample_corank_distribution(4, 2, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_corank_distribution(3, 0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_corank_distribution(3, 5), std::invalid_argument);
}
