#ifndef IWASTAT_RANDMATRIX_HPP
#define IWASTAT_RANDMATRIX_HPP

// Monte Carlo check of the Cohen-Lenstra rank densities via coranks of
// uniform random square matrices over F_p.  The p-rank of the cokernel of a
// p-adic lift equals the corank mod p, so sampling over F_p loses nothing.
//
// Determinism: every matrix entry is a function of (seed, trial index) only.
// Trial t draws its entries from a SplitMix64 stream whose initial state is
// mixed from seed and t, with rejection sampling to remove modulo bias, so
// partitioning trials across workers cannot change the histogram.

#include <cstdint>
#include <thread>
#include <vector>

#include "iwastat/arith.hpp"
#include "iwastat/cldensity.hpp"

namespace iwastat {

struct RankHistogram {
    std::int64_t p = 0;
    int matrix_size = 0;
    std::int64_t trials = 0;
    std::vector<std::int64_t> counts; // counts[k] = #matrices with corank k
    std::uint64_t seed = 0;

    double empirical(int corank) const {
        if (corank < 0 || corank >= static_cast<int>(counts.size())) return 0.0;
        return static_cast<double>(counts[corank]) / static_cast<double>(trials);
    }
};

namespace detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct TrialRng {
    std::uint64_t state;

    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        // decorrelate streams: hash (seed, trial) through one splitmix step
        state = seed ^ (trial * 0xA3EC647659359ACDULL + 0x632BE59BD9B4E019ULL);
        splitmix64_next(state);
    }

    std::uint32_t uniform_mod(std::uint64_t p) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
        for (;;) {
            std::uint64_t v = splitmix64_next(state);
            if (v < limit) return static_cast<std::uint32_t>(v % p);
        }
    }
};

inline int corank_mod_p(std::vector<std::uint32_t>& m, int n, std::int64_t p) {
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r * n + col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int cc = col; cc < n; ++cc) std::swap(m[piv * n + cc], m[rank * n + cc]);
        std::uint64_t inv = static_cast<std::uint64_t>(mod_inverse(m[rank * n + col], p));
        for (int r = rank + 1; r < n; ++r) {
            std::uint64_t f = m[r * n + col];
            if (!f) continue;
            std::uint64_t mult = f * inv % p;
            std::uint64_t neg = p - mult;
            for (int cc = col; cc < n; ++cc) {
                m[r * n + cc] = static_cast<std::uint32_t>(
                    (m[r * n + cc] + neg * m[rank * n + cc]) % p);
            }
        }
        ++rank;
    }
    return n - rank;
}

} // namespace detail

// T pseudo-random N x N matrices over F_p; corank histogram.
inline RankHistogram sample_corank_distribution(std::int64_t p, int n, std::int64_t trials,
                                                std::uint64_t seed, int workers = 0) {
    detail::require_odd_prime(p, "sample_corank_distribution");
    if (p >= 1 << 15) throw std::invalid_argument("sample_corank_distribution: p too large");
    if (n < 1 || trials < 1) throw std::invalid_argument("sample_corank_distribution: need N, T >= 1");
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    auto run_range = [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& counts) {
        std::vector<std::uint32_t> mat(static_cast<std::size_t>(n) * n);
        for (std::int64_t t = lo; t < hi; ++t) {
            detail::TrialRng rng(seed, static_cast<std::uint64_t>(t));
            for (auto& e : mat) e = rng.uniform_mod(static_cast<std::uint64_t>(p));
            ++counts[detail::corank_mod_p(mat, n, p)];
        }
    };

    RankHistogram hist;
    hist.p = p;
    hist.matrix_size = n;
    hist.trials = trials;
    hist.seed = seed;
    hist.counts.assign(n + 1, 0);
    if (workers == 1 || trials < 256) {
        run_range(0, trials, hist.counts);
    } else {
        std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(n + 1, 0));
        std::vector<std::thread> pool;
        std::int64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::int64_t lo = w * chunk, hi = std::min<std::int64_t>(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w] { run_range(lo, hi, partial[w]); });
        }
        for (auto& th : pool) th.join();
        for (const auto& c : partial)
            for (int k = 0; k <= n; ++k) hist.counts[k] += c[k];
    }
    return hist;
}

// Exact corank distribution by enumerating all p^(N^2) matrices.
inline RankHistogram exhaustive_corank_distribution(std::int64_t p, int n) {
    detail::require_odd_prime(p, "exhaustive_corank_distribution");
    if (n < 1) throw std::invalid_argument("exhaustive_corank_distribution: need N >= 1");
    double total = std::pow(static_cast<double>(p), static_cast<double>(n) * n);
    if (total > 2e6) throw std::invalid_argument("exhaustive_corank_distribution: p^(N^2) too large");
    auto count = static_cast<std::int64_t>(total + 0.5);
    RankHistogram hist;
    hist.p = p;
    hist.matrix_size = n;
    hist.trials = count;
    hist.seed = 0;
    hist.counts.assign(n + 1, 0);
    std::vector<std::uint32_t> odo(static_cast<std::size_t>(n) * n, 0), mat(odo.size());
    for (std::int64_t t = 0; t < count; ++t) {
        mat = odo;
        ++hist.counts[detail::corank_mod_p(mat, n, p)];
        for (std::size_t i = 0; i < odo.size(); ++i) {
            if (++odo[i] < static_cast<std::uint32_t>(p)) break;
            odo[i] = 0;
        }
    }
    return hist;
}

// Total-variation distance between the empirical corank distribution and the
// Cohen-Lenstra rank densities {d(F_{p,k})}_k, with the predicted tail beyond
// the matrix size charged in full.
inline double total_variation_to_prediction(const RankHistogram& hist) {
    double tv = 0.0, predicted_mass = 0.0;
    for (int k = 0; k <= hist.matrix_size; ++k) {
        double pred = density_rank_exact(hist.p, k).value;
        predicted_mass += pred;
        tv += std::abs(hist.empirical(k) - pred);
    }
    tv += std::max(0.0, 1.0 - predicted_mass);
    return tv / 2.0;
}

} // namespace iwastat

#endif // IWASTAT_RANDMATRIX_HPP
