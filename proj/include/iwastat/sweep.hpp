#ifndef IWASTAT_SWEEP_HPP
#define IWASTAT_SWEEP_HPP

// Discriminant sweeps: one record per fundamental |D| <= x with class number,
// elementary divisors, per-prime splitting / p-rank / lambda, plus empirical
// densities against the conjectured values, containment hunts, and CSV/JSON/
// SVG reports.  Checkpointing is append-only JSONL, replayed on resume.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#ifndef _WIN32
#include <unistd.h>
#endif

#include "iwastat/arith.hpp"
#include "iwastat/classgroup.hpp"
#include "iwastat/cldensity.hpp"
#include "iwastat/iwasawa.hpp"

namespace iwastat {

struct IoError : std::runtime_error {
    std::string path;
    IoError(const std::string& what, std::string path_)
        : std::runtime_error(what + ": " + path_), path(std::move(path_)) {}
};

struct PartialDataError : std::runtime_error {
    explicit PartialDataError(const std::string& what) : std::runtime_error(what) {}
};

struct SweepRecord {
    std::int64_t delta = 0;
    std::int64_t h = 0;
    AbelianGroupStructure structure;

    struct PerPrime {
        std::int64_t p = 0;
        SplittingType splitting = SplittingType::inert;
        int r = 0;
        bool has_lambda = false;
        LambdaResult lambda;
    };
    std::vector<PerPrime> per_prime;
};

struct SweepConfig {
    double x = 1000;
    std::vector<std::int64_t> primes{3, 5};
    std::int64_t lambda_ceiling = 2000;
    int workers = 0; // 0 = hardware concurrency
    std::string checkpoint_path;
    int max_level = 6;
};

namespace detail {

inline SweepRecord make_record(const FundamentalDiscriminant& delta, std::int64_t h,
                               const std::vector<std::int64_t>& primes,
                               std::int64_t lambda_ceiling, int max_level) {
    SweepRecord rec;
    rec.delta = delta.value();
    rec.h = h;
    rec.structure = group_structure_with_h(delta, h);
    if (rec.structure.order() != h)
        throw InvariantViolation("sweep: structure order differs from class number");
    for (std::int64_t p : primes) {
        SweepRecord::PerPrime pp;
        pp.p = p;
        pp.splitting = splitting_type(delta, p);
        pp.r = p_rank(rec.structure, p);
        if (delta.abs() <= lambda_ceiling) {
            pp.has_lambda = true;
            if (pp.splitting == SplittingType::ramified) {
                pp.lambda = (h % p != 0) ? LambdaResult{0, 0, true, LambdaMethod::inert_trivial}
                                         : LambdaResult{0, 0, false, LambdaMethod::unsupported};
            } else if (pp.splitting == SplittingType::inert && h % p != 0) {
                pp.lambda = {0, 0, true, LambdaMethod::inert_trivial};
            } else {
                pp.lambda = lambda_invariant(delta, p, max_level);
            }
            // a stable lambda below the p-rank means a genuine bug somewhere
            if (pp.lambda.stable && pp.lambda.method != LambdaMethod::unsupported &&
                pp.lambda.lambda < pp.r)
                throw InvariantViolation("sweep: stable lambda below p-rank at delta " +
                                         std::to_string(rec.delta));
        }
        rec.per_prime.push_back(pp);
    }
    return rec;
}

inline nlohmann::ordered_json record_to_json(const SweepRecord& r) {
    nlohmann::ordered_json j;
    j["delta"] = r.delta;
    j["h"] = r.h;
    j["divisors"] = r.structure.divisors();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& pp : r.per_prime) {
        nlohmann::ordered_json e;
        e["p"] = pp.p;
        e["splitting"] = to_string(pp.splitting);
        e["r"] = pp.r;
        if (pp.has_lambda) {
            e["lambda"] = pp.lambda.lambda;
            e["stable"] = pp.lambda.stable;
            e["method"] = to_string(pp.lambda.method);
            e["level"] = pp.lambda.level_used;
        } else {
            e["lambda"] = nullptr;
        }
        arr.push_back(e);
    }
    j["per_prime"] = arr;
    return j;
}

inline SweepRecord record_from_json(const nlohmann::ordered_json& j) {
    SweepRecord r;
    r.delta = j.at("delta").get<std::int64_t>();
    r.h = j.at("h").get<std::int64_t>();
    r.structure = AbelianGroupStructure(j.at("divisors").get<std::vector<std::int64_t>>());
    for (const auto& e : j.at("per_prime")) {
        SweepRecord::PerPrime pp;
        pp.p = e.at("p").get<std::int64_t>();
        std::string sp = e.at("splitting").get<std::string>();
        pp.splitting = sp == "split" ? SplittingType::split
                      : sp == "inert" ? SplittingType::inert : SplittingType::ramified;
        pp.r = e.at("r").get<int>();
        if (!e.at("lambda").is_null()) {
            pp.has_lambda = true;
            pp.lambda.lambda = e.at("lambda").get<int>();
            pp.lambda.stable = e.at("stable").get<bool>();
            std::string m = e.at("method").get<std::string>();
            pp.lambda.method = m == "stickelberger" ? LambdaMethod::stickelberger
                              : m == "inert_trivial" ? LambdaMethod::inert_trivial
                                                     : LambdaMethod::unsupported;
            pp.lambda.level_used = e.at("level").get<int>();
        }
        r.per_prime.push_back(pp);
    }
    return r;
}

// Replay an existing checkpoint.  A final line that fails to parse in a file
// without a trailing newline is a torn write from a crash: it is dropped and
// the file is truncated back to the valid prefix so later appends stay clean.
// Any other bad line is a hard error reported with its line number.
inline std::vector<SweepRecord> replay_checkpoint(const std::string& path) {
    std::vector<SweepRecord> out;
    std::ifstream in(path, std::ios::binary);
    if (!in) return out;
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    bool ends_with_newline = !content.empty() && content.back() == '\n';
    std::istringstream ss(content);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(ss, line)) lines.push_back(line);
    std::uintmax_t valid_bytes = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        bool is_final = i + 1 == lines.size();
        if (lines[i].empty()) {
            valid_bytes += 1;
            continue;
        }
        try {
            auto j = nlohmann::ordered_json::parse(lines[i]);
            out.push_back(record_from_json(j));
            valid_bytes += lines[i].size() + 1;
        } catch (const std::exception&) {
            if (is_final && !ends_with_newline) {
                std::error_code ec;
                std::filesystem::resize_file(path, valid_bytes, ec);
                if (ec) throw IoError("cannot truncate torn checkpoint line", path);
                break;
            }
            throw IoError("corrupt checkpoint at line " + std::to_string(i + 1), path);
        }
    }
    return out;
}

class CheckpointWriter {
public:
    explicit CheckpointWriter(const std::string& path) : path_(path) {
        if (path.empty()) return;
        f_ = std::fopen(path.c_str(), "ab");
        if (!f_) throw IoError("cannot open checkpoint for append", path);
    }

    ~CheckpointWriter() {
        if (f_) {
            flush_sync();
            std::fclose(f_);
        }
    }

    void append(const SweepRecord& r) {
        if (!f_) return;
        std::string line = record_to_json(r).dump();
        line.push_back('\n');
        if (std::fwrite(line.data(), 1, line.size(), f_) != line.size())
            throw IoError("checkpoint write failed", path_);
        if (++pending_ >= 1000) flush_sync();
    }

    void flush_sync() {
        if (!f_ || pending_ == 0) return;
        std::fflush(f_);
#ifndef _WIN32
        ::fsync(fileno(f_));
#endif
        pending_ = 0;
    }

private:
    std::string path_;
    std::FILE* f_ = nullptr;
    int pending_ = 0;
};

} // namespace detail

// One record per fundamental |D| <= x, ascending, resumable, deterministic
// independent of worker count.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, std::ostream* log = nullptr) {
    if (cfg.x < 3) throw std::invalid_argument("run_sweep: x must be >= 3");
    for (std::int64_t p : cfg.primes) detail::require_odd_prime(p, "run_sweep");

    auto deltas = enumerate_fundamental(cfg.x);
    auto hs = class_numbers_upto(static_cast<std::int64_t>(cfg.x));

    std::vector<SweepRecord> records = cfg.checkpoint_path.empty()
                                           ? std::vector<SweepRecord>{}
                                           : detail::replay_checkpoint(cfg.checkpoint_path);
    // resumed prefix must match this sweep's parameters
    if (records.size() > deltas.size())
        throw IoError("checkpoint longer than sweep range", cfg.checkpoint_path);
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].delta != deltas[i].value())
            throw IoError("checkpoint mismatch at line " + std::to_string(i + 1),
                          cfg.checkpoint_path);
        if (records[i].per_prime.size() != cfg.primes.size())
            throw IoError("checkpoint prime set mismatch at line " + std::to_string(i + 1),
                          cfg.checkpoint_path);
        for (std::size_t k = 0; k < cfg.primes.size(); ++k) {
            if (records[i].per_prime[k].p != cfg.primes[k])
                throw IoError("checkpoint prime set mismatch at line " + std::to_string(i + 1),
                              cfg.checkpoint_path);
            bool want_lambda = -records[i].delta <= cfg.lambda_ceiling;
            if (records[i].per_prime[k].has_lambda != want_lambda)
                throw IoError("checkpoint lambda ceiling mismatch at line " + std::to_string(i + 1),
                              cfg.checkpoint_path);
        }
    }
    std::size_t done = records.size();
    if (log && done > 0) *log << "resumed " << done << " records from checkpoint\n";

    int workers = cfg.workers > 0 ? cfg.workers
                                  : std::max(1u, std::thread::hardware_concurrency());

    // contiguous |D| blocks of 4096 for cache-friendly partitioning
    constexpr std::int64_t kBlock = 4096;
    std::vector<std::pair<std::size_t, std::size_t>> blocks; // [first, last) record index
    {
        std::size_t i = done;
        while (i < deltas.size()) {
            std::int64_t block_id = (deltas[i].abs() - 1) / kBlock;
            std::size_t j = i;
            while (j < deltas.size() && (deltas[j].abs() - 1) / kBlock == block_id) ++j;
            blocks.emplace_back(i, j);
            i = j;
        }
    }

    detail::CheckpointWriter writer(cfg.checkpoint_path);
    auto compute_block = [&](std::size_t b, std::vector<SweepRecord>& out) {
        auto [lo, hi] = blocks[b];
        out.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) {
            std::int64_t h = hs[deltas[i].abs()];
            out.push_back(detail::make_record(deltas[i], h, cfg.primes, cfg.lambda_ceiling,
                                              cfg.max_level));
        }
    };
    auto emit_block = [&](std::size_t b, std::vector<SweepRecord>& out) {
        for (auto& r : out) {
            writer.append(r);
            records.push_back(std::move(r));
        }
        out.clear();
        out.shrink_to_fit();
        if (log && (b % 16 == 15 || b + 1 == blocks.size()))
            *log << "block " << (b + 1) << "/" << blocks.size() << " done, |delta| <= "
                 << -records.back().delta << "\n";
    };

    if (workers == 1 || blocks.size() <= 1) {
        std::vector<SweepRecord> out;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            compute_block(b, out);
            emit_block(b, out);
        }
    } else {
        // workers fill blocks out of order; the main thread appends them to
        // the checkpoint strictly in order as they complete
        std::vector<std::vector<SweepRecord>> block_out(blocks.size());
        std::vector<std::exception_ptr> block_err(blocks.size());
        std::unique_ptr<std::atomic<bool>[]> block_done(new std::atomic<bool>[blocks.size()]);
        for (std::size_t b = 0; b < blocks.size(); ++b) block_done[b].store(false);
        std::atomic<std::size_t> next{0};
        auto worker_fn = [&] {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= blocks.size()) return;
                try {
                    compute_block(b, block_out[b]);
                } catch (...) {
                    block_err[b] = std::current_exception();
                }
                block_done[b].store(true, std::memory_order_release);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min<int>(workers, static_cast<int>(blocks.size())); ++w)
            pool.emplace_back(worker_fn);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            while (!block_done[b].load(std::memory_order_acquire))
                std::this_thread::sleep_for(std::chrono::microseconds(200));
            if (block_err[b]) {
                for (auto& th : pool) th.join();
                std::rethrow_exception(block_err[b]);
            }
            emit_block(b, block_out[b]);
        }
        for (auto& th : pool) th.join();
    }
    writer.flush_sync();
    return records;
}

// ---- families and densities ----------------------------------------------

struct FamilyPredicate {
    enum class Kind { rank_ge, lambda_ge, contains };
    Kind kind = Kind::rank_ge;
    std::int64_t p = 3; // prime, for rank_ge / lambda_ge
    std::int64_t m = 0; // modulus, for contains
    int n = 1;

    std::string name() const {
        switch (kind) {
            case Kind::rank_ge: return "r" + std::to_string(p) + ">=" + std::to_string(n);
            case Kind::lambda_ge: return "lambda" + std::to_string(p) + ">=" + std::to_string(n);
            case Kind::contains:
                return "contains(Z/" + std::to_string(m) + ")^" + std::to_string(n);
        }
        return "?";
    }
};

struct DensityEstimate {
    std::string family;
    double x = 0;
    std::int64_t family_count = 0;
    std::int64_t total_count = 0;
    double empirical = 0;
    bool has_prediction = false;
    DensityValue predicted;
    bool prediction_is_lower_bound = false;
    double abs_error = 0;
    std::int64_t unstable_excluded = 0; // diagnostics: unstable/unsupported lambda
};

inline DensityEstimate empirical_density(const std::vector<SweepRecord>& records,
                                         const FamilyPredicate& pred, double x) {
    DensityEstimate est;
    est.family = pred.name();
    est.x = x;
    for (const auto& rec : records) {
        if (static_cast<double>(-rec.delta) > x) continue;
        ++est.total_count;
        switch (pred.kind) {
            case FamilyPredicate::Kind::rank_ge: {
                const SweepRecord::PerPrime* pp = nullptr;
                for (const auto& e : rec.per_prime)
                    if (e.p == pred.p) pp = &e;
                int r = pp ? pp->r : p_rank(rec.structure, pred.p);
                if (r >= pred.n) ++est.family_count;
                break;
            }
            case FamilyPredicate::Kind::lambda_ge: {
                const SweepRecord::PerPrime* pp = nullptr;
                for (const auto& e : rec.per_prime)
                    if (e.p == pred.p) pp = &e;
                if (!pp || !pp->has_lambda)
                    throw PartialDataError("empirical_density: lambda for p=" +
                                           std::to_string(pred.p) + " not computed up to x=" +
                                           std::to_string(x) + " (raise lambda_ceiling)");
                if (!pp->lambda.stable || pp->lambda.method == LambdaMethod::unsupported)
                    ++est.unstable_excluded;
                else if (pp->lambda.lambda >= pred.n)
                    ++est.family_count;
                break;
            }
            case FamilyPredicate::Kind::contains:
                if (contains_power(rec.structure, pred.m, pred.n)) ++est.family_count;
                break;
        }
    }
    est.empirical = est.total_count ? static_cast<double>(est.family_count) / est.total_count : 0.0;
    if (pred.kind == FamilyPredicate::Kind::rank_ge) {
        est.has_prediction = true;
        est.predicted = density_rank_ge(pred.p, pred.n);
    } else if (pred.kind == FamilyPredicate::Kind::lambda_ge) {
        est.has_prediction = true;
        est.predicted = lambda_lower_bound(pred.p, pred.n);
        est.prediction_is_lower_bound = true;
    }
    if (est.has_prediction) est.abs_error = std::abs(est.empirical - est.predicted.value);
    return est;
}

struct HuntCriterion {
    enum class Kind { rank_ge, contains_power, lambda_ge_all };
    Kind kind = Kind::rank_ge;
    std::int64_t p = 3;         // rank_ge
    std::int64_t m = 0;         // contains_power
    std::vector<std::int64_t> S; // lambda_ge_all
    int n = 1;

    std::string name() const {
        switch (kind) {
            case Kind::rank_ge: return "r" + std::to_string(p) + ">=" + std::to_string(n);
            case Kind::contains_power:
                return "contains(Z/" + std::to_string(m) + ")^" + std::to_string(n);
            case Kind::lambda_ge_all: {
                std::string s = "lambda>=" + std::to_string(n) + " for p in {";
                for (std::size_t i = 0; i < S.size(); ++i)
                    s += (i ? "," : "") + std::to_string(S[i]);
                return s + "}";
            }
        }
        return "?";
    }
};

// All matching discriminants, ascending |D| (smallest first).
inline std::vector<std::int64_t> hunt_examples(const std::vector<SweepRecord>& records,
                                               const HuntCriterion& crit) {
    std::vector<std::int64_t> out;
    for (const auto& rec : records) {
        bool match = false;
        switch (crit.kind) {
            case HuntCriterion::Kind::rank_ge:
                match = p_rank(rec.structure, crit.p) >= crit.n;
                break;
            case HuntCriterion::Kind::contains_power:
                match = contains_power(rec.structure, crit.m, crit.n);
                break;
            case HuntCriterion::Kind::lambda_ge_all: {
                match = true;
                for (std::int64_t p : crit.S) {
                    const SweepRecord::PerPrime* pp = nullptr;
                    for (const auto& e : rec.per_prime)
                        if (e.p == p) pp = &e;
                    if (!pp || !pp->has_lambda)
                        throw PartialDataError("hunt_examples: lambda for p=" + std::to_string(p) +
                                               " missing at delta " + std::to_string(rec.delta));
                    if (!pp->lambda.stable || pp->lambda.method == LambdaMethod::unsupported ||
                        pp->lambda.lambda < crit.n) {
                        match = false;
                        break;
                    }
                }
                break;
            }
        }
        if (match) out.push_back(rec.delta);
    }
    return out;
}

// ---- reports ----------------------------------------------------------------

namespace detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline std::string joined_divisors(const AbelianGroupStructure& g) {
    std::string s;
    for (std::size_t i = 0; i < g.divisors().size(); ++i)
        s += (i ? "," : "") + std::to_string(g.divisors()[i]);
    return s;
}

} // namespace detail

struct ReportOptions {
    bool csv = true;
    bool json = true;
    bool svg = false;
    double x = 0;
    std::vector<std::int64_t> primes;
    std::int64_t lambda_ceiling = 0;
};

// Writes sweep.csv / sweep.json / per-prime SVG histograms into out_dir;
// returns the paths written.  Output is byte-deterministic for fixed inputs.
inline std::vector<std::string> report(const std::vector<SweepRecord>& records,
                                       const std::vector<DensityEstimate>& densities,
                                       const std::string& out_dir, const ReportOptions& opt) {
    namespace fs = std::filesystem;
    std::vector<std::string> written;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create report directory", out_dir);

    if (opt.csv) {
        std::string path = (fs::path(out_dir) / "sweep.csv").string();
        std::ofstream f(path, std::ios::binary);
        if (!f) throw IoError("cannot open report", path);
        f << "delta,h,divisors,p,splitting,r_p,lambda,lambda_stable,method\n";
        for (const auto& rec : records) {
            for (const auto& pp : rec.per_prime) {
                f << rec.delta << ',' << rec.h << ','
                  << detail::csv_quote(detail::joined_divisors(rec.structure)) << ',' << pp.p
                  << ',' << to_string(pp.splitting) << ',' << pp.r << ',';
                if (pp.has_lambda)
                    f << pp.lambda.lambda << ','
                      << (pp.lambda.stable ? "true" : "false") << ','
                      << to_string(pp.lambda.method);
                else
                    f << ",,";
                f << '\n';
            }
        }
        if (!f) throw IoError("report write failed", path);
        written.push_back(path);
    }

    if (opt.json) {
        std::string path = (fs::path(out_dir) / "sweep.json").string();
        nlohmann::ordered_json j;
        j["schema_version"] = "1";
        j["x"] = opt.x;
        j["primes"] = opt.primes;
        j["lambda_ceiling"] = opt.lambda_ceiling;
        auto recs = nlohmann::ordered_json::array();
        for (const auto& r : records) recs.push_back(detail::record_to_json(r));
        j["records"] = recs;
        auto dens = nlohmann::ordered_json::array();
        for (const auto& d : densities) {
            nlohmann::ordered_json e;
            e["family"] = d.family;
            e["x"] = d.x;
            e["count"] = d.family_count;
            e["total"] = d.total_count;
            e["empirical"] = d.empirical;
            if (d.has_prediction) {
                e["predicted"] = d.predicted.value;
                e["predicted_error_bound"] = d.predicted.error_bound;
                e["prediction_is_lower_bound"] = d.prediction_is_lower_bound;
                e["abs_error"] = d.abs_error;
            }
            e["unstable_excluded"] = d.unstable_excluded;
            dens.push_back(e);
        }
        j["densities"] = dens;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw IoError("cannot open report", path);
        f << j.dump(2) << '\n';
        if (!f) throw IoError("report write failed", path);
        written.push_back(path);
    }

    if (opt.svg) {
        for (std::int64_t p : opt.primes) {
            // distribution of r_p, plus stable lambda where present
            std::vector<std::int64_t> rdist, ldist;
            for (const auto& rec : records) {
                for (const auto& pp : rec.per_prime) {
                    if (pp.p != p) continue;
                    if (pp.r >= static_cast<int>(rdist.size())) rdist.resize(pp.r + 1, 0);
                    ++rdist[pp.r];
                    if (pp.has_lambda && pp.lambda.stable) {
                        if (pp.lambda.lambda >= static_cast<int>(ldist.size()))
                            ldist.resize(pp.lambda.lambda + 1, 0);
                        ++ldist[pp.lambda.lambda];
                    }
                }
            }
            std::string path = (fs::path(out_dir) / ("sweep_hist_p" + std::to_string(p) + ".svg")).string();
            std::ofstream f(path, std::ios::binary);
            if (!f) throw IoError("cannot open report", path);
            auto bars = [&](const std::vector<std::int64_t>& dist, int y0, const std::string& label) {
                std::int64_t mx = 1;
                for (auto v : dist) mx = std::max(mx, v);
                f << "<text x=\"10\" y=\"" << (y0 - 8) << "\" font-size=\"12\">" << label
                  << "</text>\n";
                for (std::size_t k = 0; k < dist.size(); ++k) {
                    int hbar = static_cast<int>(120.0 * dist[k] / mx);
                    f << "<rect x=\"" << (20 + 40 * k) << "\" y=\"" << (y0 + 120 - hbar)
                      << "\" width=\"30\" height=\"" << hbar << "\" fill=\"#4477aa\"/>\n";
                    f << "<text x=\"" << (30 + 40 * k) << "\" y=\"" << (y0 + 135)
                      << "\" font-size=\"10\">" << k << "</text>\n";
                    f << "<text x=\"" << (22 + 40 * k) << "\" y=\"" << (y0 + 115 - hbar)
                      << "\" font-size=\"9\">" << dist[k] << "</text>\n";
                }
            };
            f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"340\">\n";
            bars(rdist, 30, "r_" + std::to_string(p) + " distribution");
            bars(ldist, 200, "lambda_" + std::to_string(p) + " distribution (stable)");
            f << "</svg>\n";
            if (!f) throw IoError("report write failed", path);
            written.push_back(path);
        }
    }
    return written;
}

} // namespace iwastat

#endif // IWASTAT_SWEEP_HPP
