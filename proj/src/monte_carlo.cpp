#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "mfh/oracles.hpp"

namespace mfh::oracles {

namespace {

// Per-batch sums. obs layout: [0] 2^alpha, [1] sum k^2 alpha_k 2^alpha,
// [2] alpha_1, [3 + k - 1] alpha_k 2^alpha.
struct BatchSums {
    std::vector<double> obs;
    std::int64_t samples = 0;
};

BatchSums run_batch(const McConfig& cfg, int batch, std::int64_t samples) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(batch)};
    std::mt19937_64 rng(seq);
    const int n = cfg.n;
    const double rate = 0.5 * n * (n - 1);
    std::exponential_distribution<double> wait(rate);
    std::uniform_int_distribution<int> pick_i(0, n - 1), pick_j(0, n - 2);

    BatchSums out;
    out.obs.assign(static_cast<std::size_t>(3 + cfg.k_max), 0.0);
    out.samples = samples;
    std::vector<int> perm(static_cast<std::size_t>(n)), inv(perm.size()), counts(perm.size() + 1);
    std::vector<char> seen(perm.size());

    for (std::int64_t s = 0; s < samples; ++s) {
        std::iota(perm.begin(), perm.end(), 0);
        std::iota(inv.begin(), inv.end(), 0);
        for (double clock = wait(rng); clock <= cfg.t; clock += wait(rng)) {
            const int i = pick_i(rng);
            int j = pick_j(rng);
            if (j >= i) ++j;
            // (ij) composed on the left swaps the values i and j.
            const auto pi = static_cast<std::size_t>(inv[static_cast<std::size_t>(i)]);
            const auto pj = static_cast<std::size_t>(inv[static_cast<std::size_t>(j)]);
            perm[pi] = j;
            perm[pj] = i;
            std::swap(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]);
        }
        std::fill(seen.begin(), seen.end(), 0);
        std::fill(counts.begin(), counts.end(), 0);
        int alpha = 0;
        for (std::size_t x0 = 0; x0 < perm.size(); ++x0) {
            if (seen[x0]) continue;
            int len = 0;
            for (std::size_t x = x0; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
                seen[x] = 1;
                ++len;
            }
            ++counts[static_cast<std::size_t>(len)];
            ++alpha;
        }
        const double w = std::ldexp(1.0, alpha);
        double sq = 0.0;
        for (int k = 1; k <= n; ++k) sq += static_cast<double>(k) * k * counts[static_cast<std::size_t>(k)];
        out.obs[0] += w;
        out.obs[1] += sq * w;
        out.obs[2] += counts[1];
        for (int k = 1; k <= cfg.k_max && k <= n; ++k)
            out.obs[static_cast<std::size_t>(2 + k)] += counts[static_cast<std::size_t>(k)] * w;
    }
    return out;
}

McEstimate batch_estimate(const std::vector<double>& batch_values, double overall, std::int64_t samples,
                          std::uint64_t seed) {
    const auto b = static_cast<double>(batch_values.size());
    const double mean = std::accumulate(batch_values.begin(), batch_values.end(), 0.0) / b;
    double ss = 0.0;
    for (double v : batch_values) ss += (v - mean) * (v - mean);
    McEstimate e;
    e.mean = overall;
    e.std_error = std::sqrt(ss / (b - 1.0) / b);
    e.samples = samples;
    e.seed = seed;
    return e;
}

}  // namespace

McReport mc_interchange(const McConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("mc_interchange needs n >= 2");
    if (cfg.n > 60) throw std::invalid_argument("mc_interchange caps n at 60 (2^alpha weight variance)");
    if (!(cfg.t >= 0.0) || !std::isfinite(cfg.t)) throw std::invalid_argument("mc_interchange needs finite t >= 0");
    if (cfg.samples < kMinSamples) throw std::invalid_argument("mc_interchange needs at least 10000 samples");
    if (cfg.batches < kMinBatches) throw std::invalid_argument("mc_interchange needs at least 30 batches");
    if (cfg.k_max < 1 || cfg.k_max > cfg.n) throw std::invalid_argument("mc_interchange needs 1 <= k_max <= n");

    const int nb = cfg.batches;
    std::vector<BatchSums> batches(static_cast<std::size_t>(nb));
    std::vector<std::exception_ptr> errors(batches.size());
    const std::int64_t base = cfg.samples / nb, extra = cfg.samples % nb;
    const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int b = 0; b < nb; ++b) {
        try {
            batches[static_cast<std::size_t>(b)] = run_batch(cfg, b, base + (b < extra ? 1 : 0));
        } catch (...) {
            errors[static_cast<std::size_t>(b)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    // Merge in replica order.
    const std::size_t nobs = batches.front().obs.size();
    std::vector<double> totals(nobs, 0.0);
    for (const auto& bs : batches)
        for (std::size_t o = 0; o < nobs; ++o) totals[o] += bs.obs[o];
    const auto total_n = static_cast<double>(cfg.samples);

    auto per_batch = [&](auto&& fn) {
        std::vector<double> v;
        v.reserve(batches.size());
        for (const auto& bs : batches) v.push_back(fn(bs));
        return v;
    };

    McReport r;
    r.Z = batch_estimate(per_batch([](const BatchSums& bs) { return bs.obs[0] / static_cast<double>(bs.samples); }),
                         totals[0] / total_n, cfg.samples, cfg.seed);
    r.m2 = batch_estimate(per_batch([](const BatchSums& bs) { return bs.obs[1] / bs.obs[0]; }), totals[1] / totals[0],
                          cfg.samples, cfg.seed);
    r.fix = batch_estimate(per_batch([](const BatchSums& bs) { return bs.obs[2] / static_cast<double>(bs.samples); }),
                           totals[2] / total_n, cfg.samples, cfg.seed);
    for (int k = 1; k <= cfg.k_max; ++k) {
        const auto o = static_cast<std::size_t>(2 + k);
        r.weighted.push_back(batch_estimate(
            per_batch([o](const BatchSums& bs) { return bs.obs[o] / static_cast<double>(bs.samples); }),
            totals[o] / total_n, cfg.samples, cfg.seed));
    }
    return r;
}

}  // namespace mfh::oracles
