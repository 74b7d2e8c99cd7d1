#include "lamstat/generators.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "lamstat/error.hpp"

namespace lamstat {

namespace {

// substream keys: process tag in the high bits, then group size, then trial
std::uint64_t stream_key(std::uint64_t tag, std::uint64_t n, std::uint64_t trial) {
    return (tag << 56) ^ (n << 40) ^ trial;
}

bool is_perfect_square(std::size_t k) {
    auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(k))));
    while (r * r > k) --r;
    while ((r + 1) * (r + 1) <= k) ++r;
    return r * r == k;
}

} // namespace

SequencePrefix gen_bit_average(const std::vector<int>& bits) {
    if (bits.empty()) {
        throw Error(ErrorCode::EmptySequence, "bit input must be non-empty");
    }
    std::vector<double> averages(bits.size());
    long long sum = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) {
            throw Error(ErrorCode::NonBitValue,
                        "value at index " + std::to_string(i + 1) + " is not a bit", i + 1);
        }
        sum += bits[i];
        averages[i] = static_cast<double>(sum) / static_cast<double>(i + 1);
    }
    return SequencePrefix::from(std::move(averages));
}

SequencePrefix gen_interleave(const SequencePrefix& x, double anchor) {
    std::vector<double> out;
    out.reserve(2 * x.size());
    for (std::size_t k = 1; k <= x.size(); ++k) {
        out.push_back(x.value(k));
        out.push_back(anchor);
    }
    return SequencePrefix::from(std::move(out));
}

EmbeddingResult gen_pair_embedding(const PairList& pairs) {
    if (pairs.pairs.empty()) {
        throw Error(ErrorCode::EmptySequence, "pair list must be non-empty");
    }
    std::vector<double> seq;
    std::vector<std::size_t> anchors;
    anchors.reserve(pairs.pairs.size());

    for (std::size_t j = 0; j < pairs.pairs.size(); ++j) {
        const auto [xi, eta] = pairs.pairs[j];
        if (!std::isfinite(xi) || !std::isfinite(eta)) {
            throw Error(ErrorCode::NonFiniteValue, "pair " + std::to_string(j + 1) + " not finite",
                        j + 1);
        }
        if (j == 0) {
            seq.push_back(xi);
        } else {
            // bridge from eta_j to xi_{j+1} (1-based) in ceil(gap*(j+1)) equal
            // steps, each of magnitude at most 1/(j+1)
            const double prev = seq.back();
            const double mult = static_cast<double>(j + 1);
            const double gap = std::abs(xi - prev);
            const auto steps = static_cast<std::size_t>(std::ceil(gap * mult));
            for (std::size_t t = 1; t < steps; ++t) {
                seq.push_back(prev + (xi - prev) * (static_cast<double>(t) /
                                                    static_cast<double>(steps)));
            }
            seq.push_back(xi); // pair values land verbatim, never recomputed
        }
        seq.push_back(eta);
        anchors.push_back(seq.size());
    }
    return EmbeddingResult{SequencePrefix::from(std::move(seq)), std::move(anchors)};
}

SequencePrefix gen_sqrt(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptySequence, "length must be positive");
    std::vector<double> out(n);
    for (std::size_t k = 1; k <= n; ++k) out[k - 1] = std::sqrt(static_cast<double>(k));
    return SequencePrefix::from(std::move(out));
}

SequencePrefix gen_jump_at_squares(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptySequence, "length must be positive");
    std::vector<double> out(n);
    out[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        out[k] = out[k - 1] + (is_perfect_square(k) ? 1.0 : 0.0);
    }
    return SequencePrefix::from(std::move(out));
}

std::vector<int> gen_random_bits(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::EmptySequence, "length must be positive");
    SplitMix64 rng = SplitMix64::substream(seed, stream_key(3, 0, 0));
    std::vector<int> bits(n);
    for (auto& b : bits) b = static_cast<int>(rng.next_below(2));
    return bits;
}

namespace {

// One elimination round for a group of m >= 2 members: everyone picks one of
// the other m-1; the picked set is removed. Returns the survivor count.
std::size_t survivor_round(std::size_t m, SplitMix64& rng) {
    if (m <= 64) {
        std::uint64_t picked = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t c = rng.next_below(m - 1);
            const std::uint64_t target = (c >= i) ? c + 1 : c;
            picked |= (1ull << target);
        }
        return m - static_cast<std::size_t>(std::popcount(picked));
    }
    std::vector<unsigned char> picked(m, 0);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t c = rng.next_below(m - 1);
        const std::uint64_t target = (c >= i) ? c + 1 : c;
        if (!picked[target]) {
            picked[target] = 1;
            ++distinct;
        }
    }
    return m - distinct;
}

} // namespace

SimulationResult simulate_survivor(std::size_t n_max, std::uint64_t trials, std::uint64_t seed) {
    if (n_max < 2) throw Error(ErrorCode::BadConfig, "n_max must be at least 2");
    if (trials < 1) throw Error(ErrorCode::BadConfig, "trials must be at least 1");

    SimulationResult result;
    result.trials = trials;
    result.seed = seed;
    result.mode = SimMode::MonteCarlo;

    for (std::size_t n = 2; n <= n_max; ++n) {
        std::uint64_t wins = 0;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            SplitMix64 rng = SplitMix64::substream(seed, stream_key(1, n, trial));
            std::size_t m = n;
            while (m >= 2) m = survivor_round(m, rng);
            wins += (m == 1);
        }
        const double p = static_cast<double>(wins) / static_cast<double>(trials);
        // plug-in Bernoulli standard error, so stderr <= 0.5/sqrt(trials)
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
        result.n_values.push_back(n);
        result.estimates.push_back(p);
        result.stderrs.push_back(se);
    }
    return result;
}

namespace {

constexpr std::size_t kHardEnumerationCap = 9; // (m-1)^m profiles; 8^9 is the practical edge

// Survivor-count distribution for one round of a group of size m, by full
// enumeration of the (m-1)^m selection profiles.
std::vector<std::uint64_t> survivor_distribution(std::size_t m) {
    std::vector<std::uint64_t> counts(m + 1, 0);
    std::vector<std::size_t> choice(m, 0); // each in [0, m-2]
    const std::size_t base = m - 1;
    for (;;) {
        std::uint64_t picked = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t c = choice[i];
            const std::size_t target = (c >= i) ? c + 1 : c;
            picked |= (1ull << target);
        }
        counts[m - static_cast<std::size_t>(std::popcount(picked))]++;
        // odometer
        std::size_t pos = 0;
        while (pos < m && ++choice[pos] == base) {
            choice[pos] = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    return counts;
}

} // namespace

double exact_survivor(std::size_t n, std::size_t n_cap) {
    if (n_cap > kHardEnumerationCap) {
        throw Error(ErrorCode::BadConfig,
                    "enumeration cap above " + std::to_string(kHardEnumerationCap) +
                        " is not tractable");
    }
    if (n > n_cap) {
        throw Error(ErrorCode::CapExceeded,
                    "exact oracle capped at n = " + std::to_string(n_cap), n);
    }
    if (n == 0) return 0.0;
    if (n == 1) return 1.0;

    std::vector<double> p(n + 1, 0.0);
    p[0] = 0.0;
    p[1] = 1.0;
    for (std::size_t m = 2; m <= n; ++m) {
        const std::vector<std::uint64_t> counts = survivor_distribution(m);
        double total = 0.0;
        double acc = 0.0;
        for (std::size_t s = 0; s < counts.size(); ++s) {
            total += static_cast<double>(counts[s]);
            if (s < m) acc += static_cast<double>(counts[s]) * p[s];
        }
        p[m] = acc / total;
    }
    return p[n];
}

SimulationResult exact_survivor_sweep(std::size_t n_max, std::size_t n_cap) {
    if (n_max < 2) throw Error(ErrorCode::BadConfig, "n_max must be at least 2");
    SimulationResult result;
    result.trials = 0;
    result.seed = 0;
    result.mode = SimMode::Exact;
    for (std::size_t n = 2; n <= n_max; ++n) {
        result.n_values.push_back(n);
        result.estimates.push_back(exact_survivor(n, n_cap));
        result.stderrs.push_back(0.0);
    }
    return result;
}

namespace detail {

std::array<std::uint64_t, 3> split_three(std::uint64_t size, SplitMix64& rng) {
    std::array<std::uint64_t, 3> counts{0, 0, 0};
    for (std::uint64_t i = 0; i < size; ++i) counts[rng.next_below(3)]++;
    return counts;
}

} // namespace detail

SimulationResult simulate_three_split(std::size_t n_max, std::uint64_t trials,
                                      std::uint64_t seed) {
    if (n_max < 2) throw Error(ErrorCode::BadConfig, "n_max must be at least 2");
    if (trials < 1) throw Error(ErrorCode::BadConfig, "trials must be at least 1");

    SimulationResult result;
    result.trials = trials;
    result.seed = seed;
    result.mode = SimMode::MonteCarlo;

    for (std::size_t n = 2; n <= n_max; ++n) {
        double mean = 0.0;
        double m2 = 0.0;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            SplitMix64 rng = SplitMix64::substream(seed, stream_key(2, n, trial));
            std::vector<std::uint64_t> live;
            if (n >= 2) live.push_back(n);
            std::uint64_t rounds = 0;
            std::vector<std::uint64_t> next;
            while (!live.empty()) {
                next.clear();
                for (const std::uint64_t g : live) {
                    const auto kids = detail::split_three(g, rng);
                    for (const std::uint64_t c : kids) {
                        if (c >= 2) next.push_back(c);
                    }
                }
                live.swap(next);
                ++rounds;
            }
            // Welford over the round counts
            const double x = static_cast<double>(rounds);
            const double delta = x - mean;
            mean += delta / static_cast<double>(trial + 1);
            m2 += delta * (x - mean);
        }
        const double variance = m2 / static_cast<double>(trials); // plug-in
        const double se = std::sqrt(variance / static_cast<double>(trials));
        result.n_values.push_back(n);
        result.estimates.push_back(mean);
        result.stderrs.push_back(se);
        result.scaled_estimates.push_back(mean / static_cast<double>(n));
    }
    return result;
}

} // namespace lamstat
