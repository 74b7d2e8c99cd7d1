#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lamstat/rng.hpp"
#include "lamstat/sequence.hpp"

namespace lamstat {

// Running mean of a 0/1 sequence: a_n = (x_1 + ... + x_n)/n. Every a_n lies
// in [0,1] and |a_{n+1} - a_n| <= 1/n.
SequencePrefix gen_bit_average(const std::vector<int>& bits);

// (x_1, x0, x_2, x0, ..., x_N, x0) — length 2N
SequencePrefix gen_interleave(const SequencePrefix& x, double anchor);

struct PairList {
    std::vector<std::pair<double, double>> pairs; // (xi_i, eta_i)
};

struct EmbeddingResult {
    SequencePrefix sequence;
    // anchor_indices[i] = j(i+1), the 1-based position of eta_{i+1}; the pair
    // sits at (j-1, j) bit-exactly.
    std::vector<std::size_t> anchor_indices;
};

// Embeds every pair as consecutive terms, bridging gaps between eta_i and
// xi_{i+1} with ceil(gap*(i+1)) equal linear steps so each bridge step has
// magnitude <= 1/(i+1).
EmbeddingResult gen_pair_embedding(const PairList& pairs);

// convenience families used across tests and the CLI
SequencePrefix gen_sqrt(std::size_t n);             // x_k = sqrt(k)
SequencePrefix gen_jump_at_squares(std::size_t n);  // x_1 = 0, unit jump after each square index
std::vector<int> gen_random_bits(std::size_t n, std::uint64_t seed);

enum class SimMode { MonteCarlo, Exact };

struct SimulationResult {
    std::vector<std::size_t> n_values;
    std::vector<double> estimates;
    std::vector<double> stderrs;          // 0 for exact entries
    std::vector<double> scaled_estimates; // three-split only: t_n / n
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    SimMode mode = SimMode::MonteCarlo;
};

// Example-1 process: everyone picks someone else, the picked are removed,
// repeat; estimate of P(exactly one person remains) for n = 2..n_max.
SimulationResult simulate_survivor(std::size_t n_max, std::uint64_t trials, std::uint64_t seed);

// Exact p_n by full selection-profile enumeration with memoization over the
// group size; (m-1)^m profiles per size m, hence the cap.
double exact_survivor(std::size_t n, std::size_t n_cap = 8);
SimulationResult exact_survivor_sweep(std::size_t n_max, std::size_t n_cap = 8);

// Example-2 process: every live group splits uniformly into three, children
// of size <= 1 drop out; t = number of synchronized rounds until empty.
SimulationResult simulate_three_split(std::size_t n_max, std::uint64_t trials, std::uint64_t seed);

namespace detail {
// One multinomial(size; 1/3,1/3,1/3) split. Children sum back to `size`.
std::array<std::uint64_t, 3> split_three(std::uint64_t size, SplitMix64& rng);
}

} // namespace lamstat
