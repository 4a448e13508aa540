#pragma once

// Hill climbing over symmetric n-edge generating chains. A chain is stored as
// its left half: length fractions (summing to 1, each half edge has length
// fraction/2) and clockwise turns. For even n the last turn is half the turn
// at the axis vertex; for odd n the last entry is half the middle edge and its
// turn is fixed at 0.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "ucover/involute.hpp"

namespace ucover::search {

struct SearchConfig {
    std::size_t edges = 2;
    std::size_t iterations = 20000;
    std::uint64_t seed = 1;
    double initial_step = 0.05;
    double decay = 0.999;
    /// Extra rounds; each round gets an equal share of the iterations and
    /// starts again from the initial step.
    std::size_t restarts = 3;
};

/// Throws DomainError for an invalid configuration.
void validate_config(const SearchConfig& cfg);

struct HalfChainParams {
    std::vector<double> fractions;
    std::vector<double> turns;
    bool odd = false;

    std::size_t edges() const { return odd ? 2 * fractions.size() - 1 : 2 * fractions.size(); }
    /// Indices of coordinates that perturb may move: fractions first, then turns.
    std::size_t free_count() const;
};

involute::GeneratingChain to_chain(const HalfChainParams& p);
HalfChainParams from_chain(const involute::GeneratingChain& chain);

/// Starting point: the discretized smooth curve for n >= 4, otherwise equal
/// edges with small equal turns.
HalfChainParams initial_params(std::size_t edges);

/// Moves one free coordinate uniformly in [-step, step], clamps turns at 0 and
/// renormalizes the fractions. step = 0 returns the input unchanged.
HalfChainParams perturb(const HalfChainParams& p, double step, std::mt19937_64& rng);

/// Involute area, or +infinity when the chain is inadmissible.
double evaluate(const HalfChainParams& p);

struct SearchTrace {
    /// Best area after each iteration; entry 0 is the starting area.
    std::vector<double> best_area;
    HalfChainParams best_params;
    involute::GeneratingChain best_chain;
    double best = 0.0;
    std::size_t accepted = 0;
};

SearchTrace local_search(const SearchConfig& cfg);

/// "iteration,best_area" rows.
void write_trace_csv(std::ostream& os, const SearchTrace& trace);

}  // namespace ucover::search
