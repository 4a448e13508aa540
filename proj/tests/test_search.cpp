#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "ucover/constructions.hpp"
#include "ucover/error.hpp"
#include "ucover/search.hpp"

using namespace ucover;
using namespace ucover::search;

namespace {

SearchTrace run(std::size_t edges, std::size_t iterations, std::uint64_t seed = 1) {
    SearchConfig cfg;
    cfg.edges = edges;
    cfg.iterations = iterations;
    cfg.seed = seed;
    return local_search(cfg);
}

void expect_monotone(const SearchTrace& t) {
    for (std::size_t i = 1; i < t.best_area.size(); ++i) ASSERT_LE(t.best_area[i], t.best_area[i - 1]) << "at " << i;
}

double fraction_sum(const HalfChainParams& p) { return std::accumulate(p.fractions.begin(), p.fractions.end(), 0.0); }

}  // namespace

TEST(LocalSearch, OneEdgeHasNoFreedom) {
    const auto t = run(1, 100);
    EXPECT_NEAR(t.best, constructions::r2_area<double>(), 1e-12);
    EXPECT_NEAR(t.best_area.front(), 0.614184, 1e-6);
    EXPECT_EQ(t.accepted, 0u);
}

TEST(LocalSearch, TwoEdgesReachClosedFormOptimum) {
    const auto t = run(2, 20000);
    expect_monotone(t);
    EXPECT_LE(t.best, 0.5727);
    const double closed = constructions::optimize_construction(constructions::CutKind::two).area;
    EXPECT_NEAR(t.best, closed, 1e-3);
    EXPECT_GE(t.best, closed - 1e-9);
}

TEST(LocalSearch, ThreeEdgesReachClosedFormOptimum) {
    const auto t = run(3, 50000);
    expect_monotone(t);
    EXPECT_LE(t.best, 0.5636);
    EXPECT_NEAR(t.best, constructions::optimize_construction(constructions::CutKind::three).area, 1e-3);
}

TEST(LocalSearch, FourEdgesReachClosedFormOptimum) {
    const auto t = run(4, 50000);
    expect_monotone(t);
    EXPECT_NEAR(t.best, constructions::optimize_construction(constructions::CutKind::four).area, 1e-3);
}

TEST(LocalSearch, SixteenEdgesSandwiched) {
    const auto t = run(16, 50000);
    expect_monotone(t);
    EXPECT_LT(t.best, 0.5600);
    EXPECT_GT(t.best, 0.55536);
}

TEST(LocalSearch, BestChainReproducesBestArea) {
    const auto t = run(5, 5000);
    EXPECT_EQ(involute::involute_area(t.best_chain), t.best);
    EXPECT_EQ(t.best_area.back(), t.best);
    EXPECT_EQ(t.best_area.size(), 5001u);
    EXPECT_TRUE(involute::validate_chain(t.best_chain).empty());
}

TEST(LocalSearch, BitIdenticalPerSeed) {
    for (std::uint64_t seed : {1u, 7u}) {
        const auto a = run(6, 3000, seed);
        const auto b = run(6, 3000, seed);
        EXPECT_EQ(a.best_area, b.best_area);
        EXPECT_EQ(a.best_params.fractions, b.best_params.fractions);
        EXPECT_EQ(a.best_params.turns, b.best_params.turns);
    }
    EXPECT_NE(run(6, 3000, 1).best_area, run(6, 3000, 2).best_area);
}

TEST(LocalSearch, InvalidConfigurations) {
    SearchConfig cfg;
    cfg.edges = 0;
    EXPECT_THROW(local_search(cfg), DomainError);
    cfg = {};
    cfg.iterations = 0;
    EXPECT_THROW(local_search(cfg), DomainError);
    cfg = {};
    cfg.initial_step = 0;
    EXPECT_THROW(local_search(cfg), DomainError);
    cfg = {};
    cfg.decay = 1.5;
    EXPECT_THROW(local_search(cfg), DomainError);
    cfg = {};
    cfg.decay = 0;
    EXPECT_THROW(local_search(cfg), DomainError);
}

TEST(Perturb, ZeroStepIsIdentity) {
    std::mt19937_64 rng(1);
    for (std::size_t n : {2u, 3u, 8u}) {
        const auto p = initial_params(n);
        const auto q = perturb(p, 0.0, rng);
        EXPECT_EQ(p.fractions, q.fractions);
        EXPECT_EQ(p.turns, q.turns);
    }
}

TEST(Perturb, FractionsRenormalizedAndTurnsNonnegative) {
    std::mt19937_64 rng(2);
    for (std::size_t n : {2u, 3u, 9u, 16u}) {
        auto p = initial_params(n);
        for (int i = 0; i < 1000; ++i) {
            p = perturb(p, 0.05, rng);
            ASSERT_NEAR(fraction_sum(p), 1.0, 1e-15);
            for (double t : p.turns) ASSERT_GE(t, 0.0);
            for (double f : p.fractions) ASSERT_GT(f, 0.0);
        }
    }
}

TEST(Perturb, MovesOneCoordinateBeforeRenormalizing) {
    std::mt19937_64 rng(3);
    const auto p = initial_params(8);
    for (int i = 0; i < 200; ++i) {
        const auto q = perturb(p, 0.01, rng);
        int turns_changed = 0;
        for (std::size_t k = 0; k < p.turns.size(); ++k) turns_changed += p.turns[k] != q.turns[k];
        const bool fractions_changed = p.fractions != q.fractions;
        EXPECT_LE(turns_changed + (fractions_changed ? 1 : 0), 1);
    }
}

TEST(Perturb, AdmissibilityPreservedFromFeasibleStart) {
    std::mt19937_64 rng(4);
    for (std::size_t n : {3u, 8u}) {
        const auto start = initial_params(n);
        ASSERT_TRUE(involute::validate_chain(to_chain(start)).empty());
        int failures = 0;
        for (int i = 0; i < 10000; ++i) {
            if (!involute::validate_chain(to_chain(perturb(start, 0.05, rng))).empty()) ++failures;
        }
        EXPECT_EQ(failures, 0);
    }
}

TEST(Params, ChainRoundTrip) {
    for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 16u}) {
        const auto p = initial_params(n);
        EXPECT_EQ(p.edges(), n);
        const auto chain = to_chain(p);
        EXPECT_EQ(chain.edge_count(), n);
        EXPECT_NEAR(chain.length(), 1.0, 1e-14);
        const auto back = from_chain(chain);
        ASSERT_EQ(back.fractions.size(), p.fractions.size());
        for (std::size_t k = 0; k < p.fractions.size(); ++k) EXPECT_NEAR(back.fractions[k], p.fractions[k], 1e-12);
        for (std::size_t k = 0; k < p.turns.size(); ++k) EXPECT_NEAR(back.turns[k], p.turns[k], 1e-12);
    }
}

TEST(Params, InadmissibleEvaluatesToInfinity) {
    auto p = initial_params(4);
    p.fractions = {0.1, 0.9};
    p.turns = {1.5, 1.5};
    EXPECT_TRUE(std::isinf(evaluate(p)));
}

TEST(TraceCsv, HeaderAndRows) {
    const auto t = run(2, 10);
    std::ostringstream os;
    write_trace_csv(os, t);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "iteration,best_area");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 11);
}
