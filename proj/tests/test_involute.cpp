#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ucover/constructions.hpp"
#include "ucover/error.hpp"
#include "ucover/involute.hpp"
#include "ucover/smooth.hpp"

using namespace ucover;
using namespace ucover::involute;
using geometry::distance;
using geometry::Point;

namespace {

const double kTwoEdgeA = std::acos(0.75);

std::vector<GeneratingChain> published_chains() {
    return {one_edge_chain(), chain_from_params(constructions::solve_two_edge(kTwoEdgeA)),
            chain_from_params(constructions::solve_three_edge(0.575939, 0.519805)),
            chain_from_params(constructions::solve_four_edge(0.488669, 0.423144, 0.189158)),
            smooth::discretize_smooth(smooth::solve_coefficients(1.11073213677147211), 64)};
}

bool has_issue(const std::vector<ChainDiagnostic>& d, ChainIssue issue) {
    return std::any_of(d.begin(), d.end(), [&](const ChainDiagnostic& x) { return x.issue == issue; });
}

}  // namespace

TEST(InvoluteCover, OneEdgeChainGivesR2) {
    const auto b = involute_cover(one_edge_chain());
    EXPECT_NEAR(b.area, M_PI / 3 - std::sqrt(3.0) / 4, 1e-12);
    EXPECT_NEAR(b.apex.x, 0.0, 1e-12);
    EXPECT_NEAR(b.apex.y, std::sqrt(3.0) / 2, 1e-12);
    EXPECT_NEAR(b.final_angle, M_PI / 3, 1e-12);
}

TEST(InvoluteCover, TwoEdgeChainAreaAndArcs) {
    const auto p = constructions::solve_two_edge(kTwoEdgeA);
    const auto b = involute_cover(chain_from_params(p));
    EXPECT_NEAR(b.area, constructions::two_edge_area(p), 1e-10);
    EXPECT_NEAR(b.area, 0.5726, 1e-4);
    // One half-radius arc of angle 2c and one unit arc of angle a per side.
    for (const auto* side : {&b.left, &b.right}) {
        ASSERT_EQ(side->size(), 2u);
        std::vector<std::pair<double, double>> arcs;
        for (const auto& arc : *side) arcs.emplace_back(arc.radius, arc.sweep());
        std::sort(arcs.begin(), arcs.end());
        EXPECT_NEAR(arcs[0].first, 0.5, 1e-12);
        EXPECT_NEAR(arcs[0].second, 2 * p.c, 1e-12);
        EXPECT_NEAR(arcs[1].first, 1.0, 1e-12);
        EXPECT_NEAR(arcs[1].second, p.a, 1e-10);
    }
    EXPECT_NEAR(b.final_angle, p.a, 1e-10);
}

TEST(InvoluteCover, ShortChainIsRejected) {
    const GeneratingChain short_chain({{-0.45, 0.0}, {0.45, 0.0}});
    EXPECT_THROW(involute_cover(short_chain), InadmissibleChainError);
    EXPECT_TRUE(has_issue(validate_chain(short_chain), ChainIssue::length));
}

TEST(InvoluteCover, ConvexChainIsRejected) {
    // A chain that bends away from the region.
    const double d = std::sqrt(0.25 - 0.2 * 0.2);
    const GeneratingChain bad({{-0.4, d}, {0.0, 0.0}, {0.4, d}});
    EXPECT_THROW(involute_cover(bad), InadmissibleChainError);
}

TEST(InvoluteCover, UnitSegmentsToApex) {
    for (const auto& chain : published_chains()) {
        const auto b = involute_cover(chain);
        EXPECT_NEAR(distance(chain.u(), b.apex), 1.0, 1e-9);
        EXPECT_NEAR(distance(chain.v(), b.apex), 1.0, 1e-9);
        EXPECT_NEAR(b.apex.x, 0.0, 1e-9);
        EXPECT_NEAR(geometry::piece_end(geometry::Piece(b.left.back())).x, 0.0, 1e-9);
        EXPECT_NEAR(geometry::piece_end(geometry::Piece(b.right.back())).x, 0.0, 1e-9);
    }
}

TEST(InvoluteCover, OpposingSectorRadiiSumToOne) {
    for (const auto& chain : published_chains()) {
        const auto b = involute_cover(chain);
        for (const auto& l : b.left) {
            // The left arc about p_j has radius s_j; the right arc about the
            // same vertex has radius 1 - s_j.
            const auto r = std::find_if(b.right.begin(), b.right.end(),
                                        [&](const geometry::ArcSegment& x) { return distance(x.center, l.center) < 1e-12; });
            if (l.radius == 1.0 || r == b.right.end()) continue;
            EXPECT_NEAR(l.radius + r->radius, 1.0, 1e-12);
        }
        const auto s = chain.cumulative_lengths();
        std::size_t k = 0;
        const auto th = chain.turn_angles();
        for (std::size_t j = 1; j + 1 < chain.vertices().size(); ++j) {
            if (th[j - 1] <= 0) continue;
            ASSERT_LT(k, b.left.size());
            EXPECT_NEAR(b.left[k].radius, s[j], 1e-12);
            EXPECT_NEAR(b.left[k].sweep(), th[j - 1], 1e-12);
            ++k;
        }
    }
}

TEST(InvoluteCover, MatchesClosedFormsAtRandomParameters) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ang(0.02, 0.9);
    int checked = 0;
    for (int i = 0; i < 3000 && checked < 60; ++i) {
        const double a = ang(rng), b = ang(rng), c = ang(rng);
        try {
            switch (i % 3) {
                case 0: {
                    const auto p = constructions::solve_two_edge(a);
                    EXPECT_NEAR(involute_area(chain_from_params(p)), constructions::two_edge_area(p), 1e-10);
                    break;
                }
                case 1: {
                    const auto p = constructions::solve_three_edge(a, b);
                    EXPECT_NEAR(involute_area(chain_from_params(p)), constructions::three_edge_area(p), 1e-10);
                    break;
                }
                default: {
                    const auto p = constructions::solve_four_edge(a, b, c);
                    EXPECT_NEAR(involute_area(chain_from_params(p)), constructions::four_edge_area(p), 1e-10);
                }
            }
            ++checked;
        } catch (const InfeasibleError&) {
        } catch (const InadmissibleChainError&) {
        }
    }
    EXPECT_GE(checked, 30);
}

TEST(InvoluteCover, AreaAgreesWithBundleRegion) {
    for (const auto& chain : published_chains()) {
        const auto b = involute_cover(chain);
        EXPECT_NEAR(involute_area(chain), b.area, 1e-14);
        EXPECT_NEAR(b.region.area(), b.area, 1e-14);
    }
}

TEST(InvoluteCover, TotalTurningIsFullTurn) {
    for (const auto& chain : published_chains()) {
        EXPECT_NEAR(geometry::total_turning(involute_cover(chain).region.boundary()), 2 * M_PI, 1e-6);
    }
}

TEST(InvoluteCover, AreaInvariantUnderReversal) {
    for (const auto& chain : published_chains()) {
        EXPECT_NEAR(involute_area(chain.mirrored_reversed()), involute_area(chain), 1e-12);
    }
}

TEST(InvoluteCover, UpperPathRunsFromVToU) {
    const auto b = involute_cover(chain_from_params(constructions::solve_three_edge(0.575939, 0.519805)));
    const auto up = b.upper_path();
    EXPECT_LT(distance(up.start(), b.chain.v()), 1e-12);
    EXPECT_LT(distance(up.end(), b.chain.u()), 1e-12);
    EXPECT_EQ(up.size(), b.left.size() + b.right.size());
}

TEST(ChainFromParams, OneEdge) {
    const auto c = one_edge_chain();
    ASSERT_EQ(c.vertices().size(), 2u);
    EXPECT_EQ(c.u(), (Point{-0.5, 0.0}));
    EXPECT_EQ(c.v(), (Point{0.5, 0.0}));
}

TEST(ChainFromParams, TwoEdgeNotchDepth) {
    const auto p = constructions::solve_two_edge(kTwoEdgeA);
    const auto c = chain_from_params(p);
    ASSERT_EQ(c.vertices().size(), 3u);
    const Point u = c.u(), m = c.vertices()[1], v = c.v();
    EXPECT_NEAR(distance(u, m), 0.5, 1e-12);
    EXPECT_NEAR(distance(m, v), 0.5, 1e-12);
    EXPECT_NEAR(distance(u, v), p.x0, 1e-12);
    // Height of an isosceles triangle with legs 1/2 over base x0.
    EXPECT_NEAR(m.y - u.y, std::sqrt(0.25 - p.x0 * p.x0 / 4), 1e-12);
    EXPECT_NEAR(m.y - u.y, 0.5 * std::sin(p.c), 1e-12);
}

TEST(ChainFromParams, ThreeEdgeLengths) {
    const auto p = constructions::solve_three_edge(0.575939, 0.519805);
    const auto c = chain_from_params(p);
    ASSERT_EQ(c.vertices().size(), 4u);
    const auto len = c.edge_lengths();
    EXPECT_NEAR(len[0], p.x1, 1e-12);
    EXPECT_NEAR(len[1], p.x2, 1e-12);
    EXPECT_NEAR(len[2], p.x1, 1e-12);
    EXPECT_NEAR(distance(c.u(), c.v()), p.x0, 1e-12);
}

TEST(ChainFromParams, FourEdgeLengths) {
    const auto p = constructions::solve_four_edge(0.488669, 0.423144, 0.189158);
    const auto c = chain_from_params(p);
    ASSERT_EQ(c.vertices().size(), 5u);
    const auto len = c.edge_lengths();
    EXPECT_NEAR(len[0], p.x1, 1e-12);
    EXPECT_NEAR(len[1], p.x3, 1e-12);
    EXPECT_NEAR(len[2], p.x3, 1e-12);
    EXPECT_NEAR(len[3], p.x1, 1e-12);
    EXPECT_NEAR(distance(c.vertices()[1], c.vertices()[3]), p.x2, 1e-12);
    EXPECT_NEAR(distance(c.u(), c.v()), p.x0, 1e-12);
}

TEST(ValidateChain, PublishedChainsAreAdmissible) {
    for (const auto& chain : published_chains()) EXPECT_TRUE(validate_chain(chain).empty());
}

TEST(ValidateChain, NegativeTurnIsConcavityViolation) {
    const GeneratingChain c = GeneratingChain::from_halfchain({{0.2, 0.3}, {0.15, -0.1}, {0.15, 0.05}});
    const auto d = validate_chain(c);
    ASSERT_TRUE(has_issue(d, ChainIssue::concavity));
    for (const auto& x : d) {
        if (x.issue == ChainIssue::concavity) EXPECT_NEAR(x.magnitude, 0.1, 1e-12);
    }
}

TEST(ValidateChain, AsymmetryMagnitudeIsReported) {
    auto verts = chain_from_params(constructions::solve_three_edge(0.575939, 0.519805)).vertices();
    verts[1].x += 1e-3;
    const auto d = validate_chain(GeneratingChain(verts));
    ASSERT_TRUE(has_issue(d, ChainIssue::symmetry));
    for (const auto& x : d) {
        if (x.issue == ChainIssue::symmetry) EXPECT_NEAR(x.magnitude, 1e-3, 1e-9);
    }
}

TEST(ValidateChain, TooFewVertices) {
    EXPECT_TRUE(has_issue(validate_chain(GeneratingChain({{0.0, 0.0}})), ChainIssue::too_short));
}

TEST(HalfChain, RoundTripThroughHalfchainForm) {
    for (const auto& chain : published_chains()) {
        const auto half = chain.to_halfchain();
        const auto back = GeneratingChain::from_halfchain(half);
        ASSERT_EQ(back.vertices().size(), chain.vertices().size());
        EXPECT_NEAR(involute_area(back), involute_area(chain), 1e-12);
        double sum = 0;
        for (const auto& e : half) sum += e.len;
        EXPECT_NEAR(sum, 0.5, 1e-12);
    }
}

TEST(HalfChain, OddEdgeCountHasFlatMiddle) {
    const GeneratingChain c = GeneratingChain::from_halfchain({{0.3, 0.4}, {0.2, 0.0}});
    EXPECT_EQ(c.edge_count(), 3u);
    EXPECT_NEAR(c.length(), 1.0, 1e-15);
    EXPECT_TRUE(validate_chain(c).empty());
    // The middle edge is horizontal and centred on the axis.
    EXPECT_NEAR(c.vertices()[1].y, c.vertices()[2].y, 1e-15);
    EXPECT_NEAR(c.vertices()[1].x, -c.vertices()[2].x, 1e-15);
}

TEST(ChainJson, BothFormsRoundTrip) {
    for (const auto& chain : published_chains()) {
        for (bool half : {false, true}) {
            const auto j = nlohmann::json::parse(chain_to_json(chain, half).dump());
            EXPECT_EQ(j.contains("halfchain"), half);
            EXPECT_NEAR(involute_area(chain_from_json(j)), involute_area(chain), 1e-12);
        }
    }
}

TEST(ChainJson, MalformedInput) {
    EXPECT_THROW(chain_from_json(nlohmann::json::parse(R"({"edges":[]})")), DomainError);
    EXPECT_THROW(chain_from_json(nlohmann::json::parse(R"({"vertices":[[0]]})")), DomainError);
}
