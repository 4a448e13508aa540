#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ucover/constructions.hpp"
#include "ucover/error.hpp"
#include "ucover/involute.hpp"
#include "ucover/smooth.hpp"
#include "ucover/verify.hpp"

using namespace ucover;
using namespace ucover::verify;
using geometry::distance;

namespace {

constexpr double kEps = 1e-9;

CoverShape from_chain(const involute::GeneratingChain& chain) {
    return CoverShape::from_bundle(involute::involute_cover(chain));
}

CoverShape r2() { return from_chain(involute::one_edge_chain()); }

CoverShape two_edge() {
    return from_chain(involute::chain_from_params(constructions::solve_two_edge(std::acos(0.75))));
}

CoverShape three_edge() {
    return from_chain(involute::chain_from_params(constructions::solve_three_edge(0.575939, 0.519805)));
}

CoverShape four_edge() {
    return from_chain(involute::chain_from_params(constructions::solve_four_edge(0.488669, 0.423144, 0.189158)));
}

const CoverShape& smooth_cover() {
    static const CoverShape shape =
        from_chain(smooth::discretize_smooth(smooth::solve_coefficients(1.11073213677147211458454234766), 512));
    return shape;
}

void expect_reachable(const CoverShape& shape) {
    const auto report = verify_reachability(shape, 256, 256, kEps);
    EXPECT_EQ(report.failures.size(), 0u);
    for (std::size_t i = 0; i < std::min<std::size_t>(report.failures.size(), 5); ++i) {
        const auto& f = report.failures[i];
        ADD_FAILURE() << "no partner for p = (" << f.p.x << ", " << f.p.y << "), l = " << f.l;
    }
    EXPECT_LE(report.diameter, 1 + kEps);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.points, 257u);  // the apex is sampled as well
    EXPECT_EQ(report.lengths, 256u);
}

}  // namespace

TEST(Partners, R2ApexAtUnitLength) {
    const auto shape = r2();
    const Point w{0.0, std::sqrt(3.0) / 2};
    ASSERT_LT(distance(shape.apex(), w), 1e-12);
    const auto q = admissible_partners(shape, {w, Half::apex}, 1.0, kEps);
    ASSERT_FALSE(q.empty());
    for (const auto& x : q) {
        EXPECT_TRUE(distance(x.point, shape.u()) < 1e-9 || distance(x.point, shape.v()) < 1e-9);
    }
}

TEST(Partners, EveryPartnerHasTheRightLengthAndStaysInside) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> len(1e-3, 1.0);
    for (const CoverShape& shape : {r2(), two_edge(), four_edge()}) {
        const auto pts = upper_samples(shape, 64);
        for (const auto& p : pts) {
            const double l = len(rng);
            for (const auto& q : admissible_partners(shape, p, l, kEps)) {
                EXPECT_LE(std::abs(distance(p.point, q.point) - l), 1e-9);
                EXPECT_TRUE(geometry::segment_inside(shape.region(), p.point, q.point, kEps));
            }
        }
    }
}

TEST(Partners, OppositeHalfComesFirst) {
    const auto shape = two_edge();
    const auto pts = upper_samples(shape, 32);
    for (const auto& p : pts) {
        if (p.half == Half::apex) continue;
        const auto q = admissible_partners(shape, p, 0.5, kEps);
        bool seen_same = false;
        for (const auto& x : q) {
            const bool opposite = x.half != p.half;
            if (!opposite) seen_same = true;
            else EXPECT_FALSE(seen_same && x.half != Half::apex);
        }
    }
}

TEST(Samples, IncludeEndpointsAndApex) {
    const auto shape = three_edge();
    const auto pts = upper_samples(shape, 33);
    ASSERT_EQ(pts.size(), 34u);
    EXPECT_LT(distance(pts.front().point, shape.v()), 1e-12);
    EXPECT_LT(distance(pts[32].point, shape.u()), 1e-12);
    EXPECT_LT(distance(pts.back().point, shape.apex()), 1e-12);
    EXPECT_EQ(pts.back().half, Half::apex);
    const auto ls = sample_lengths(16);
    EXPECT_EQ(ls.size(), 16u);
    EXPECT_EQ(ls.back(), 1.0);
    EXPECT_GT(ls.front(), 0.0);
}

TEST(Reachability, R2) { expect_reachable(r2()); }
TEST(Reachability, TwoEdge) { expect_reachable(two_edge()); }
TEST(Reachability, ThreeEdge) { expect_reachable(three_edge()); }
TEST(Reachability, FourEdge) { expect_reachable(four_edge()); }
TEST(Reachability, Smooth) { expect_reachable(smooth_cover()); }

TEST(Reachability, ShrunkMutantFailsNearUnitLength) {
    const auto report = verify_reachability(shrunk(smooth_cover(), 0.95), 64, 64, kEps);
    EXPECT_FALSE(report.passed);
    ASSERT_FALSE(report.failures.empty());
    bool long_failure = false;
    for (const auto& f : report.failures) long_failure |= f.l >= 0.95;
    EXPECT_TRUE(long_failure);
    // Failures arrive sorted by (point, length) index.
    for (std::size_t i = 1; i < report.failures.size(); ++i) {
        const auto& a = report.failures[i - 1];
        const auto& b = report.failures[i];
        EXPECT_TRUE(a.p_index < b.p_index || (a.p_index == b.p_index && a.l_index < b.l_index));
    }
}

TEST(Reachability, ShrunkR2Fails) {
    EXPECT_FALSE(verify_reachability(shrunk(r2(), 0.95), 32, 32, kEps).failures.empty());
}

TEST(Reachability, NotchedR2FailsAtApex) {
    const auto shape = notched_r2(0.15);
    const auto q = admissible_partners(shape, {shape.apex(), Half::apex}, 1.0, kEps);
    EXPECT_TRUE(q.empty());
    EXPECT_FALSE(verify_reachability(shape, 64, 64, kEps).failures.empty());
}

TEST(Reachability, RejectsSparseSampling) {
    EXPECT_THROW(verify_reachability(r2(), 8, 64, kEps), DomainError);
    EXPECT_THROW(verify_reachability(r2(), 64, 8, kEps), DomainError);
}

TEST(Diameter, R2) {
    const auto d = verify_diameter(r2(), 4096, kEps);
    EXPECT_NEAR(d.diameter, 1.0, 1e-9);
    EXPECT_TRUE(d.ok);
}

TEST(Diameter, SmoothAndFourEdge) {
    const auto ds = verify_diameter(smooth_cover(), 8192, kEps);
    EXPECT_LE(ds.diameter, 1 + kEps);
    EXPECT_TRUE(ds.ok);
    const auto d4 = verify_diameter(four_edge(), 8192, kEps);
    EXPECT_LE(d4.diameter, 1 + kEps);
    EXPECT_TRUE(d4.ok);
}

TEST(Diameter, EnlargedCoverIsFlagged) {
    EXPECT_FALSE(verify_diameter(shrunk(r2(), 1.01), 1024, kEps).ok);
    EXPECT_THROW(verify_diameter(r2(), 32, kEps), DomainError);
}

TEST(Fold, R2UnitRule) {
    const auto shape = r2();
    const Fold f = fold_rule(shape, {1.0}, 0);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_LT(distance(f[0], shape.u()), 1e-12);
    EXPECT_TRUE(distance(f[1], shape.v()) < 1e-9 || distance(f[1], shape.apex()) < 1e-9);
    EXPECT_FALSE(check_fold(shape, {1.0}, f).has_value());
}

TEST(Fold, R2HalfLengthRule) {
    const auto shape = r2();
    const Rule rule(4, 0.5);
    for (std::uint64_t seed : {0u, 3u}) {
        const Fold f = fold_rule(shape, rule, seed);
        ASSERT_EQ(f.size(), 5u);
        EXPECT_FALSE(check_fold(shape, rule, f).has_value());
    }
}

TEST(Fold, RandomRuleInsideSmoothCover) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> len(0.0, 1.0);
    Rule rule(100);
    for (double& l : rule) {
        do l = 1.0 - len(rng);
        while (!(l > 0));
    }
    const Fold f = fold_rule(smooth_cover(), rule, 7);
    ASSERT_EQ(f.size(), 101u);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        EXPECT_NEAR(distance(f[i], f[i + 1]), rule[i], 1e-9);
        EXPECT_TRUE(geometry::segment_inside(smooth_cover().region(), f[i], f[i + 1], kEps));
    }
    EXPECT_FALSE(check_fold(smooth_cover(), rule, f).has_value());
}

TEST(Fold, SameSeedSameFold) {
    const Rule rule{0.3, 0.9, 0.55, 1.0, 0.12};
    EXPECT_EQ(fold_rule(four_edge(), rule, 5), fold_rule(four_edge(), rule, 5));
}

TEST(Fold, CheckFoldCatchesViolations) {
    const auto shape = r2();
    const Rule rule{1.0};
    const Fold wrong_length{shape.u(), {0.0, 0.0}};
    EXPECT_TRUE(check_fold(shape, rule, wrong_length).has_value());
    const Fold outside{shape.u(), shape.u() + Point{0.0, -1.0}};
    EXPECT_TRUE(check_fold(shape, rule, outside).has_value());
    const Fold too_short{shape.u()};
    EXPECT_TRUE(check_fold(shape, rule, too_short).has_value());
}

TEST(Fold, UnplaceableSegmentIsReported) {
    try {
        fold_rule(shrunk(r2(), 0.9), {0.2, 1.0}, 0);
        FAIL() << "expected FoldError";
    } catch (const FoldError& e) {
        EXPECT_EQ(e.segment, 1u);
    }
}

TEST(Fold, InvalidRules) {
    EXPECT_THROW(fold_rule(r2(), {}, 0), DomainError);
    EXPECT_THROW(fold_rule(r2(), {0.5, 1.5}, 0), DomainError);
    EXPECT_THROW(fold_rule(r2(), {0.0}, 0), DomainError);
}

TEST(Json, CoverRoundTripKeepsApexAndUpperPath) {
    const auto bundle = involute::involute_cover(
        involute::chain_from_params(constructions::solve_three_edge(0.575939, 0.519805)));
    const auto j = nlohmann::json::parse(cover_to_json(bundle, "three").dump());
    EXPECT_EQ(j.at("kind"), "three");
    const auto shape = CoverShape::from_json(j);
    const auto ref = CoverShape::from_bundle(bundle);
    EXPECT_NEAR(shape.region().area(), bundle.area, 1e-12);
    EXPECT_LT(distance(shape.apex(), ref.apex()), 1e-12);
    EXPECT_EQ(shape.upper().size(), ref.upper().size());
    EXPECT_EQ(shape.apex_piece(), ref.apex_piece());
}

TEST(Json, ReportSchema) {
    const auto report = verify_reachability(shrunk(r2(), 0.95), 16, 16, kEps);
    const auto j = report_to_json(report);
    for (const char* key : {"points", "lengths", "failures", "diameter", "passed"}) EXPECT_TRUE(j.contains(key)) << key;
    ASSERT_FALSE(j.at("failures").empty());
    EXPECT_EQ(j.at("failures")[0].at("p").size(), 2u);
    EXPECT_TRUE(j.at("failures")[0].contains("l"));
    EXPECT_FALSE(j.at("passed").get<bool>());
}

TEST(Centroid, OfSymmetricCoverIsOnAxis) {
    const auto c = centroid(r2().region());
    EXPECT_NEAR(c.x, 0.0, 1e-12);
    EXPECT_GT(c.y, 0.0);
    EXPECT_LT(c.y, std::sqrt(3.0) / 2);
}
