#pragma once

// Numerical checks that a region behaves as a universal cover: diameter at
// most 1, and reachability on the upper boundary: for every p there and every
// l in (0, 1] some q on the upper boundary has |pq| = l and pq inside the
// region. Reachability drives a greedy online folding of carpenter's rules.

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ucover/involute.hpp"

namespace ucover::verify {

using geometry::Point;

inline constexpr double kLengthMatchTol = 1e-9;

/// A region together with its upper boundary v -> w -> u; the apex w splits
/// the upper boundary into the right half (before w) and the left half.
class CoverShape {
public:
    CoverShape(geometry::Region region, geometry::ArcPath upper, Point apex);

    static CoverShape from_bundle(const involute::CoverBundle& bundle);
    /// Cover JSON: {"pieces", "area"} with optional "chain_pieces" (number of
    /// leading pieces that form the chain uv, default: the leading line
    /// segments) and "apex" ([x, y], default: highest upper endpoint).
    static CoverShape from_json(const nlohmann::json& j);

    const geometry::Region& region() const { return region_; }
    const geometry::ArcPath& upper() const { return upper_; }
    Point apex() const { return apex_; }
    Point u() const { return upper_.end(); }
    Point v() const { return upper_.start(); }
    /// Pieces of the upper path before the apex.
    std::size_t apex_piece() const { return apex_piece_; }

private:
    geometry::Region region_;
    geometry::ArcPath upper_;
    Point apex_;
    std::size_t apex_piece_ = 0;
};

/// Cover JSON with "kind", "apex" and "chain_pieces" filled in.
nlohmann::json cover_to_json(const involute::CoverBundle& bundle, const std::string& kind);

enum class Half { right, left, apex };

struct UpperPoint {
    Point point;
    Half half;
};

/// np points at arc-length fractions k/(np-1) of the upper path (so u and v
/// are included) followed by the apex.
std::vector<UpperPoint> upper_samples(const CoverShape& shape, std::size_t np);

/// Lengths j/nl, j = 1..nl.
std::vector<double> sample_lengths(std::size_t nl);

/// Every admissible q for (p, l), in tie-break order: hits on the half
/// opposite p first, then by position along the upper path.
std::vector<UpperPoint> admissible_partners(const CoverShape& shape, const UpperPoint& p, double l, double eps);

struct Failure {
    std::size_t p_index;
    std::size_t l_index;
    Point p;
    double l;
};

struct VerificationReport {
    std::size_t points = 0;
    std::size_t lengths = 0;
    std::vector<Failure> failures;
    double diameter = 0.0;
    bool passed = false;
};

/// Reachability over np x nl samples (np, nl >= 16) plus the diameter at the
/// default sampling density. Pairs are checked on all hardware threads.
VerificationReport verify_reachability(const CoverShape& shape, std::size_t np, std::size_t nl, double eps,
                                       std::size_t diameter_samples = 4096);

struct DiameterCheck {
    double diameter;
    bool ok;
};

DiameterCheck verify_diameter(const CoverShape& shape, std::size_t n, double eps);

nlohmann::json report_to_json(const VerificationReport& r);

using Rule = std::vector<double>;
using Fold = std::vector<Point>;

/// Greedy online folding from u. seed 0 always takes the first admissible
/// partner; other seeds choose uniformly among the admissible partners.
/// Throws FoldError naming the segment that cannot be placed.
Fold fold_rule(const CoverShape& shape, const Rule& rule, std::uint64_t seed, double eps = geometry::kBoundaryEps);

/// Empty when the fold realizes the rule inside the region; otherwise a
/// description of the first violation.
std::optional<std::string> check_fold(const CoverShape& shape, const Rule& rule, const Fold& fold,
                                      double eps = geometry::kBoundaryEps);

/// Region shrunk by `factor` about its centroid.
CoverShape shrunk(const CoverShape& shape, double factor);

/// R2 with a V-shaped notch of the given depth cut down from the apex; the
/// notch bottom becomes the apex.
CoverShape notched_r2(double depth);

/// Area centroid of the region (polygonal approximation).
Point centroid(const geometry::Region& region);

}  // namespace ucover::verify
