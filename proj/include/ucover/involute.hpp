#pragma once

// The involute method: a unit string wrapped over a symmetric concave chain
// uv is unwrapped from each end. The free end pivots about every interior
// vertex p_j with radius s_j (arc length from u to p_j) through the exterior
// turn angle at p_j, and finally about v with radius 1 until it reaches the
// y-axis at the apex w.

#include <string>
#include <vector>

#include <json.hpp>

#include "ucover/constructions.hpp"
#include "ucover/geometry/region.hpp"

namespace ucover::involute {

using geometry::Point;

inline constexpr double kLengthTol = 1e-12;
inline constexpr double kSymmetryTol = 1e-9;

/// One half-chain entry: an edge length and the exterior turn at the edge's
/// far end. The last entry ends on the y-axis and its turn is half of the
/// turn there (0 when the axis cuts the middle of an edge).
struct HalfEdge {
    double len;
    double turn;
};

class GeneratingChain {
public:
    GeneratingChain() = default;
    explicit GeneratingChain(std::vector<Point> vertices);

    /// Full chain from u to the axis, mirrored. Half lengths sum to 1/2 for a
    /// unit chain. The topmost axis point is placed at the origin.
    static GeneratingChain from_halfchain(const std::vector<HalfEdge>& half);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t edge_count() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
    Point u() const { return vertices_.front(); }
    Point v() const { return vertices_.back(); }

    std::vector<double> edge_lengths() const;
    /// s_j: arc length from u to vertex j (s_0 = 0).
    std::vector<double> cumulative_lengths() const;
    /// Clockwise exterior turn at each interior vertex j = 1..n-1.
    std::vector<double> turn_angles() const;
    double length() const;

    /// Mirror image with reversed vertex order (u and v swap roles).
    GeneratingChain mirrored_reversed() const;

    /// Left half as (len, turn) entries; exact inverse of from_halfchain for
    /// symmetric chains.
    std::vector<HalfEdge> to_halfchain() const;

private:
    std::vector<Point> vertices_;
};

enum class ChainIssue { too_short, length, symmetry, concavity, ordering };

struct ChainDiagnostic {
    ChainIssue issue;
    double magnitude;
    std::string message;
};

/// Every violated invariant with its magnitude; empty iff admissible.
std::vector<ChainDiagnostic> validate_chain(const GeneratingChain& chain);

struct CoverBundle {
    GeneratingChain chain;
    geometry::Region region;
    Point apex;
    /// Left involute u -> w (clockwise arcs) and right involute v -> w
    /// (counterclockwise arcs), in unwrapping order.
    std::vector<geometry::ArcSegment> left;
    std::vector<geometry::ArcSegment> right;
    double area;
    /// Sweep of the final pivot about v.
    double final_angle;

    /// Boundary arcs above the chain: v -> w -> u along the region boundary.
    geometry::ArcPath upper_path() const;
};

/// Throws InadmissibleChainError when validation fails, when the final pivot
/// angle is not positive, or when an involute crosses the symmetry axis.
CoverBundle involute_cover(const GeneratingChain& chain);

/// Area of the involute cover with the same admissibility checks as
/// involute_cover, without assembling the region.
double involute_area(const GeneratingChain& chain);

GeneratingChain one_edge_chain();
GeneratingChain chain_from_params(const constructions::TwoEdgeParams<double>& p);
GeneratingChain chain_from_params(const constructions::ThreeEdgeParams<double>& p);
GeneratingChain chain_from_params(const constructions::FourEdgeParams<double>& p);

/// {"halfchain":[{"len","turn"}...]} or {"vertices":[[x,y]...]}.
nlohmann::json chain_to_json(const GeneratingChain& chain, bool halfchain_form = false);
GeneratingChain chain_from_json(const nlohmann::json& j);

}  // namespace ucover::involute
