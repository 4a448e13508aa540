#include "ucover/involute.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ucover/error.hpp"

namespace ucover::involute {
namespace {

using geometry::ArcPath;
using geometry::ArcSegment;
using geometry::LineSegment;

constexpr double kAxisTol = 1e-12;

Point unit(Point p) { return (1.0 / geometry::norm(p)) * p; }

std::string describe(const std::vector<ChainDiagnostic>& diags) {
    std::ostringstream os;
    os << "inadmissible chain:";
    for (const auto& d : diags) os << ' ' << d.message << ';';
    return os.str();
}

struct InvoluteArcs {
    std::vector<ArcSegment> left;
    Point apex;
    double final_angle;
};

InvoluteArcs unwrap_left(const GeneratingChain& chain) {
    if (auto diags = validate_chain(chain); !diags.empty()) throw InadmissibleChainError(describe(diags));
    const auto& pts = chain.vertices();
    const std::size_t n = chain.edge_count();
    const auto s = chain.cumulative_lengths();
    const auto turns = chain.turn_angles();  // index j-1 for vertex j

    InvoluteArcs out;
    for (std::size_t j = 1; j < n; ++j) {
        const double theta = turns[j - 1];
        if (theta <= 0) continue;
        const double start = geometry::angle_of(-unit(pts[j] - pts[j - 1]));
        ArcSegment arc{pts[j], s[j], start, start - theta, false};
        if (geometry::piece_box(arc).xmax > kAxisTol) {
            throw InadmissibleChainError("inadmissible chain: left involute crosses the symmetry axis");
        }
        out.left.push_back(arc);
    }

    const Point v = chain.v();
    if (!(std::abs(v.x) < 1.0)) throw InadmissibleChainError("inadmissible chain: |v.x| >= 1 leaves no apex");
    out.apex = {0.0, v.y + std::sqrt(1.0 - v.x * v.x)};
    const Point back = -unit(pts[n] - pts[n - 1]);
    out.final_angle = -geometry::signed_angle(back, out.apex - v);
    if (!(out.final_angle > 0)) {
        throw InadmissibleChainError("inadmissible chain: final pivot angle is not positive");
    }
    const double start = geometry::angle_of(back);
    out.left.push_back(ArcSegment{v, 1.0, start, start - out.final_angle, false});
    return out;
}

ArcPath boundary_path(const GeneratingChain& chain, const std::vector<ArcSegment>& left) {
    ArcPath path;
    const auto& pts = chain.vertices();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) path.pieces.push_back(LineSegment{pts[i], pts[i + 1]});
    for (const auto& arc : left) path.pieces.push_back(geometry::mirrored(arc));
    for (auto it = left.rbegin(); it != left.rend(); ++it) path.pieces.push_back(geometry::reversed(*it));
    return path;
}

}  // namespace

GeneratingChain::GeneratingChain(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}

GeneratingChain GeneratingChain::from_halfchain(const std::vector<HalfEdge>& half) {
    if (half.empty()) throw DomainError("half-chain is empty");
    const std::size_t m = half.size();
    std::vector<double> phi(m);
    double acc = 0.0;
    for (std::size_t k = m; k-- > 0;) {
        acc += half[k].turn;
        phi[k] = acc;
    }
    std::vector<Point> q(m + 1);
    q[m] = {0.0, 0.0};
    for (std::size_t k = m; k-- > 0;) q[k] = q[k + 1] - half[k].len * geometry::unit_at(phi[k]);

    std::vector<Point> full(q.begin(), q.end() - 1);
    if (half.back().turn != 0.0) full.push_back(q[m]);
    for (std::size_t k = m; k-- > 0;) full.push_back(geometry::mirror(q[k]));
    return GeneratingChain(std::move(full));
}

std::vector<double> GeneratingChain::edge_lengths() const {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.push_back(geometry::distance(vertices_[i], vertices_[i + 1]));
    return out;
}

std::vector<double> GeneratingChain::cumulative_lengths() const {
    std::vector<double> out{0.0};
    for (double len : edge_lengths()) out.push_back(out.back() + len);
    return out;
}

std::vector<double> GeneratingChain::turn_angles() const {
    std::vector<double> out;
    for (std::size_t j = 1; j + 1 < vertices_.size(); ++j) {
        out.push_back(-geometry::signed_angle(vertices_[j] - vertices_[j - 1], vertices_[j + 1] - vertices_[j]));
    }
    return out;
}

double GeneratingChain::length() const {
    double total = 0.0;
    for (double len : edge_lengths()) total += len;
    return total;
}

GeneratingChain GeneratingChain::mirrored_reversed() const {
    std::vector<Point> out;
    for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it) out.push_back(geometry::mirror(*it));
    return GeneratingChain(std::move(out));
}

std::vector<HalfEdge> GeneratingChain::to_halfchain() const {
    const std::size_t n = edge_count();
    const auto lens = edge_lengths();
    const auto turns = turn_angles();
    std::vector<HalfEdge> half;
    const std::size_t m = n / 2;
    for (std::size_t k = 0; k < m; ++k) {
        const bool last = k + 1 == m;
        double turn = 0.0;
        if (!last || n % 2 == 1) turn = turns[k];
        else turn = turns[k] / 2;
        half.push_back({lens[k], turn});
    }
    if (n % 2 == 1) half.push_back({lens[m] / 2, 0.0});
    return half;
}

std::vector<ChainDiagnostic> validate_chain(const GeneratingChain& chain) {
    std::vector<ChainDiagnostic> out;
    const auto& pts = chain.vertices();
    if (pts.size() < 2) {
        out.push_back({ChainIssue::too_short, static_cast<double>(pts.size()), "chain needs at least two vertices"});
        return out;
    }
    const double len_err = std::abs(chain.length() - 1.0);
    if (len_err > kLengthTol) {
        out.push_back({ChainIssue::length, len_err, "total length differs from 1 by " + std::to_string(len_err)});
    }
    double asym = 0.0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        asym = std::max(asym, geometry::distance(pts[j], geometry::mirror(pts[pts.size() - 1 - j])));
    }
    if (asym > kSymmetryTol) {
        out.push_back({ChainIssue::symmetry, asym, "mirror asymmetry " + std::to_string(asym)});
    }
    const auto turns = chain.turn_angles();
    if (!turns.empty()) {
        const double worst = *std::min_element(turns.begin(), turns.end());
        if (worst < -kLengthTol) {
            out.push_back({ChainIssue::concavity, -worst, "negative turn angle " + std::to_string(worst)});
        }
    }
    const Point u = chain.u();
    const Point v = chain.v();
    const double dy = std::abs(u.y - v.y);
    if (!(u.x < 0 && v.x > 0) || dy > kSymmetryTol) {
        out.push_back({ChainIssue::ordering, dy, "endpoints must satisfy u.x < 0 < v.x and u.y = v.y"});
    }
    return out;
}

ArcPath CoverBundle::upper_path() const {
    ArcPath path;
    for (const auto& arc : right) path.pieces.push_back(arc);
    for (auto it = left.rbegin(); it != left.rend(); ++it) path.pieces.push_back(geometry::reversed(*it));
    return path;
}

CoverBundle involute_cover(const GeneratingChain& chain) {
    InvoluteArcs arcs = unwrap_left(chain);
    ArcPath path = boundary_path(chain, arcs.left);
    const double area = geometry::arc_path_area(path);
    geometry::Region region = geometry::Region::from_boundary(std::move(path));
    std::vector<ArcSegment> right;
    for (const auto& arc : arcs.left) right.push_back(std::get<ArcSegment>(geometry::mirrored(arc)));
    return CoverBundle{chain, std::move(region), arcs.apex, std::move(arcs.left), std::move(right), area, arcs.final_angle};
}

double involute_area(const GeneratingChain& chain) {
    InvoluteArcs arcs = unwrap_left(chain);
    return geometry::signed_area_unchecked(boundary_path(chain, arcs.left));
}

GeneratingChain one_edge_chain() { return GeneratingChain({{-0.5, 0.0}, {0.5, 0.0}}); }

GeneratingChain chain_from_params(const constructions::TwoEdgeParams<double>& p) {
    // Isosceles notch: equal sides 1/2 over the base x0 = cos c.
    const double depth = 0.5 * std::sin(p.c);
    return GeneratingChain({{-p.x0 / 2, -depth}, {0.0, 0.0}, {p.x0 / 2, -depth}});
}

GeneratingChain chain_from_params(const constructions::ThreeEdgeParams<double>& p) {
    // Trapezoid: sides x1 at angle b, top edge x2 on y = 0.
    const Point p1{-p.x2 / 2, 0.0};
    const Point p2{p.x2 / 2, 0.0};
    return GeneratingChain({p1 - p.x1 * geometry::unit_at(p.b), p1, p2, p2 + p.x1 * Point{std::cos(p.b), -std::sin(p.b)}});
}

GeneratingChain chain_from_params(const constructions::FourEdgeParams<double>& p) {
    const Point p1 = -p.x3 * geometry::unit_at(p.c);
    const Point p3 = p.x3 * Point{std::cos(p.c), -std::sin(p.c)};
    const double bc = p.b + p.c;
    return GeneratingChain({p1 - p.x1 * geometry::unit_at(bc), p1, {0.0, 0.0}, p3,
                            p3 + p.x1 * Point{std::cos(bc), -std::sin(bc)}});
}

nlohmann::json chain_to_json(const GeneratingChain& chain, bool halfchain_form) {
    if (halfchain_form) {
        nlohmann::json half = nlohmann::json::array();
        for (const auto& e : chain.to_halfchain()) half.push_back({{"len", e.len}, {"turn", e.turn}});
        return {{"halfchain", half}};
    }
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& p : chain.vertices()) verts.push_back({p.x, p.y});
    return {{"vertices", verts}};
}

GeneratingChain chain_from_json(const nlohmann::json& j) {
    try {
        if (j.contains("halfchain")) {
            std::vector<HalfEdge> half;
            for (const auto& e : j.at("halfchain")) half.push_back({e.at("len").get<double>(), e.at("turn").get<double>()});
            return GeneratingChain::from_halfchain(half);
        }
        if (j.contains("vertices")) {
            std::vector<Point> pts;
            for (const auto& v : j.at("vertices")) pts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
            return GeneratingChain(std::move(pts));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed chain JSON: ") + e.what());
    }
    throw DomainError("chain JSON needs \"halfchain\" or \"vertices\"");
}

}  // namespace ucover::involute
