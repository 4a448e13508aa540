#include "ucover/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "ucover/error.hpp"
#include "ucover/geometry/io.hpp"

namespace ucover::verify {
namespace {

using geometry::ArcPath;
using geometry::ArcSegment;
using geometry::LineSegment;
using geometry::Piece;

constexpr double kJunctionTol = 1e-9;

std::size_t leading_segments(const ArcPath& path) {
    std::size_t k = 0;
    while (k < path.size() && !geometry::is_arc(path.pieces[k])) ++k;
    return k;
}

ArcPath scale_path(const ArcPath& path, Point about, double factor) {
    ArcPath out;
    for (const auto& piece : path.pieces) {
        if (const auto* seg = std::get_if<LineSegment>(&piece)) {
            out.pieces.push_back(LineSegment{about + factor * (seg->a - about), about + factor * (seg->b - about)});
        } else {
            auto arc = std::get<ArcSegment>(piece);
            arc.center = about + factor * (arc.center - about);
            arc.radius *= factor;
            out.pieces.push_back(arc);
        }
    }
    return out;
}

// Partners in tie-break order, stopping after the first when `first_only`.
std::vector<UpperPoint> partners(const CoverShape& shape, const UpperPoint& p, double l, double eps, bool first_only) {
    const auto hits = geometry::circle_path_hits(p.point, l, shape.upper());
    std::vector<UpperPoint> ordered;
    ordered.reserve(hits.size());
    const Half prefer = p.half == Half::right ? Half::left : p.half == Half::left ? Half::right : Half::apex;
    auto half_of = [&](const geometry::PathHit& h) {
        if (geometry::distance(h.point, shape.apex()) <= kJunctionTol) return Half::apex;
        return h.piece < shape.apex_piece() ? Half::right : Half::left;
    };
    for (const auto& h : hits)
        if (half_of(h) == prefer) ordered.push_back({h.point, prefer});
    for (const auto& h : hits)
        if (half_of(h) != prefer) ordered.push_back({h.point, half_of(h)});

    std::vector<UpperPoint> out;
    for (const auto& q : ordered) {
        if (std::abs(geometry::distance(p.point, q.point) - l) > kLengthMatchTol) continue;
        if (!geometry::segment_inside(shape.region(), p.point, q.point, eps)) continue;
        out.push_back(q);
        if (first_only) break;
    }
    return out;
}

}  // namespace

CoverShape::CoverShape(geometry::Region region, geometry::ArcPath upper, Point apex)
    : region_(std::move(region)), upper_(std::move(upper)), apex_(apex) {
    if (upper_.empty()) throw GeometryError("cover upper boundary is empty");
    std::size_t k = 0;
    while (k < upper_.size() && geometry::distance(geometry::piece_start(upper_.pieces[k]), apex_) > kJunctionTol) ++k;
    if (k == 0 || k == upper_.size()) {
        throw GeometryError("apex is not an interior junction of the upper boundary");
    }
    apex_piece_ = k;
}

CoverShape CoverShape::from_bundle(const involute::CoverBundle& bundle) {
    return CoverShape(bundle.region, bundle.upper_path(), bundle.apex);
}

CoverShape CoverShape::from_json(const nlohmann::json& j) {
    geometry::Region region = geometry::region_from_json(j);
    const ArcPath& boundary = region.boundary();
    std::size_t k = leading_segments(boundary);
    try {
        if (j.contains("chain_pieces")) k = j.at("chain_pieces").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw GeometryError(std::string("malformed cover JSON: ") + e.what());
    }
    if (k == 0 || k >= boundary.size()) throw GeometryError("cover JSON: chain must be a proper prefix of the pieces");
    ArcPath upper;
    upper.pieces.assign(boundary.pieces.begin() + static_cast<std::ptrdiff_t>(k), boundary.pieces.end());
    Point apex = upper.start();
    if (j.contains("apex")) {
        try {
            apex = {j.at("apex").at(0).get<double>(), j.at("apex").at(1).get<double>()};
        } catch (const nlohmann::json::exception& e) {
            throw GeometryError(std::string("malformed cover JSON apex: ") + e.what());
        }
    } else {
        for (std::size_t i = 1; i < upper.size(); ++i) {
            const Point q = geometry::piece_start(upper.pieces[i]);
            if (q.y > apex.y || i == 1) apex = q;
        }
    }
    return CoverShape(std::move(region), std::move(upper), apex);
}

nlohmann::json cover_to_json(const involute::CoverBundle& bundle, const std::string& kind) {
    nlohmann::json j = geometry::region_to_json(bundle.region);
    j["kind"] = kind;
    j["apex"] = {bundle.apex.x, bundle.apex.y};
    j["chain_pieces"] = bundle.chain.edge_count();
    return j;
}

std::vector<UpperPoint> upper_samples(const CoverShape& shape, std::size_t np) {
    const ArcPath& path = shape.upper();
    std::vector<double> cum{0.0};
    for (const auto& piece : path.pieces) cum.push_back(cum.back() + geometry::piece_length(piece));
    const double total = cum.back();
    const double s_apex = cum[shape.apex_piece()];
    std::vector<UpperPoint> out;
    out.reserve(np + 1);
    for (std::size_t k = 0; k < np; ++k) {
        const double s = total * static_cast<double>(k) / static_cast<double>(np - 1);
        Half half = s < s_apex ? Half::right : Half::left;
        if (std::abs(s - s_apex) <= 1e-12 * total) half = Half::apex;
        Point p = k + 1 == np ? path.end() : k == 0 ? path.start() : path.point_at(s / total);
        out.push_back({p, half});
    }
    out.push_back({shape.apex(), Half::apex});
    return out;
}

std::vector<double> sample_lengths(std::size_t nl) {
    std::vector<double> out;
    for (std::size_t j = 1; j <= nl; ++j) out.push_back(static_cast<double>(j) / static_cast<double>(nl));
    return out;
}

std::vector<UpperPoint> admissible_partners(const CoverShape& shape, const UpperPoint& p, double l, double eps) {
    return partners(shape, p, l, eps, false);
}

VerificationReport verify_reachability(const CoverShape& shape, std::size_t np, std::size_t nl, double eps,
                                       std::size_t diameter_samples) {
    if (np < 16 || nl < 16) throw DomainError("verify: need at least 16 points and 16 lengths");
    const auto points = upper_samples(shape, np);
    const auto lengths = sample_lengths(nl);

    std::vector<Failure> failures;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<Failure> local;
        for (std::size_t i = next++; i < points.size(); i = next++) {
            for (std::size_t j = 0; j < lengths.size(); ++j) {
                if (partners(shape, points[i], lengths[j], eps, true).empty())
                    local.push_back({i, j, points[i].point, lengths[j]});
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        failures.insert(failures.end(), local.begin(), local.end());
    };
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
        return a.p_index != b.p_index ? a.p_index < b.p_index : a.l_index < b.l_index;
    });

    VerificationReport r;
    r.points = points.size();
    r.lengths = lengths.size();
    r.failures = std::move(failures);
    const auto d = verify_diameter(shape, diameter_samples, eps);
    r.diameter = d.diameter;
    r.passed = r.failures.empty() && d.ok;
    return r;
}

DiameterCheck verify_diameter(const CoverShape& shape, std::size_t n, double eps) {
    if (n < 64) throw DomainError("verify: need at least 64 diameter samples");
    const double d = geometry::region_diameter(shape.region(), n);
    return {d, d <= 1.0 + eps};
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures) fails.push_back({{"p", {f.p.x, f.p.y}}, {"l", f.l}});
    return {{"points", r.points}, {"lengths", r.lengths}, {"failures", fails}, {"diameter", r.diameter}, {"passed", r.passed}};
}

Fold fold_rule(const CoverShape& shape, const Rule& rule, std::uint64_t seed, double eps) {
    if (rule.empty()) throw DomainError("fold: rule has no segments");
    for (double l : rule)
        if (!(l > 0 && l <= 1)) throw DomainError("fold: segment lengths must lie in (0, 1]");
    std::mt19937_64 rng(seed);
    UpperPoint p{shape.u(), Half::left};
    Fold fold{p.point};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const auto options = partners(shape, p, rule[i], eps, seed == 0);
        if (options.empty()) {
            std::ostringstream os;
            os << "fold: no admissible joint for segment " << i << " from (" << p.point.x << ", " << p.point.y << ")";
            throw FoldError(os.str(), i);
        }
        std::size_t pick = 0;
        if (seed != 0) pick = std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng);
        p = options[pick];
        fold.push_back(p.point);
    }
    return fold;
}

std::optional<std::string> check_fold(const CoverShape& shape, const Rule& rule, const Fold& fold, double eps) {
    if (fold.size() != rule.size() + 1) return "fold has " + std::to_string(fold.size()) + " joints for " +
                                                std::to_string(rule.size()) + " segments";
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double len = geometry::distance(fold[i], fold[i + 1]);
        if (std::abs(len - rule[i]) > kLengthMatchTol) {
            return "segment " + std::to_string(i) + " has length " + std::to_string(len);
        }
        if (!geometry::segment_inside(shape.region(), fold[i], fold[i + 1], eps)) {
            return "segment " + std::to_string(i) + " leaves the region";
        }
    }
    return std::nullopt;
}

Point centroid(const geometry::Region& region) {
    const auto pts = geometry::polygonize(region.boundary(), 0.01);
    double a = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point p = pts[i];
        const Point q = pts[(i + 1) % pts.size()];
        const double w = geometry::cross(p, q);
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    return {cx / (3 * a), cy / (3 * a)};
}

CoverShape shrunk(const CoverShape& shape, double factor) {
    const Point c = centroid(shape.region());
    return CoverShape(geometry::scaled(shape.region(), c, factor), scale_path(shape.upper(), c, factor),
                      c + factor * (shape.apex() - c));
}

CoverShape notched_r2(double depth) {
    using geometry::kPi;
    constexpr double kCut = 0.15;  // angular distance of the notch rim from the apex
    const Point u{-0.5, 0.0};
    const Point v{0.5, 0.0};
    const ArcSegment right{u, 1.0, 0.0, kPi / 3 - kCut, true};
    const ArcSegment left{v, 1.0, 2 * kPi / 3 + kCut, kPi, true};
    const Point bottom{0.0, std::sqrt(3.0) / 2 - depth};
    if (!(bottom.y < geometry::piece_end(right).y)) throw DomainError("notch too shallow to be concave");
    ArcPath upper;
    upper.pieces = {right, LineSegment{geometry::piece_end(right), bottom},
                    LineSegment{bottom, geometry::piece_start(left)}, left};
    ArcPath boundary;
    boundary.pieces.push_back(LineSegment{u, v});
    boundary.pieces.insert(boundary.pieces.end(), upper.pieces.begin(), upper.pieces.end());
    return CoverShape(geometry::Region::from_boundary(std::move(boundary)), std::move(upper), bottom);
}

}  // namespace ucover::verify
