#include "ucover/search.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "ucover/smooth.hpp"

namespace ucover::search {
namespace {

constexpr double kMinFraction = 1e-6;
constexpr double kFlatTurn = 0.1;
// Native optimum of the smooth cut; only used to seed the search.
constexpr double kSmoothWarmStartA = 1.1107321367714721;

void normalize(std::vector<double>& f) {
    double sum = 0.0;
    for (double v : f) sum += v;
    for (double& v : f) v /= sum;
}

}  // namespace

void validate_config(const SearchConfig& cfg) {
    if (cfg.edges < 1) throw DomainError("search: need at least one edge");
    if (cfg.iterations < 1) throw DomainError("search: need at least one iteration");
    if (!(cfg.initial_step > 0)) throw DomainError("search: initial step must be positive");
    if (!(cfg.decay > 0 && cfg.decay <= 1)) throw DomainError("search: step decay must lie in (0, 1]");
}

std::size_t HalfChainParams::free_count() const {
    const std::size_t nf = fractions.size() > 1 ? fractions.size() : 0;
    const std::size_t nt = odd ? turns.size() - 1 : turns.size();
    return nf + nt;
}

involute::GeneratingChain to_chain(const HalfChainParams& p) {
    std::vector<involute::HalfEdge> half;
    for (std::size_t k = 0; k < p.fractions.size(); ++k) {
        const bool axis_edge = p.odd && k + 1 == p.fractions.size();
        half.push_back({p.fractions[k] / 2, axis_edge ? 0.0 : p.turns[k]});
    }
    return involute::GeneratingChain::from_halfchain(half);
}

HalfChainParams from_chain(const involute::GeneratingChain& chain) {
    HalfChainParams p;
    p.odd = chain.edge_count() % 2 == 1;
    for (const auto& e : chain.to_halfchain()) {
        p.fractions.push_back(2 * e.len);
        p.turns.push_back(e.turn);
    }
    normalize(p.fractions);
    return p;
}

HalfChainParams initial_params(std::size_t edges) {
    if (edges < 1) throw DomainError("search: need at least one edge");
    if (edges >= 4) {
        const auto co = smooth::solve_coefficients(kSmoothWarmStartA);
        return from_chain(smooth::discretize_smooth(co, edges));
    }
    HalfChainParams p;
    p.odd = edges % 2 == 1;
    const std::size_t m = (edges + 1) / 2;
    // Fractions of full edges are 2/n; the odd middle half-edge carries 1/n.
    for (std::size_t k = 0; k < m; ++k) {
        const bool axis_edge = p.odd && k + 1 == m;
        p.fractions.push_back(axis_edge ? 1.0 / edges : 2.0 / edges);
        p.turns.push_back(axis_edge || edges == 1 ? 0.0 : kFlatTurn);
    }
    return p;
}

HalfChainParams perturb(const HalfChainParams& p, double step, std::mt19937_64& rng) {
    const std::size_t free = p.free_count();
    if (step == 0.0 || free == 0) return p;
    HalfChainParams out = p;
    std::uniform_int_distribution<std::size_t> pick(0, free - 1);
    std::uniform_real_distribution<double> delta(-step, step);
    std::size_t idx = pick(rng);
    const double d = delta(rng);
    const std::size_t nf = p.fractions.size() > 1 ? p.fractions.size() : 0;
    if (idx < nf) {
        out.fractions[idx] = std::max(kMinFraction, out.fractions[idx] + d);
        normalize(out.fractions);
    } else {
        idx -= nf;
        out.turns[idx] = std::max(0.0, out.turns[idx] + d);
    }
    return out;
}

double evaluate(const HalfChainParams& p) {
    try {
        return involute::involute_area(to_chain(p));
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

SearchTrace local_search(const SearchConfig& cfg) {
    validate_config(cfg);
    SearchTrace trace;
    trace.best_params = initial_params(cfg.edges);
    trace.best = evaluate(trace.best_params);
    if (!std::isfinite(trace.best)) throw DomainError("search: no admissible starting chain");
    trace.best_area.reserve(cfg.iterations + 1);
    trace.best_area.push_back(trace.best);

    std::mt19937_64 rng(cfg.seed);
    const std::size_t rounds = cfg.restarts + 1;
    const std::size_t per_round = (cfg.iterations + rounds - 1) / rounds;
    double step = cfg.initial_step;
    for (std::size_t it = 1; it <= cfg.iterations; ++it) {
        if ((it - 1) % per_round == 0) step = cfg.initial_step;
        HalfChainParams cand = perturb(trace.best_params, step, rng);
        const double area = evaluate(cand);
        if (area < trace.best) {
            trace.best = area;
            trace.best_params = std::move(cand);
            step *= cfg.decay;
            ++trace.accepted;
        }
        trace.best_area.push_back(trace.best);
    }
    trace.best_chain = to_chain(trace.best_params);
    return trace;
}

void write_trace_csv(std::ostream& os, const SearchTrace& trace) {
    os << "iteration,best_area\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < trace.best_area.size(); ++i) os << i << ',' << trace.best_area[i] << '\n';
}

}  // namespace ucover::search
