#include "ucover/cli/app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ucover/cli/svg.hpp"
#include "ucover/constructions.hpp"
#include "ucover/error.hpp"
#include "ucover/involute.hpp"
#include "ucover/search.hpp"
#include "ucover/smooth.hpp"
#include "ucover/verify.hpp"

namespace ucover::cli {
namespace {

using numerics::BigReal;

constexpr int kNativeDigits = 15;
constexpr const char* kSmoothA = "1.11073213677147211458454234766";
constexpr double kThreeA = 0.575939;
constexpr double kThreeB = 0.519805;
constexpr double kFourA = 0.488669;
constexpr double kFourB = 0.423144;
constexpr double kFourC = 0.189158;

struct Flags {
    std::string kind;
    std::optional<std::string> a, b, c;
    unsigned digits = 0;  // 0: native doubles
    std::size_t edges = 0;
    std::uint64_t seed = 1;
    std::size_t iterations = 20000;
    std::string in;
    std::string out;
    std::size_t points = 256;
    std::size_t lengths = 256;
    double eps = geometry::kBoundaryEps;
    double size = 512;
    double stroke = 1.5;
    std::string trace;
};

// Key/value lines with an explicit digit count.
class Printer {
public:
    Printer(std::ostream& os, int digits) : os_(os), digits_(digits) {}
    void line(const std::string& key, double v) {
        os_ << key << " = " << std::setprecision(digits_) << v << '\n';
    }
    void line(const std::string& key, const BigReal& v) { os_ << key << " = " << v.str(digits_) << '\n'; }

private:
    std::ostream& os_;
    int digits_;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot open '" + path + "' for writing");
    f << text;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
}

double angle_or(const std::optional<std::string>& s, double fallback) {
    if (!s) return fallback;
    try {
        return std::stod(*s);
    } catch (const std::exception&) {
        throw DomainError("not a number: '" + *s + "'");
    }
}

// Summaries go to stdout unless stdout carries the JSON.
std::ostream& summary_stream(const Flags& f, std::ostream& out, std::ostream& err) {
    return f.out.empty() || f.out == "-" ? err : out;
}

int construct(const Flags& f, std::ostream& out, std::ostream& err) {
    std::ostream& info = summary_stream(f, out, err);
    Printer pr(info, f.digits ? static_cast<int>(f.digits) - 2 : kNativeDigits);
    involute::GeneratingChain chain;
    nlohmann::json params{{"kind", f.kind}};
    auto set_params = [&](std::vector<double> angles, std::vector<double> lengths, double area) {
        params["angles"] = std::move(angles);
        params["lengths"] = std::move(lengths);
        params["area"] = area;
    };
    if (f.kind == "r2") {
        chain = involute::one_edge_chain();
        pr.line("area", constructions::r2_area<double>());
        set_params({}, {1.0}, constructions::r2_area<double>());
    } else if (f.kind == "two") {
        const auto p = constructions::solve_two_edge(angle_or(f.a, std::acos(0.75)));
        chain = involute::chain_from_params(p);
        pr.line("a", p.a);
        pr.line("c", p.c);
        pr.line("area", constructions::two_edge_area(p));
        set_params({p.a, p.c}, {p.x0}, constructions::two_edge_area(p));
    } else if (f.kind == "three") {
        const auto p = constructions::solve_three_edge(angle_or(f.a, kThreeA), angle_or(f.b, kThreeB));
        chain = involute::chain_from_params(p);
        pr.line("a", p.a);
        pr.line("b", p.b);
        pr.line("area", constructions::three_edge_area(p));
        set_params({p.a, p.b}, {p.x0, p.x1, p.x2}, constructions::three_edge_area(p));
    } else if (f.kind == "four") {
        const auto p =
            constructions::solve_four_edge(angle_or(f.a, kFourA), angle_or(f.b, kFourB), angle_or(f.c, kFourC));
        chain = involute::chain_from_params(p);
        pr.line("a", p.a);
        pr.line("b", p.b);
        pr.line("c", p.c);
        pr.line("area", constructions::four_edge_area(p));
        set_params({p.a, p.b, p.c}, {p.x0, p.x1, p.x2, p.x3}, constructions::four_edge_area(p));
    } else {
        const std::string a_text = f.a.value_or(kSmoothA);
        if (f.digits) {
            numerics::PrecisionScope scope(f.digits);
            const auto co = smooth::solve_coefficients(BigReal(a_text));
            pr.line("a", co.a);
            pr.line("b0", co.b0);
            pr.line("b1", co.b1);
            pr.line("b2", co.b2);
            pr.line("area", smooth::smooth_area(co));
        }
        const auto co = smooth::solve_coefficients(angle_or(a_text, 0.0));
        if (!smooth::speed_positive(co)) throw DomainError("smooth cut: speed g(t) is not positive on (-a, a)");
        if (!f.digits) {
            pr.line("a", co.a);
            pr.line("b0", co.b0);
            pr.line("b1", co.b1);
            pr.line("b2", co.b2);
            pr.line("area", smooth::smooth_area(co));
        }
        set_params({co.a}, {co.b}, smooth::smooth_area(co));
        params["coefficients"] = {co.b0, co.b1, co.b2};
        chain = smooth::discretize_smooth(co, f.edges ? f.edges : 512);
    }
    const auto bundle = involute::involute_cover(chain);
    Printer(info, kNativeDigits).line("region_area", bundle.area);
    auto j = verify::cover_to_json(bundle, f.kind);
    j["params"] = params;
    write_text(f.out, j.dump(2) + "\n", out);
    return kExitOk;
}

int optimize(const Flags& f, std::ostream& out) {
    Printer pr(out, f.digits ? static_cast<int>(f.digits) - 2 : kNativeDigits);
    if (f.kind == "smooth") {
        if (f.digits) {
            // Guard digits: the minimizer resolves about half the working digits
            // from function values before its derivative stage.
            numerics::PrecisionScope scope(2 * f.digits + 10);
            const auto opt = smooth::optimize_smooth<BigReal>(BigReal::pow10(-static_cast<int>(f.digits)));
            pr.line("a", opt.a);
            pr.line("b0", opt.coefficients.b0);
            pr.line("b1", opt.coefficients.b1);
            pr.line("b2", opt.coefficients.b2);
            pr.line("area", opt.area);
        } else {
            const auto opt = smooth::optimize_smooth<double>(1e-12);
            pr.line("a", opt.a);
            pr.line("b0", opt.coefficients.b0);
            pr.line("b1", opt.coefficients.b1);
            pr.line("b2", opt.coefficients.b2);
            pr.line("area", opt.area);
        }
        return kExitOk;
    }
    if (f.kind == "r2") {
        pr.line("area", constructions::r2_area<double>());
        return kExitOk;
    }
    const auto kind = f.kind == "two" ? constructions::CutKind::two
                      : f.kind == "three" ? constructions::CutKind::three
                                          : constructions::CutKind::four;
    const auto opt = constructions::optimize_construction(kind);
    static const char* names[] = {"a", "b", "c"};
    for (std::size_t i = 0; i < opt.angles.size(); ++i) pr.line(names[i], opt.angles[i]);
    if (kind == constructions::CutKind::two) pr.line("c", std::get<constructions::TwoEdgeParams<double>>(opt.params).c);
    pr.line("area", opt.area);
    return kExitOk;
}

int run_search(const Flags& f, std::ostream& out, std::ostream& err) {
    search::SearchConfig cfg;
    cfg.edges = f.edges ? f.edges : 2;
    cfg.iterations = f.iterations;
    cfg.seed = f.seed;
    const auto trace = search::local_search(cfg);
    std::ostream& info = summary_stream(f, out, err);
    Printer pr(info, kNativeDigits);
    pr.line("edges", static_cast<double>(cfg.edges));
    pr.line("best_area", trace.best);
    if (!f.trace.empty()) {
        std::ostringstream csv;
        search::write_trace_csv(csv, trace);
        write_text(f.trace, csv.str(), out);
    }
    write_text(f.out, involute::chain_to_json(trace.best_chain, true).dump(2) + "\n", out);
    return kExitOk;
}

int run_verify(const Flags& f, std::ostream& out) {
    const auto shape = verify::CoverShape::from_json(read_json(f.in));
    const auto report = verify::verify_reachability(shape, f.points, f.lengths, f.eps);
    write_text(f.out, verify::report_to_json(report).dump(2) + "\n", out);
    return kExitOk;
}

int render(const Flags& f, std::ostream& out) {
    write_text(f.out, render_svg(read_json(f.in), {f.size, f.stroke}), out);
    return kExitOk;
}

int reproduce(const Flags& f, std::ostream& out) {
    out << smooth::reproduce_appendix(f.digits ? f.digits : 30);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Universal covers for carpenter's rule folding", "cover"};
    app.require_subcommand(1, 1);
    Flags f;

    auto* construct_cmd = app.add_subcommand("construct", "Build a cover and write its JSON");
    construct_cmd->add_option("--kind", f.kind)->required()->check(CLI::IsMember({"r2", "two", "three", "four", "smooth"}));
    construct_cmd->add_option("--a", f.a);
    construct_cmd->add_option("--b", f.b);
    construct_cmd->add_option("--c", f.c);
    construct_cmd->add_option("--digits", f.digits)->check(CLI::Range(16u, 2000u));
    construct_cmd->add_option("--edges", f.edges, "Edges of the discretized smooth cut")->check(CLI::Range(2, 1000000));
    construct_cmd->add_option("--out", f.out);

    auto* optimize_cmd = app.add_subcommand("optimize", "Minimize the area of a construction");
    optimize_cmd->add_option("--kind", f.kind)->required()->check(CLI::IsMember({"r2", "two", "three", "four", "smooth"}));
    optimize_cmd->add_option("--digits", f.digits)->check(CLI::Range(16u, 2000u));

    auto* search_cmd = app.add_subcommand("search", "Local search over n-edge chains");
    search_cmd->add_option("--edges", f.edges)->check(CLI::Range(1, 100000));
    search_cmd->add_option("--iterations", f.iterations)->check(CLI::Range(1, 1000000000));
    search_cmd->add_option("--seed", f.seed);
    search_cmd->add_option("--trace", f.trace, "CSV trace path");
    search_cmd->add_option("--out", f.out, "Best chain JSON path");

    auto* verify_cmd = app.add_subcommand("verify", "Check reachability and diameter of a cover");
    verify_cmd->add_option("--in", f.in)->required();
    verify_cmd->add_option("--points", f.points)->check(CLI::Range(16, 1000000));
    verify_cmd->add_option("--lengths", f.lengths)->check(CLI::Range(16, 1000000));
    verify_cmd->add_option("--eps", f.eps)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", f.out);

    auto* render_cmd = app.add_subcommand("render", "Draw a cover as SVG");
    render_cmd->add_option("--in", f.in)->required();
    render_cmd->add_option("--out", f.out);
    render_cmd->add_option("--size", f.size)->check(CLI::PositiveNumber);
    render_cmd->add_option("--stroke", f.stroke)->check(CLI::PositiveNumber);

    auto* reproduce_cmd = app.add_subcommand("reproduce-smooth", "High-precision smooth-cut report");
    reproduce_cmd->add_option("--digits", f.digits)->check(CLI::Range(20u, 2000u));

    std::vector<const char*> argv{"cover"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << kGrammar << '\n';
        return kExitUsage;
    }

    try {
        if (*construct_cmd) return construct(f, out, err);
        if (*optimize_cmd) return optimize(f, out);
        if (*search_cmd) return run_search(f, out, err);
        if (*verify_cmd) return run_verify(f, out);
        if (*render_cmd) return render(f, out);
        if (*reproduce_cmd) return reproduce(f, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    err << kGrammar << '\n';
    return kExitUsage;
}

}  // namespace ucover::cli
