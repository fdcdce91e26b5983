// Command line front end: counting tables, shape tables, asymptotics grids,
// exact-vs-asymptotic comparison data, and the oracle validation suite.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jointgf/asymptotics.hpp"
#include "jointgf/errors.hpp"
#include "jointgf/joint.hpp"
#include "jointgf/oracle.hpp"
#include "jointgf/secondary.hpp"
#include "jointgf/serialize.hpp"
#include "jointgf/shapes.hpp"

namespace {

using jointgf::OrderedJson;
using jointgf::StructureParams;

struct CommonOptions {
    std::string format = "csv";
    std::string output_path;
    int precision_digits = 50;
    int decimals = 6;
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_precision_default() {
    if (const char* env = std::getenv("JOINTGF_PRECISION")) {
        const int value = std::atoi(env);
        if (value >= 20)
            return value;
    }
    return 50;
}

void add_common_options(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("-o,--output", opts.output_path, "Write output to a file instead of stdout");
    cmd.add_option("--precision", opts.precision_digits,
                   "Working precision in significant decimal digits")
        ->check(CLI::Range(20, 2000))
        ->capture_default_str();
    cmd.add_option("--decimals", opts.decimals, "Decimal places for reals in CSV output")
        ->check(CLI::Range(0, 200))
        ->capture_default_str();
    cmd.add_flag("--timing", opts.timing, "Log elapsed time to stderr");
}

void emit(const CommonOptions& opts, const std::string& text) {
    if (opts.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + opts.output_path);
    out << text;
}

std::string render_json(const OrderedJson& j) {
    return j.dump(2) + "\n";
}

// "a..b" or a single number
std::pair<int, int> parse_range(const std::string& text) {
    try {
        const auto pos = text.find("..");
        if (pos == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
    } catch (const std::exception&) {
        throw UsageError("not a number or range a..b: '" + text + "'");
    }
}

OrderedJson params_json(const StructureParams& p) {
    return OrderedJson{{"sigma", p.sigma}, {"tau", p.tau}, {"lambda", p.lambda}};
}

// "sigma=S,tau=T,lambda=L" in any order; individually passed flags win
void apply_params_spec(const std::string& spec, StructureParams& params, const CLI::App& cmd) {
    std::istringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw jointgf::PreconditionError("malformed --params entry: '" + item + "'");
        const std::string key = item.substr(0, eq);
        const int value = std::stoi(item.substr(eq + 1));
        if (key == "sigma" && cmd.count("--sigma") == 0)
            params.sigma = value;
        else if (key == "tau" && cmd.count("--tau") == 0)
            params.tau = value;
        else if (key == "lambda" && cmd.count("--lambda") == 0)
            params.lambda = value;
        else if (key != "sigma" && key != "tau" && key != "lambda")
            throw jointgf::PreconditionError("unknown --params key: '" + key + "'");
    }
}

int run_count(const CommonOptions& opts, const StructureParams& params, int total,
              const std::vector<int>& box) {
    if (total < 0 && box.empty())
        throw jointgf::PreconditionError("one of --total or --box required");
    std::ostringstream out;
    if (total >= 0) {
        if (params.sigma != params.tau)
            throw jointgf::PreconditionError("sigma == tau violated (univariate counts)");
        const auto counts =
            jointgf::joint_counts_by_recurrence(params.sigma, total, params.lambda);
        if (opts.format == "csv") {
            out << "s,count\n";
            for (int s = 1; s <= total; ++s)
                out << s << "," << counts[static_cast<std::size_t>(s)].get_str() << "\n";
        } else {
            OrderedJson counts_json = OrderedJson::array();
            for (int s = 1; s <= total; ++s)
                counts_json.push_back(counts[static_cast<std::size_t>(s)].get_str());
            OrderedJson j{{"command", "count"},
                          {"params", params_json(params)},
                          {"total", total},
                          {"counts", std::move(counts_json)}};
            out << render_json(j);
        }
    } else {
        const jointgf::TrivariateSeries::Bounds bounds{box[0], box[1], box[2]};
        const auto gf = jointgf::joint_gf(params, bounds);
        if (opts.format == "csv") {
            out << "n,m,h,count\n";
            for (int n = 0; n <= bounds[0]; ++n)
                for (int m = 0; m <= bounds[1]; ++m)
                    for (int h = 0; h <= bounds[2]; ++h)
                        if (sgn(gf.coeff(n, m, h)) != 0)
                            out << n << "," << m << "," << h << ","
                                << jointgf::rational_to_string(gf.coeff(n, m, h)) << "\n";
        } else {
            OrderedJson j{{"command", "count"},
                          {"params", params_json(params)},
                          {"box", {bounds[0], bounds[1], bounds[2]}},
                          {"counts", jointgf::series_to_json(gf)["entries"]}};
            out << render_json(j);
        }
    }
    emit(opts, out.str());
    return 0;
}

int run_secondary(const CommonOptions& opts, int sigma, int lambda, int order) {
    const auto counts = jointgf::secondary_counts(sigma, lambda, order);
    std::ostringstream out;
    if (opts.format == "csv") {
        out << "n,count\n";
        for (int n = 0; n <= order; ++n)
            out << n << "," << counts[static_cast<std::size_t>(n)].get_str() << "\n";
    } else {
        OrderedJson counts_json = OrderedJson::array();
        for (const auto& c : counts)
            counts_json.push_back(c.get_str());
        OrderedJson j{{"command", "secondary"},
                      {"sigma", sigma},
                      {"lambda", lambda},
                      {"order", order},
                      {"counts", std::move(counts_json)}};
        out << render_json(j);
    }
    emit(opts, out.str());
    return 0;
}

int run_shapes(const CommonOptions& opts, int max_arcs) {
    const jointgf::TrivariateSeries::Bounds bounds{max_arcs, max_arcs, max_arcs};
    const auto gf = jointgf::shape_gf(bounds);
    std::ostringstream out;
    if (opts.format == "csv") {
        out << "t1,t2,h,count\n";
        for (int t1 = 0; t1 <= max_arcs; ++t1)
            for (int t2 = 0; t2 <= max_arcs; ++t2)
                for (int h = 0; h <= max_arcs; ++h) {
                    if (t1 + t2 + h > max_arcs)
                        continue;
                    if (sgn(gf.coeff(t1, t2, h)) != 0)
                        out << t1 << "," << t2 << "," << h << ","
                            << jointgf::rational_to_string(gf.coeff(t1, t2, h)) << "\n";
                }
    } else {
        OrderedJson entries = OrderedJson::array();
        for (int t1 = 0; t1 <= max_arcs; ++t1)
            for (int t2 = 0; t2 <= max_arcs; ++t2)
                for (int h = 0; h <= max_arcs; ++h) {
                    if (t1 + t2 + h > max_arcs || sgn(gf.coeff(t1, t2, h)) == 0)
                        continue;
                    entries.push_back(OrderedJson{{"t1", t1},
                                                  {"t2", t2},
                                                  {"h", h},
                                                  {"count", jointgf::rational_to_string(
                                                                gf.coeff(t1, t2, h))}});
                }
        OrderedJson j{{"command", "shapes"},
                      {"max_arcs", max_arcs},
                      {"entries", std::move(entries)}};
        out << render_json(j);
    }
    emit(opts, out.str());
    return 0;
}

int run_asymptotics(const CommonOptions& opts, const std::string& sigma_range,
                    const std::string& lambda_range) {
    const auto [sigma_lo, sigma_hi] = parse_range(sigma_range);
    const auto [lambda_lo, lambda_hi] = parse_range(lambda_range);
    std::vector<jointgf::SingularityReport> reports;
    for (int lambda = lambda_lo; lambda <= lambda_hi; ++lambda)
        for (int sigma = sigma_lo; sigma <= sigma_hi; ++sigma)
            reports.push_back(jointgf::singularity_report(sigma, lambda));

    std::ostringstream out;
    if (opts.format == "csv") {
        out << "sigma,lambda,applicable,growth_rate,gamma,constant\n";
        for (const auto& r : reports) {
            out << r.sigma << "," << r.lambda << "," << (r.applicable ? 1 : 0) << ",";
            if (r.applicable)
                out << jointgf::format_real(r.growth_rate, 5) << ","
                    << jointgf::format_real(r.gamma, opts.decimals) << ","
                    << jointgf::format_real(r.constant, 7);
            else
                out << ",,";
            out << "\n";
        }
    } else {
        if (reports.size() == 1) {
            out << render_json(jointgf::report_to_json(reports.front()));
        } else {
            OrderedJson arr = OrderedJson::array();
            for (const auto& r : reports)
                arr.push_back(jointgf::report_to_json(r));
            OrderedJson j{{"command", "asymptotics"}, {"reports", std::move(arr)}};
            out << render_json(j);
        }
    }
    emit(opts, out.str());
    return 0;
}

int run_compare(const CommonOptions& opts, int sigma, int lambda, int s_max) {
    const auto rows = jointgf::compare_exact_vs_asymptotic(sigma, lambda, s_max);
    std::ostringstream out;
    if (opts.format == "csv") {
        out << "s,exact,estimate,ratio\n";
        for (const auto& row : rows)
            out << row.s << "," << row.exact.get_str() << ","
                << jointgf::format_real(row.estimate, opts.decimals) << ","
                << jointgf::format_real(row.ratio, opts.decimals) << "\n";
    } else {
        OrderedJson arr = OrderedJson::array();
        for (const auto& row : rows)
            arr.push_back(
                OrderedJson{{"s", row.s},
                            {"exact", row.exact.get_str()},
                            {"estimate", jointgf::format_real(row.estimate, opts.decimals)},
                            {"ratio", jointgf::format_real(row.ratio, opts.decimals)}});
        OrderedJson j{{"command", "compare"},
                      {"sigma", sigma},
                      {"lambda", lambda},
                      {"s_max", s_max},
                      {"rows", std::move(arr)}};
        out << render_json(j);
    }
    emit(opts, out.str());
    return 0;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string details;
};

int run_validate(const CommonOptions& opts, int max_size) {
    std::vector<CheckResult> checks;
    auto record = [&](const std::string& name, bool passed, const std::string& details) {
        checks.push_back({name, passed, details});
    };

    // secondary-structure counts against the generating-function route
    {
        bool ok = true;
        std::string detail;
        for (int sigma = 1; sigma <= 2 && ok; ++sigma)
            for (int lambda = 1; lambda <= 2 && ok; ++lambda) {
                const auto counts = jointgf::secondary_counts(sigma, lambda, max_size);
                for (int n = 0; n <= max_size && ok; ++n) {
                    const auto brute = jointgf::count_secondary_structures(n, sigma, lambda);
                    if (counts[static_cast<std::size_t>(n)] !=
                        jointgf::Integer(static_cast<unsigned long>(brute))) {
                        ok = false;
                        detail = "mismatch at sigma=" + std::to_string(sigma) +
                                 " lambda=" + std::to_string(lambda) + " n=" + std::to_string(n);
                    }
                }
            }
        record("secondary_counts_vs_gf", ok,
               ok ? "sigma,lambda in {1,2}^2, n <= " + std::to_string(max_size) : detail);
    }

    // joint-structure counts against the trivariate generating function
    {
        bool ok = true;
        std::string detail;
        const std::vector<StructureParams> param_sets = {
            {1, 1, 2}, {2, 2, 2}, {1, 1, 1}, {2, 2, 3}};
        for (const auto& params : param_sets) {
            const jointgf::TrivariateSeries::Bounds bounds{max_size, max_size,
                                                           max_size / 2 + 1};
            const auto gf = jointgf::joint_gf(params, bounds);
            for (int n = 0; n <= max_size && ok; ++n)
                for (int m = 0; n + m <= max_size && ok; ++m) {
                    const auto counts = jointgf::count_joint_structures(n, m, params);
                    for (int h = 0; h <= bounds[2] && ok; ++h) {
                        const auto it = counts.find(h);
                        const std::uint64_t brute = it == counts.end() ? 0 : it->second;
                        if (gf.coeff(n, m, h) !=
                            jointgf::Rational(static_cast<unsigned long>(brute))) {
                            ok = false;
                            detail = "mismatch at sigma=" + std::to_string(params.sigma) +
                                     " tau=" + std::to_string(params.tau) +
                                     " lambda=" + std::to_string(params.lambda) + " (n,m,h)=(" +
                                     std::to_string(n) + "," + std::to_string(m) + "," +
                                     std::to_string(h) + ")";
                        }
                    }
                }
        }
        record("joint_counts_vs_gf", ok,
               ok ? "4 parameter sets, n+m <= " + std::to_string(max_size) : detail);
    }

    // shape counts against the shape generating function and its diagonal
    {
        bool ok = true;
        std::string detail;
        const int arcs = 5;
        const auto brute = jointgf::count_shapes(arcs);
        const auto gf = jointgf::shape_gf({arcs, arcs, arcs});
        for (int t1 = 0; t1 <= arcs && ok; ++t1)
            for (int t2 = 0; t1 + t2 <= arcs && ok; ++t2)
                for (int h = 0; t1 + t2 + h <= arcs && ok; ++h) {
                    const auto it = brute.find({t1, t2, h});
                    const std::uint64_t count = it == brute.end() ? 0 : it->second;
                    if (gf.coeff(t1, t2, h) !=
                        jointgf::Rational(static_cast<unsigned long>(count))) {
                        ok = false;
                        detail = "mismatch at (t1,t2,h)=(" + std::to_string(t1) + "," +
                                 std::to_string(t2) + "," + std::to_string(h) + ")";
                    }
                }
        if (ok && gf.diagonal(arcs) != jointgf::shape_gf_by_arcs(arcs)) {
            ok = false;
            detail = "diagonal disagrees with the arc-count series";
        }
        record("shape_counts_vs_gf", ok, ok ? "all shapes with <= 5 arcs" : detail);
    }

    // decomposition round trip over every enumerated joint structure
    {
        bool ok = true;
        std::string detail;
        std::uint64_t visited = 0;
        const StructureParams params{1, 1, 2};
        const int cap = std::min(max_size, 8);
        for (int n = 0; n <= cap && ok; ++n)
            for (int m = 0; n + m <= cap && ok; ++m)
                jointgf::for_each_joint_structure(
                    n, m, params, {}, [&](const jointgf::JointDiagram& d) {
                        if (!ok)
                            return;
                        ++visited;
                        const auto blocks = jointgf::tight_decomposition(d);
                        std::uint64_t ext_in_blocks = 0;
                        int top_covered = 0, bottom_covered = 0;
                        for (const auto& b : blocks) {
                            if (b.top_hi >= b.top_lo)
                                top_covered += b.top_hi - b.top_lo + 1;
                            if (b.bottom_hi >= b.bottom_lo)
                                bottom_covered += b.bottom_hi - b.bottom_lo + 1;
                            if (b.tight())
                                for (const auto& [k, kp] : d.exterior_arcs)
                                    if (k >= b.top_lo && k <= b.top_hi)
                                        ++ext_in_blocks;
                        }
                        if (top_covered != d.top_size || bottom_covered != d.bottom_size ||
                            ext_in_blocks != d.exterior_arcs.size()) {
                            ok = false;
                            detail = "partition failure at n=" + std::to_string(n) +
                                     " m=" + std::to_string(m);
                        }
                    });
        record("tight_decomposition_roundtrip", ok,
               ok ? std::to_string(visited) + " structures checked" : detail);
    }

    // recurrence route against the composition route
    {
        const int order = 30;
        bool ok = true;
        std::string detail;
        for (int sigma = 1; sigma <= 2 && ok; ++sigma) {
            StructureParams params;
            params.sigma = params.tau = sigma;
            const auto series = jointgf::joint_total_gf(params, order);
            const auto rec = jointgf::joint_counts_by_recurrence(sigma, order);
            for (int s = 0; s <= order && ok; ++s)
                if (series.coeff(s) != jointgf::Rational(rec[static_cast<std::size_t>(s)])) {
                    ok = false;
                    detail = "mismatch at sigma=" + std::to_string(sigma) +
                             " s=" + std::to_string(s);
                }
        }
        record("recurrence_vs_composition", ok, ok ? "sigma in {1,2}, s <= 30" : detail);
    }

    bool all_passed = true;
    for (const auto& c : checks)
        all_passed = all_passed && c.passed;

    OrderedJson checks_json = OrderedJson::array();
    for (const auto& c : checks)
        checks_json.push_back(
            OrderedJson{{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
    OrderedJson j{{"command", "validate"},
                  {"max_size", max_size},
                  {"all_passed", all_passed},
                  {"checks", std::move(checks_json)}};
    emit(opts, render_json(j));
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and asymptotics of RNA-RNA interaction structures"};
    app.require_subcommand(1);

    CommonOptions opts;
    opts.precision_digits = env_precision_default();

    StructureParams params;
    int total = -1;
    std::vector<int> box;
    std::string params_spec;
    auto* count = app.add_subcommand("count", "Joint-structure counting tables");
    count->add_option("--sigma", params.sigma, "Minimum interior stack length")
        ->capture_default_str();
    count->add_option("--tau", params.tau, "Minimum exterior stack length (defaults to sigma)");
    count->add_option("--lambda", params.lambda, "Minimum arc length")->capture_default_str();
    count->add_option("--params", params_spec, "Combined form: sigma=S,tau=T,lambda=L");
    count->add_option("--total,--order", total,
                      "Univariate table by total vertex count s = 1..total");
    count->add_option("--box", box, "Trivariate table over the box N,M,H")
        ->expected(3)
        ->delimiter(',');
    add_common_options(*count, opts);

    int sec_sigma = 1, sec_lambda = 2, sec_order = 20;
    auto* secondary = app.add_subcommand("secondary", "Secondary-structure counting tables");
    secondary->add_option("--sigma", sec_sigma, "Minimum stack length")->capture_default_str();
    secondary->add_option("--lambda", sec_lambda, "Minimum arc length")->capture_default_str();
    secondary->add_option("--order", sec_order, "Largest vertex count")->capture_default_str();
    add_common_options(*secondary, opts);

    int max_arcs = 5;
    auto* shapes = app.add_subcommand("shapes", "Shape counting tables by (t1, t2, h)");
    shapes->add_option("--max-arcs", max_arcs, "Largest total arc count")->capture_default_str();
    add_common_options(*shapes, opts);

    std::string sigma_range = "1..9", lambda_range = "2";
    auto* asymptotics = app.add_subcommand("asymptotics", "Growth rates and asymptotic constants");
    asymptotics->add_option("--sigma", sigma_range, "sigma or range a..b")->capture_default_str();
    asymptotics->add_option("--sigma-range", sigma_range, "alias of --sigma");
    asymptotics->add_option("--lambda", lambda_range, "lambda or range a..b")->capture_default_str();
    asymptotics->add_option("--lambda-range", lambda_range, "alias of --lambda");
    add_common_options(*asymptotics, opts);

    int cmp_sigma = 1, cmp_lambda = 2, cmp_smax = 100;
    auto* compare = app.add_subcommand("compare", "Exact counts against the asymptotic formula");
    compare->add_option("--sigma", cmp_sigma, "Stack length (sigma == tau)")->capture_default_str();
    compare->add_option("--lambda", cmp_lambda, "Minimum arc length")->capture_default_str();
    compare->add_option("--smax", cmp_smax, "Largest total vertex count (<= 2000)")
        ->capture_default_str();
    add_common_options(*compare, opts);

    int max_size = 12;
    auto* validate_cmd =
        app.add_subcommand("validate", "Cross-check oracles against the generating functions");
    validate_cmd->add_option("--max-size", max_size, "Cap on n + m for the exhaustive checks")
        ->check(CLI::Range(0, 16))
        ->capture_default_str();
    add_common_options(*validate_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    jointgf::set_real_precision(static_cast<unsigned>(opts.precision_digits));
    const auto start = std::chrono::steady_clock::now();
    int status = 0;
    try {
        if (count->parsed()) {
            if (!params_spec.empty())
                apply_params_spec(params_spec, params, *count);
            if (count->count("--tau") == 0 && params_spec.find("tau=") == std::string::npos)
                params.tau = params.sigma;
            status = run_count(opts, params, total, box);
        } else if (secondary->parsed()) {
            status = run_secondary(opts, sec_sigma, sec_lambda, sec_order);
        } else if (shapes->parsed()) {
            status = run_shapes(opts, max_arcs);
        } else if (asymptotics->parsed()) {
            if (asymptotics->count("--format") == 0)
                opts.format = "json";  // single reports read best as JSON
            status = run_asymptotics(opts, sigma_range, lambda_range);
        } else if (compare->parsed()) {
            status = run_compare(opts, cmp_sigma, cmp_lambda, cmp_smax);
        } else if (validate_cmd->parsed()) {
            status = run_validate(opts, max_size);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const jointgf::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const jointgf::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (opts.timing) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    }
    return status;
}
