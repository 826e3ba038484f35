#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reldim/dimension.hpp"
#include "reldim/estimator.hpp"
#include "reldim/geometry.hpp"
#include "reldim/learning.hpp"
#include "reldim/polykernel.hpp"

namespace reldim::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::uint64_t seed = 1;
    std::uint64_t samples = 1000000;
    double tol = 0.0;  // 0: module default
    std::string out;
    std::string format = "csv";
    double confidence = 0.95;
    std::vector<double> d;
    std::vector<double> theta;
    std::vector<double> eps;
    std::vector<double> grid;
    std::vector<int> k_train;
    std::vector<int> deg;
    std::uint64_t trials = 100000;
    std::string which = "yx";
    double bias = 1.5;
    int deg_max = 10;
    std::string input;
    std::string centre;
    std::string figure;
};

using Cell = std::variant<double, std::int64_t, std::uint64_t, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    // When set, the JSON form uses these records instead of the flat rows.
    std::vector<nlohmann::ordered_json> json_records;
    bool converged = true;
};

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return std::to_string(v);
            }
        },
        c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                // Same rounding as the CSV form; non-finite values become strings.
                if (!std::isfinite(v)) return format_number(v);
                return std::stod(format_number(v));
            } else {
                return v;
            }
        },
        c);
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_csv(std::ostream& os, const Table& t) {
    for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json doc;
    for (const auto& [k, v] : t.meta) doc["meta"][k] = v;
    doc["records"] = nlohmann::ordered_json::array();
    if (!t.json_records.empty()) {
        for (const auto& r : t.json_records) doc["records"].push_back(r);
    } else {
        for (const auto& row : t.rows) {
            nlohmann::ordered_json r;
            for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
            doc["records"].push_back(r);
        }
    }
    os << doc.dump(2) << '\n';
}

[[noreturn]] void invalid(const std::string& msg) { throw std::invalid_argument(msg); }

int as_int_dim(double d, const char* what) {
    if (!(d >= 1.0) || d != std::floor(d) || d > 1e6) invalid(std::string(what) + ": --d must be a positive integer");
    return static_cast<int>(d);
}

const std::vector<double>& require(const std::vector<double>& v, const char* flag, const char* cmd) {
    if (v.empty()) invalid(std::string(cmd) + ": " + flag + " is required");
    return v;
}

QuadSpec quad_spec(const Options& o, QuadSpec base) {
    if (o.tol > 0.0) {
        base.rel_tol = o.tol;
        base.abs_tol = std::min(base.abs_tol, o.tol);
    }
    return base;
}

void add_common_meta(Table& t, const std::string& command, const Options& o) {
    t.meta.emplace_back("tool", std::string("reldim ") + kVersion);
    t.meta.emplace_back("command", command);
    t.meta.emplace_back("seed", std::to_string(o.seed));
    t.meta.emplace_back("timestamp", utc_timestamp());
}

void warn_if_boundary_bias(double bias, std::ostream& err) {
    if (bias == 1.0) {
        err << "warning: bias = 1 sits on the boundary where the feature-space mean formula is only just valid\n";
    }
}

// ---- commands --------------------------------------------------------------

Table cmd_fprob(const Options& o) {
    Table t;
    const auto& thetas = require(o.theta, "--theta", "fprob");
    const auto& ds = require(o.d, "--d", "fprob");
    const QuadSpec spec = quad_spec(o, default_f_theta_spec());
    add_common_meta(t, "fprob", o);
    t.meta.emplace_back("tol", format_number(spec.rel_tol));
    t.columns = {"theta", "d", "f_theta", "abs_error"};
    for (double theta : thetas) {
        for (double d : ds) {
            const QuadResult r = f_theta(theta, d, spec);
            t.converged = t.converged && r.converged;
            t.rows.push_back({theta, d, r.value, r.error});
        }
    }
    return t;
}

void push_estimate(Table& t, std::vector<Cell> lead, nlohmann::ordered_json lead_json, const DimEstimate& est) {
    const ProbEstimate& p = est.prob;
    lead.insert(lead.end(), {p.p_hat, p.n_pairs, p.ci_low, p.ci_high, p.seed, est.dim.value, est.ci_low, est.ci_high});
    t.rows.push_back(std::move(lead));
    const nlohmann::json record = to_json(est);
    for (const auto& [k, v] : record.items()) lead_json[k] = nlohmann::ordered_json::parse(v.dump());
    t.json_records.push_back(std::move(lead_json));
}

const std::vector<std::string> kEstimateColumns = {"p_hat", "n_pairs", "ci_low", "ci_high", "seed",
                                                   "dim",   "dim_ci_low", "dim_ci_high"};

Point parse_point(const std::string& text, std::size_t dim, const char* flag) {
    Point p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            p.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            invalid(std::string(flag) + ": '" + item + "' is not a number");
        }
    }
    if (p.size() != dim) {
        invalid(std::string(flag) + ": expected " + std::to_string(dim) + " coordinates, got " +
                std::to_string(p.size()));
    }
    return p;
}

Table cmd_dim(const Options& o) {
    Table t;
    add_common_meta(t, "dim", o);
    t.meta.emplace_back("confidence", format_number(o.confidence));
    t.columns = {"d"};
    t.columns.insert(t.columns.end(), kEstimateColumns.begin(), kEstimateColumns.end());
    if (!o.input.empty()) {
        if (!o.d.empty()) invalid("dim: --d and --input are mutually exclusive");
        std::ifstream is(o.input);
        if (!is) invalid("dim: cannot open --input file '" + o.input + "'");
        const std::vector<Point> pts = read_point_cloud(is);
        if (pts.size() < 2) invalid("dim: --input needs at least two points");
        const std::size_t n = pts.front().size();
        Point c(n, 0.0);
        if (o.centre.empty()) {
            for (const auto& p : pts) {
                for (std::size_t i = 0; i < n; ++i) c[i] += p[i];
            }
            for (double& v : c) v /= static_cast<double>(pts.size());
        } else {
            c = parse_point(o.centre, n, "--centre");
        }
        t.meta.emplace_back("input", o.input);
        t.meta.emplace_back("centre", o.centre.empty() ? "sample mean" : o.centre);
        t.meta.emplace_back("pairs", "all ordered pairs of distinct points; interval is indicative");
        ProbEstimate p = estimate_sep_prob_from_samples(pts, c, 0.0, o.confidence);
        p.seed = o.seed;
        const auto d = static_cast<std::int64_t>(n);
        push_estimate(t, {d}, {{"d", d}}, dim_from_prob_estimate(p));
        return t;
    }
    t.meta.emplace_back("samples", std::to_string(o.samples));
    t.meta.emplace_back("distribution", "uniform unit ball, centre at its mean, theta = 0");
    for (double dv : require(o.d, "--d", "dim")) {
        const int d = as_int_dim(dv, "dim");
        const SepQuery q = SepQuery::self(BallSpec::unit(d), Point(static_cast<std::size_t>(d), 0.0), 0.0);
        push_estimate(t, {std::int64_t{d}}, {{"d", d}}, estimate_dim(q, o.samples, o.confidence, o.seed));
    }
    return t;
}

Table cmd_relative_dim(const Options& o) {
    RelativeDim which;
    if (o.which == "yx") {
        which = RelativeDim::y_to_x;
    } else if (o.which == "xy") {
        which = RelativeDim::x_to_y;
    } else {
        invalid("relative-dim: --which must be 'yx' or 'xy'");
    }
    Table t;
    add_common_meta(t, "relative-dim", o);
    t.meta.emplace_back("samples", std::to_string(o.samples));
    t.meta.emplace_back("confidence", format_number(o.confidence));
    t.meta.emplace_back("balls", "X = unit ball at 0, Y = unit ball at eps e_1, centre 0");
    t.meta.emplace_back("which", o.which == "yx" ? "n(Y, X)" : "n(X, Y)");
    t.columns = {"d", "eps", "which"};
    t.columns.insert(t.columns.end(), kEstimateColumns.begin(), kEstimateColumns.end());
    const auto& eps_list = require(o.eps, "--eps", "relative-dim");
    for (double dv : require(o.d, "--d", "relative-dim")) {
        const int d = as_int_dim(dv, "relative-dim");
        for (double eps : eps_list) {
            const SepQuery q = two_ball_relative_dim_query(d, eps, which);
            push_estimate(t, {std::int64_t{d}, eps, o.which}, {{"d", d}, {"eps", eps}, {"which", o.which}},
                          estimate_dim(q, o.samples, o.confidence, o.seed));
        }
    }
    return t;
}

Table cmd_two_ball(const Options& o) {
    Table t;
    add_common_meta(t, "two-ball", o);
    t.columns = {"d", "eps", "accuracy"};
    const auto& eps_list = require(o.eps, "--eps", "two-ball");
    for (double d : require(o.d, "--d", "two-ball")) {
        for (double eps : eps_list) t.rows.push_back({d, eps, two_ball_accuracy(d, eps)});
    }
    return t;
}

Table cmd_learn_sim(const Options& o) {
    if (o.k_train.empty()) invalid("learn-sim: --k-train is required");
    const auto& ds = require(o.d, "--d", "learn-sim");
    const auto& eps_list = require(o.eps, "--eps", "learn-sim");
    const auto& thetas = require(o.theta, "--theta", "learn-sim");
    const std::string centre_rule = o.centre.empty() ? "x" : o.centre;
    Table t;
    add_common_meta(t, "learn-sim", o);
    t.meta.emplace_back("trials", std::to_string(o.trials));
    t.meta.emplace_back("samples", std::to_string(o.samples));
    t.meta.emplace_back("confidence", format_number(o.confidence));
    t.meta.emplace_back("balls", "X = unit ball at 0, Y = unit ball at eps e_1");
    t.meta.emplace_back("centre", centre_rule == "x"   ? "X centre (mean of X)"
                                  : centre_rule == "y" ? "Y centre (mean of Y)"
                                                       : centre_rule);
    t.meta.emplace_back("bounds", "evaluated at p from Monte Carlo with --samples pairs, seeds seed+1 and seed+2");
    t.columns = {"d",       "eps",     "theta",    "k_train",     "trials",      "P_hat_Y",
                 "ciY_low", "ciY_high", "boundY_low", "boundY_high", "P_hat_X",  "ciX_low",
                 "ciX_high", "boundX_low", "boundX_high", "seed"};
    for (double dv : ds) {
        const int d = as_int_dim(dv, "learn-sim");
        const auto n = static_cast<std::size_t>(d);
        for (double eps : eps_list) {
            const SepQuery shape = two_ball_relative_dim_query(d, eps, RelativeDim::y_to_x);
            const BallSpec y_ball = std::get<BallSpec>(shape.y_dist);
            const BallSpec x_ball = std::get<BallSpec>(shape.x_dist);
            Point c;
            if (centre_rule == "x") {
                c = x_ball.center;
            } else if (centre_rule == "y") {
                c = y_ball.center;
            } else {
                c = parse_point(centre_rule, n, "--centre");
            }
            for (double theta : thetas) {
                const double p_y = estimate_sep_prob(SepQuery{y_ball, y_ball, c, theta}, o.samples, o.confidence,
                                                     o.seed + 1)
                                       .p_hat;
                const double p_yx = estimate_sep_prob(SepQuery{y_ball, x_ball, c, theta}, o.samples,
                                                      o.confidence, o.seed + 2)
                                        .p_hat;
                for (int k : o.k_train) {
                    const LearningSimResult r =
                        simulate_learning(y_ball, x_ball, c, theta, k, o.trials, o.seed, o.confidence);
                    const LearningBounds by = learning_bounds(p_y, k, LearnSide::learn_Y);
                    const LearningBounds bx = learning_bounds(p_yx, k, LearnSide::learn_X);
                    t.rows.push_back({std::int64_t{d}, eps, theta, std::int64_t{k}, o.trials, r.y_success.p_hat,
                                      r.y_success.ci_low, r.y_success.ci_high, by.lower, by.upper,
                                      r.x_success.p_hat, r.x_success.ci_low, r.x_success.ci_high, bx.lower,
                                      bx.upper, o.seed});
                }
            }
        }
    }
    return t;
}

std::vector<int> degree_list(const Options& o) {
    if (!o.deg.empty()) return o.deg;
    if (o.deg_max < 1) invalid("--deg-max must be >= 1");
    std::vector<int> degs;
    for (int k = 1; k <= o.deg_max; ++k) degs.push_back(k);
    return degs;
}

Table poly_sweep(const Options& o, const std::string& command, const std::vector<double>& ds, bool with_p0,
                 std::ostream& err) {
    warn_if_boundary_bias(o.bias, err);
    const QuadSpec spec = quad_spec(o, default_poly_spec());
    const std::vector<int> degs = degree_list(o);
    Table t;
    add_common_meta(t, command, o);
    t.meta.emplace_back("b", format_number(o.bias));
    t.meta.emplace_back("deg", join(degs));
    t.meta.emplace_back("tol", format_number(spec.rel_tol));
    t.columns = with_p0 ? std::vector<std::string>{"d", "b", "deg", "p0", "intrinsic_dim"}
                        : std::vector<std::string>{"d", "b", "deg", "intrinsic_dim"};
    std::string best;
    for (double dv : ds) {
        const int d = as_int_dim(dv, command.c_str());
        int best_deg = 0;
        double best_dim = -std::numeric_limits<double>::infinity();
        for (int k : degs) {
            const PolyDimension pd = poly_intrinsic_dim(KernelSpec{k, o.bias, d}, spec);
            t.converged = t.converged && pd.prob.converged;
            if (with_p0) {
                t.rows.push_back({std::int64_t{d}, o.bias, std::int64_t{k}, pd.prob.value, pd.dim.value});
            } else {
                t.rows.push_back({std::int64_t{d}, o.bias, std::int64_t{k}, pd.dim.value});
            }
            if (pd.dim.value > best_dim) {
                best_dim = pd.dim.value;
                best_deg = k;
            }
        }
        best += (best.empty() ? "" : ",") + std::to_string(d) + ":" + std::to_string(best_deg);
    }
    t.meta.emplace_back("best_degree", best);
    return t;
}

std::vector<double> uniform_grid(double lo, double step, int count) {
    std::vector<double> g;
    for (int i = 0; i < count; ++i) g.push_back(lo + step * i);
    return g;
}

Table cmd_figure(const Options& o, std::ostream& err) {
    std::string name = o.figure;
    if (name.rfind("fig", 0) == 0) name = name.substr(3);
    if (name == "2") {
        const std::vector<double> ds = o.d.empty() ? std::vector<double>{1, 2, 5, 10, 20, 50} : o.d;
        const std::vector<double> eps = o.grid.empty() ? uniform_grid(0.0, 0.05, 51) : o.grid;
        Table t;
        add_common_meta(t, "figure 2", o);
        t.columns = {"d", "eps", "accuracy"};
        for (double d : ds) {
            for (double e : eps) t.rows.push_back({d, e, two_ball_accuracy(d, e)});
        }
        return t;
    }
    if (name == "3") {
        const std::vector<double> thetas =
            o.theta.empty() ? std::vector<double>{-2, -1.5, -1, -0.5, 0, 0.1} : o.theta;
        const std::vector<double> ds = o.grid.empty() ? uniform_grid(0.5, 0.5, 40) : o.grid;
        const QuadSpec spec = quad_spec(o, default_f_theta_spec());
        Table t;
        add_common_meta(t, "figure 3", o);
        t.meta.emplace_back("tol", format_number(spec.rel_tol));
        t.columns = {"theta", "d", "f_theta"};
        for (double theta : thetas) {
            for (double d : ds) {
                const QuadResult r = f_theta(theta, d, spec);
                t.converged = t.converged && r.converged;
                t.rows.push_back({theta, d, r.value});
            }
        }
        return t;
    }
    if (name == "5") {
        if (!o.grid.empty()) invalid("figure 5: use --d for the dimensions; --grid is not used");
        const std::vector<double> ds = o.d.empty() ? std::vector<double>{3, 4, 5, 6, 7, 8} : o.d;
        return poly_sweep(o, "figure 5", ds, false, err);
    }
    invalid("figure: unknown figure '" + o.figure + "' (expected 2, 3 or 5)");
}

// ---- option handling -------------------------------------------------------

// Options each command reads; anything else given on the command line or in
// the config file is rejected.
const std::map<std::string, std::set<std::string>> kAllowed = {
    {"fprob", {"--d", "--theta", "--tol"}},
    {"dim", {"--d", "--samples", "--confidence", "--input", "--centre"}},
    {"relative-dim", {"--d", "--eps", "--which", "--samples", "--confidence"}},
    {"two-ball", {"--d", "--eps"}},
    {"learn-sim", {"--d", "--eps", "--theta", "--k-train", "--trials", "--samples", "--confidence", "--centre"}},
    {"poly-dim", {"--d", "--bias", "--deg-max", "--deg", "--tol"}},
    {"figure", {"--d", "--theta", "--grid", "--bias", "--deg-max", "--tol"}},
};
const std::set<std::string> kAlwaysAllowed = {"--seed", "--out", "--format", "--config", "--help"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Intrinsic and relative intrinsic dimension toolkit", "reldim"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::vector<CLI::Option*> opts;
    opts.push_back(app.add_option("--seed", o.seed, "Master seed for Monte Carlo streams")->capture_default_str());
    opts.push_back(app.add_option("--samples", o.samples, "Monte Carlo pairs")
                       ->check(CLI::PositiveNumber)
                       ->capture_default_str());
    opts.push_back(app.add_option("--tol", o.tol, "Relative quadrature tolerance")->check(CLI::Range(1e-15, 0.1)));
    opts.push_back(app.add_option("--out", o.out, "Write results to this file instead of stdout"));
    opts.push_back(app.add_option("--format", o.format, "Output format")
                       ->check(CLI::IsMember({"csv", "json"}))
                       ->capture_default_str());
    opts.push_back(app.add_option("--confidence", o.confidence, "Interval confidence level")
                       ->check(CLI::Range(0.0, 1.0))
                       ->capture_default_str());
    opts.push_back(app.add_option("--d", o.d, "Dimensions (comma list)")->delimiter(','));
    opts.push_back(app.add_option("--theta", o.theta, "Margins (comma list)")->delimiter(','));
    opts.push_back(app.add_option("--eps", o.eps, "Centre separations (comma list)")->delimiter(','));
    opts.push_back(app.add_option("--grid", o.grid, "Figure sweep grid (comma list)")->delimiter(','));
    opts.push_back(app.add_option("--k-train", o.k_train, "Training sample sizes (comma list)")->delimiter(','));
    opts.push_back(app.add_option("--deg", o.deg, "Polynomial degrees (comma list)")->delimiter(','));
    opts.push_back(app.add_option("--trials", o.trials, "Learning trials")
                       ->check(CLI::PositiveNumber)
                       ->capture_default_str());
    opts.push_back(app.add_option("--which", o.which, "yx for n(Y, X), xy for n(X, Y)")->capture_default_str());
    opts.push_back(app.add_option("--bias", o.bias, "Polynomial kernel bias b")->capture_default_str());
    opts.push_back(app.add_option("--deg-max", o.deg_max, "Largest degree in a sweep")->capture_default_str());
    opts.push_back(app.add_option("--input", o.input, "Point cloud CSV (header x0,...,x{d-1})"));
    opts.push_back(app.add_option("--centre", o.centre, "Centre: x, y, or a comma list of coordinates"));

    app.add_subcommand("fprob", "Analytic separation probability f_theta(d)");
    app.add_subcommand("dim", "Monte Carlo intrinsic dimension of the unit ball or of a point cloud");
    app.add_subcommand("relative-dim", "Monte Carlo relative intrinsic dimension of two unit balls");
    app.add_subcommand("two-ball", "Accuracy of the mid-plane classifier for two unit balls");
    app.add_subcommand("learn-sim", "Few-shot learning simulation against its bounds");
    app.add_subcommand("poly-dim", "Intrinsic dimension in polynomial feature space over degrees");
    CLI::App* fig = app.add_subcommand("figure", "Figure data: 2, 3 or 5");
    fig->add_option("name", o.figure, "2, 3 or 5")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const std::set<std::string>& allowed = kAllowed.at(command);
    for (const CLI::Option* opt : opts) {
        const std::string name = "--" + opt->get_single_name();
        if (opt->count() > 0 && !allowed.count(name) && !kAlwaysAllowed.count(name)) {
            err << "error: " << name << " is not used by '" << command << "'\n";
            return kExitValidation;
        }
    }

    try {
        Table t;
        if (command == "fprob") {
            t = cmd_fprob(o);
        } else if (command == "dim") {
            t = cmd_dim(o);
        } else if (command == "relative-dim") {
            t = cmd_relative_dim(o);
        } else if (command == "two-ball") {
            t = cmd_two_ball(o);
        } else if (command == "learn-sim") {
            t = cmd_learn_sim(o);
        } else if (command == "poly-dim") {
            t = poly_sweep(o, "poly-dim", require(o.d, "--d", "poly-dim"), true, err);
        } else {
            t = cmd_figure(o, err);
        }

        std::ofstream file;
        if (!o.out.empty()) {
            file.open(o.out);
            if (!file) invalid("cannot open --out file '" + o.out + "'");
        }
        std::ostream& os = o.out.empty() ? out : file;
        if (o.format == "json") {
            write_json(os, t);
        } else {
            write_csv(os, t);
        }
        if (!t.converged) {
            err << "error: quadrature did not converge to the requested tolerance\n";
            return kExitNonConvergence;
        }
        return kExitOk;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace reldim::cli
