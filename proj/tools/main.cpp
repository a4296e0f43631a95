// strutt — Floquet stability analysis of a pendulum with an oscillating
// pivot (triangular, approximated rectangular, and cosine pivot motion).
//
// Exit codes: 0 success, 1 computation/verification failure, 2 usage error.

#include "verify_checks.hpp"

#include "strutt/io.hpp"
#include "strutt/monodromy.hpp"
#include "strutt/numeric.hpp"
#include "strutt/stability.hpp"
#include "strutt/svg.hpp"
#include "strutt/waveforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

namespace wf = strutt::waveforms;
namespace mono = strutt::monodromy;
namespace num = strutt::numeric;
namespace stab = strutt::stability;
namespace io = strutt::io;

// ---------------------------------------------------------------------------
// JSON config merged under the command line: flags that were typed win,
// everything else may come from the file; unknown keys are rejected.

class ConfigMerger {
  public:
    void bind(std::string key, CLI::Option* opt, std::function<void(const nlohmann::json&)> apply) {
        entries_.push_back({std::move(key), opt, std::move(apply)});
    }

    void merge_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot read config file: " + path);
        nlohmann::json root;
        try {
            in >> root;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config file " + path + ": " + e.what());
        }
        if (!root.is_object())
            throw std::invalid_argument("config file " + path + ": root must be an object");
        for (const auto& [key, value] : root.items()) {
            const Entry* match = nullptr;
            for (const auto& e : entries_)
                if (e.key == key) {
                    match = &e;
                    break;
                }
            if (!match) throw std::invalid_argument("unknown config key: " + key);
            if (match->opt->count() > 0) continue; // flag overrides config
            try {
                match->apply(value);
            } catch (const nlohmann::json::exception&) {
                throw std::invalid_argument("config key '" + key + "' has the wrong type");
            }
        }
    }

  private:
    struct Entry {
        std::string key;
        CLI::Option* opt;
        std::function<void(const nlohmann::json&)> apply;
    };
    std::vector<Entry> entries_;
};

// Declutter the repeated add-option-and-bind dance.
struct Binder {
    CLI::App* cmd;
    ConfigMerger* cfg;

    template <typename T>
    CLI::Option* add(const std::string& flag, const std::string& key, T& var,
                     const std::string& desc) {
        auto* opt = cmd->add_option(flag, var, desc);
        cfg->bind(key, opt, [&var](const nlohmann::json& j) { var = j.get<T>(); });
        return opt;
    }

    CLI::Option* add_flag(const std::string& flag, const std::string& key, bool& var,
                          const std::string& desc) {
        auto* opt = cmd->add_flag(flag, var, desc);
        cfg->bind(key, opt, [&var](const nlohmann::json& j) { var = j.get<bool>(); });
        return opt;
    }
};

wf::Waveform parse_waveform(const std::string& s) {
    if (s == "triangular") return wf::Waveform::triangular();
    if (s == "cosine") return wf::Waveform::cosine();
    if (s.rfind("rect:", 0) == 0) {
        const std::string digits = s.substr(5);
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(digits, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad waveform '" + s + "': rect:<n> needs an integer n");
        }
        if (used != digits.size())
            throw std::invalid_argument("bad waveform '" + s + "': rect:<n> needs an integer n");
        return wf::Waveform::rectangular_approx(n);
    }
    throw std::invalid_argument("bad waveform '" + s +
                                "' (expected triangular, rect:<n>, or cosine)");
}

int write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    if (path.empty() || path == "-") {
        emit(std::cout);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    emit(out);
    out.flush();
    if (!out) {
        std::cerr << "error: failed while writing: " << path << "\n";
        return 1;
    }
    return 0;
}

// Trace evaluation shared by `trace` and `classify`.  Method "auto" picks
// the closed form for the impulsive waveforms, numeric Floquet for cosine.
double evaluate_trace(const wf::Waveform& w, const wf::StabilityParams& p,
                      const std::string& method, int steps) {
    std::string m = method;
    if (m == "auto") m = (w.kind == wf::Kind::Cosine) ? "numeric" : "closed";

    if (m == "numeric") {
        num::IntegratorConfig cfg;
        cfg.steps_per_period = steps;
        return num::monodromy_numeric(w, p, cfg).trace;
    }
    if (w.kind == wf::Kind::Cosine)
        throw std::invalid_argument("the cosine wave has no closed form or transfer-matrix "
                                    "product; use --method numeric");
    if (m == "closed")
        return w.kind == wf::Kind::Triangular ? mono::trace_triangular_closed(p)
                                              : mono::trace_rectangular_closed(p, w.n);
    if (m == "product") return mono::monodromy_product(w, p).trace;
    throw std::invalid_argument("unknown method '" + method +
                                "' (expected product, closed, numeric, or auto)");
}

std::vector<stab::BoundaryCurve> boundaries_for(const wf::Waveform& w,
                                                const stab::Window& win, int samples,
                                                const stab::Resolution& nodes,
                                                double refine_tol, bool plus2, bool minus2) {
    std::vector<stab::BoundaryCurve> curves;
    auto append = [&](std::vector<stab::BoundaryCurve> more) {
        for (auto& c : more) curves.push_back(std::move(c));
    };
    const double beta_max = std::max(std::abs(win.beta_min), std::abs(win.beta_max));
    if (w.kind == wf::Kind::Triangular) {
        if (plus2)
            append(stab::boundary_triangular(stab::BoundaryKind::TracePlus2, win.alpha_min,
                                             win.alpha_max, samples, beta_max));
        if (minus2)
            append(stab::boundary_triangular(stab::BoundaryKind::TraceMinus2, win.alpha_min,
                                             win.alpha_max, samples, beta_max));
    } else if (w.kind == wf::Kind::RectangularApprox) {
        if (plus2)
            append(stab::boundary_rectangular(w.n, stab::BoundaryKind::TracePlus2, win, nodes,
                                              refine_tol));
        if (minus2)
            append(stab::boundary_rectangular(w.n, stab::BoundaryKind::TraceMinus2, win, nodes,
                                              refine_tol));
    } else {
        throw std::invalid_argument(
            "boundary extraction is defined for the impulsive waveforms only");
    }
    return curves;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floquet stability analysis of a pendulum with a periodically "
                 "oscillating pivot"};
    app.require_subcommand(0, 1);

    std::function<int()> handler;

    // Shared option storage.  Every subcommand reads the slice it declared.
    std::string waveform_str = "triangular";
    std::string config_path;
    std::string method = "auto";
    std::string output;
    std::string svg_path;
    std::string kind = "both";
    double alpha = 0.0, beta = 0.0;
    double tol = 0.0; // 0 = per-waveform default
    int steps = 4096;
    stab::Window win{-1.0, 4.0, -4.0, 4.0};
    stab::Resolution res{100, 100};
    int samples = 200;
    double refine_tol = 1e-8;
    double theta0 = 0.1, omega0 = 0.0, periods = 10.0;
    bool linear = false;
    double mollify_eps = 0.0;
    strutt::cli::VerifyOptions vopt;
    std::string suite;

    auto add_config = [&](CLI::App* cmd, ConfigMerger& merger) {
        cmd->add_option("--config", config_path,
                        "JSON config file; explicit flags take precedence");
        (void)merger;
    };

    // --- trace ---------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("trace", "Print the monodromy trace at one point");
        auto merger = std::make_shared<ConfigMerger>();
        Binder b{cmd, merger.get()};
        b.add("--waveform", "waveform", waveform_str, "triangular | rect:<n> | cosine");
        b.add("--alpha", "alpha", alpha, "dimensionless alpha");
        b.add("--beta", "beta", beta, "dimensionless beta");
        b.add("--method", "method", method, "product | closed | numeric | auto");
        b.add("--steps", "steps", steps, "integrator steps per period (numeric method)");
        add_config(cmd, *merger);
        cmd->callback([&, merger] {
            handler = [&, merger]() -> int {
                if (!config_path.empty()) merger->merge_file(config_path);
                const auto w = parse_waveform(waveform_str);
                const double tr = evaluate_trace(w, {alpha, beta}, method, steps);
                std::cout << io::format_number(tr) << "\n";
                return 0;
            };
        });
    }

    // --- classify ------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("classify", "Classify one (alpha, beta) point");
        auto merger = std::make_shared<ConfigMerger>();
        Binder b{cmd, merger.get()};
        b.add("--waveform", "waveform", waveform_str, "triangular | rect:<n> | cosine");
        b.add("--alpha", "alpha", alpha, "dimensionless alpha");
        b.add("--beta", "beta", beta, "dimensionless beta");
        b.add("--method", "method", method, "product | closed | numeric | auto");
        b.add("--tol", "tol", tol, "boundary tolerance (default 1e-9 closed, 1e-6 numeric)");
        b.add("--steps", "steps", steps, "integrator steps per period (numeric method)");
        add_config(cmd, *merger);
        cmd->callback([&, merger] {
            handler = [&, merger]() -> int {
                if (!config_path.empty()) merger->merge_file(config_path);
                const auto w = parse_waveform(waveform_str);
                const double tr = evaluate_trace(w, {alpha, beta}, method, steps);
                const double use_tol = tol > 0.0 ? tol : stab::default_tol(w);
                const auto cls = stab::classify(tr, use_tol);
                const char* name = cls.label == stab::StabilityClass::Label::Stable ? "stable"
                                   : cls.label == stab::StabilityClass::Label::Unstable
                                       ? "unstable"
                                       : "boundary";
                std::cout << name << " " << io::format_number(cls.trace) << "\n";
                return 0;
            };
        });
    }

    // --- boundary ------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("boundary", "Extract Tr = +-2 boundary curves as CSV");
        auto merger = std::make_shared<ConfigMerger>();
        Binder b{cmd, merger.get()};
        b.add("--waveform", "waveform", waveform_str, "triangular | rect:<n>");
        b.add("--kind", "kind", kind, "plus2 | minus2 | both");
        b.add("--alpha-min", "alpha-min", win.alpha_min, "window lower alpha");
        b.add("--alpha-max", "alpha-max", win.alpha_max, "window upper alpha");
        b.add("--beta-min", "beta-min", win.beta_min, "window lower beta (rect contouring)");
        b.add("--beta-max", "beta-max", win.beta_max, "window upper beta");
        b.add("--samples", "samples", samples, "points per closed-form arc (triangular)");
        b.add("--res-alpha", "res-alpha", res.n_alpha, "contour lattice nodes in alpha (rect)");
        b.add("--res-beta", "res-beta", res.n_beta, "contour lattice nodes in beta (rect)");
        b.add("--refine-tol", "refine-tol", refine_tol, "edge bisection target |Tr -+ 2|");
        b.add("--output", "output", output, "output path (default stdout)");
        add_config(cmd, *merger);
        cmd->callback([&, merger] {
            handler = [&, merger]() -> int {
                if (!config_path.empty()) merger->merge_file(config_path);
                const auto w = parse_waveform(waveform_str);
                if (kind != "plus2" && kind != "minus2" && kind != "both")
                    throw std::invalid_argument("bad --kind (expected plus2, minus2, or both)");
                const auto curves =
                    boundaries_for(w, win, samples, res, refine_tol, kind != "minus2",
                                   kind != "plus2");
                return write_output(output,
                                    [&](std::ostream& os) { io::write_boundary_csv(os, curves); });
            };
        });
    }

    // --- diagram / render-svg --------------------------------------------------
    auto add_diagram_like = [&](const char* name, const char* help, bool svg_only) {
        auto* cmd = app.add_subcommand(name, help);
        auto merger = std::make_shared<ConfigMerger>();
        Binder b{cmd, merger.get()};
        b.add("--waveform", "waveform", waveform_str, "triangular | rect:<n> | cosine");
        b.add("--alpha-min", "alpha-min", win.alpha_min, "window lower alpha");
        b.add("--alpha-max", "alpha-max", win.alpha_max, "window upper alpha");
        b.add("--beta-min", "beta-min", win.beta_min, "window lower beta");
        b.add("--beta-max", "beta-max", win.beta_max, "window upper beta");
        b.add("--res-alpha", "res-alpha", res.n_alpha, "grid cells in alpha");
        b.add("--res-beta", "res-beta", res.n_beta, "grid cells in beta");
        b.add("--tol", "tol", tol, "boundary tolerance (default 1e-9 closed, 1e-6 numeric)");
        b.add("--steps", "steps", steps, "integrator steps per period (cosine)");
        b.add("--output", "output", output, "output path (default stdout)");
        if (!svg_only)
            b.add("--svg", "svg", svg_path, "also render an SVG to this path");
        add_config(cmd, *merger);
        cmd->callback([&, merger, svg_only] {
            handler = [&, merger, svg_only]() -> int {
                if (!config_path.empty()) merger->merge_file(config_path);
                const auto w = parse_waveform(waveform_str);
                num::IntegratorConfig icfg;
                icfg.steps_per_period = steps;
                const double use_tol = tol > 0.0 ? tol : stab::default_tol(w);
                const auto grid = stab::diagram(w, win, res, use_tol, icfg);

                auto overlays = [&]() -> std::vector<stab::BoundaryCurve> {
                    if (w.kind == wf::Kind::Cosine) return {};
                    const stab::Resolution nodes{res.n_alpha + 1, res.n_beta + 1};
                    return boundaries_for(w, win, std::max(4 * res.n_alpha, 64), nodes, 1e-8,
                                          true, true);
                };

                if (svg_only)
                    return write_output(output, [&](std::ostream& os) {
                        os << strutt::svg::render_diagram(grid, overlays());
                    });

                const int rc = write_output(
                    output, [&](std::ostream& os) { io::write_diagram_csv(os, grid); });
                if (rc != 0) return rc;
                if (!svg_path.empty())
                    return write_output(svg_path, [&](std::ostream& os) {
                        os << strutt::svg::render_diagram(grid, overlays());
                    });
                return 0;
            };
        });
    };
    add_diagram_like("diagram", "Rasterize an Ince-Strutt diagram as CSV (optionally SVG)",
                     false);
    add_diagram_like("render-svg", "Render an Ince-Strutt diagram as SVG", true);

    // --- verify ----------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify", "Run the cross-verification suites");
        auto merger = std::make_shared<ConfigMerger>();
        Binder b{cmd, merger.get()};
        auto* suite_opt =
            b.add("--suite", "suite", suite,
                  "one of product-vs-closed, mollification, ab-identity, beta-parity, "
                  "axis-crossings, rect-neg2-search (default: all standard suites)");
        b.add("--perturb", "perturb", vopt.perturb,
              "fault injection: offset added to closed-form traces");
        b.add("--n", "n", vopt.n, "slope parameter for rect-neg2-search");
        b.add("--steps", "steps", vopt.steps_per_period, "integrator steps per period");
        add_config(cmd, *merger);
        cmd->callback([&, merger, suite_opt] {
            handler = [&, merger, suite_opt]() -> int {
                if (!config_path.empty()) merger->merge_file(config_path);
                if (suite_opt->count() > 0 || !suite.empty()) vopt.suite = suite;
                return strutt::cli::run_verify(vopt, std::cout);
            };
        });
    }

    // --- simulate ---------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("simulate", "Integrate a trajectory and emit CSV");
        auto merger = std::make_shared<ConfigMerger>();
        Binder b{cmd, merger.get()};
        b.add("--waveform", "waveform", waveform_str, "triangular | rect:<n> | cosine");
        b.add("--alpha", "alpha", alpha, "dimensionless alpha");
        b.add("--beta", "beta", beta, "dimensionless beta");
        b.add("--theta0", "theta0", theta0, "initial angle");
        b.add("--omega0", "omega0", omega0, "initial angular velocity");
        b.add("--periods", "periods", periods, "duration in drive periods");
        b.add("--steps", "steps", steps, "integrator steps per period");
        b.add("--eps", "eps", mollify_eps, "mollify impulses with this pulse width");
        b.add_flag("--linear", "linear", linear, "integrate the linearized equation");
        b.add("--output", "output", output, "output path (default stdout)");
        add_config(cmd, *merger);
        cmd->callback([&, merger] {
            handler = [&, merger]() -> int {
                if (!config_path.empty()) merger->merge_file(config_path);
                const auto w = parse_waveform(waveform_str);
                if (!(periods >= 0.0))
                    throw std::invalid_argument("--periods must be nonnegative");
                num::IntegratorConfig icfg;
                icfg.steps_per_period = steps;
                if (mollify_eps > 0.0) icfg.mollify_epsilon = mollify_eps;
                const wf::StabilityParams p{alpha, beta};
                const num::State y0{theta0, omega0};
                const double duration = periods * wf::period;

                num::Trajectory traj;
                if (linear) {
                    auto model = wf::coefficient_model(w, p);
                    if (icfg.mollify_epsilon)
                        model = num::mollify(model, *icfg.mollify_epsilon);
                    traj = num::integrate_linear(model, p.alpha, y0,
                                                 {model.t_start, model.t_start + duration}, icfg);
                } else {
                    traj = num::simulate_nonlinear(w, p, y0, duration, icfg);
                }
                return write_output(
                    output, [&](std::ostream& os) { io::write_trajectory_csv(os, traj); });
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!handler) {
        std::cerr << app.help();
        return 2;
    }
    try {
        return handler();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
