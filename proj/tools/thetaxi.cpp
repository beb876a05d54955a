// thetaxi command line: evaluate the theta-group special functions, the
// generalized L-function F_z, verify its functional equation on sweeps and
// run convergence studies against the completed xi function.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <thetaxi/asymptotics.hpp>
#include <thetaxi/io.hpp>
#include <thetaxi/mellin.hpp>
#include <thetaxi/modular_forms.hpp>
#include <thetaxi/special_functions.hpp>

#include "cli_support.hpp"

namespace {

using namespace thetaxi;
using nlohmann::ordered_json;

constexpr int kExitDomain = 2;
constexpr int kExitTolerance = 3;

struct GlobalOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double t0 = 1.0;
    std::string tail_mode = "bound";
    int jobs = 1;
    bool json = false;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string config_path;

    QuadratureConfig quadrature() const {
        QuadratureConfig cfg;
        cfg.abs_tol = abs_tol;
        cfg.rel_tol = rel_tol;
        cfg.t0 = t0;
        if (tail_mode == "bound" || tail_mode == "bound_truncation")
            cfg.tail_mode = TailMode::bound_truncation;
        else if (tail_mode == "termwise" || tail_mode == "termwise_gamma")
            cfg.tail_mode = TailMode::termwise_gamma;
        else
            throw DomainError("MalformedOption", "unknown tail mode '" + tail_mode + "'");
        return cfg;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// precedence: command line > THETAXI_* environment > config file > default
class SettingResolver {
public:
    SettingResolver(const CLI::App& app, std::string config_path)
        : app_(app) {
        if (!config_path.empty()) config_ = cli::read_config_file(config_path);
    }

    template <typename T, typename Parse>
    void resolve(const std::string& flag, T& value, Parse parse) const {
        if (app_.count("--" + flag) > 0) return;  // explicit flag wins
        std::string env_name = "THETAXI_" + flag;
        for (auto& c : env_name) {
            if (c == '-') c = '_';
            c = char(std::toupper(static_cast<unsigned char>(c)));
        }
        if (const char* env = std::getenv(env_name.c_str())) {
            value = parse(env);
            return;
        }
        const auto it = config_.find(flag);
        if (it != config_.end()) value = parse(it->second);
    }

private:
    const CLI::App& app_;
    std::unordered_map<std::string, std::string> config_;
};

struct OutputSink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw DomainError("OutputUnwritable", "cannot open '" + path + "'");
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

struct EvalRecord {
    std::string target;
    std::string input;
    Complex value;
    double err_estimate = 0.0;
    double seconds = 0.0;
};

void emit_eval(OutputSink& sink, const GlobalOptions& opt, const EvalRecord& rec) {
    if (opt.json) {
        ordered_json j;
        j["target"] = rec.target;
        j["input"] = rec.input;
        j["value"] = format_complex(rec.value);
        j["err_estimate"] = rec.err_estimate;
        j["seconds"] = rec.seconds;
        sink.out() << j.dump() << "\n";
    } else {
        sink.out() << "target,input,value,err_estimate,seconds\n"
                   << rec.target << ",\"" << rec.input << "\"," << format_complex(rec.value)
                   << "," << fmt(rec.err_estimate) << "," << fmt(rec.seconds) << "\n";
    }
}

int run_eval(const GlobalOptions& opt, const std::string& target,
             const std::string& tau_text, const std::string& z_text,
             const std::string& s_text, double x_value) {
    const QuadratureConfig cfg = opt.quadrature();
    EvalRecord rec;
    rec.target = target;
    const auto start = std::chrono::steady_clock::now();

    auto need = [](const std::string& text, const char* what) {
        if (text.empty())
            throw DomainError("MissingArgument", std::string("target needs ") + what);
        return parse_complex(text);
    };

    if (target == "theta") {
        const UpperHalfPoint tau(need(tau_text, "--tau"));
        rec.input = format_complex(tau.tau());
        rec.value = theta(tau);
    } else if (target == "lambda") {
        const UpperHalfPoint tau(need(tau_text, "--tau"));
        rec.input = format_complex(tau.tau());
        rec.value = lambda_modular(tau);
    } else if (target == "jtheta") {
        const UpperHalfPoint tau(need(tau_text, "--tau"));
        rec.input = format_complex(tau.tau());
        rec.value = j_theta(tau);
    } else if (target == "hz") {
        const PolePoint z(need(z_text, "--z"));
        const UpperHalfPoint tau(need(tau_text, "--tau"));
        rec.input = "z=" + format_complex(z.z()) + ";tau=" + format_complex(tau.tau());
        rec.value = h_z(z, tau);
    } else if (target == "F") {
        const PolePoint z(need(z_text, "--z"));
        const Complex s = need(s_text, "--s");
        rec.input = "z=" + format_complex(z.z()) + ";s=" + format_complex(s);
        const QuadratureResult r = f_z(z, s, cfg);
        rec.value = r.value;
        rec.err_estimate = r.err_estimate;
    } else if (target == "xi") {
        const Complex s = need(s_text, "--s");
        rec.input = format_complex(s);
        rec.value = xi_completed(s);
    } else if (target == "xi_theta") {
        const Complex s = need(s_text, "--s");
        rec.input = "s=" + format_complex(s) + ";t0=" + fmt(opt.t0);
        rec.value = xi_via_theta(s, opt.t0, cfg, &rec.err_estimate);
    } else if (target == "corrected_F") {
        const PolePoint z(need(z_text, "--z"));
        const Complex s = need(s_text, "--s");
        rec.input = "z=" + format_complex(z.z()) + ";s=" + format_complex(s);
        rec.value = corrected_f_z(z, s, cfg);
    } else {
        (void)x_value;
        throw DomainError("UnknownTarget", "unknown eval target '" + target + "'");
    }

    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    OutputSink sink;
    sink.open(opt.out_path);
    emit_eval(sink, opt, rec);
    return 0;
}

struct FunctionalRow {
    double x, y, re_s, im_s;
    double residual = 0.0;
    bool pass = false;
    std::string error;  // domain-error name, if the point failed
};

int run_check_functional(const GlobalOptions& opt, const cli::SweepSpec& spec,
                         double threshold) {
    std::vector<FunctionalRow> rows(spec.z_list.size() * spec.s_list.size());
    bool domain_error = false;
    cli::parallel_for(rows.size(), opt.jobs, [&](std::size_t idx) {
        const auto& z = spec.z_list[idx / spec.s_list.size()];
        const Complex s = spec.s_list[idx % spec.s_list.size()];
        FunctionalRow row{z.x, z.y, s.real(), s.imag(), 0.0, false, ""};
        try {
            row.residual = functional_equation_residual(z, s, spec.cfg);
            row.pass = row.residual <= threshold;
        } catch (const DomainError& e) {
            row.error = e.name();
        }
        rows[idx] = row;
    });

    OutputSink sink;
    sink.open(opt.out_path);
    double max_residual = 0.0;
    bool all_pass = true;
    for (const auto& row : rows) {
        if (!row.error.empty()) domain_error = true;
        else max_residual = std::max(max_residual, row.residual);
        all_pass = all_pass && row.pass;
    }
    if (opt.json) {
        for (const auto& row : rows) {
            ordered_json j;
            j["x"] = row.x;
            j["y"] = row.y;
            j["re_s"] = row.re_s;
            j["im_s"] = row.im_s;
            if (row.error.empty()) {
                j["residual"] = row.residual;
                j["pass"] = row.pass;
            } else {
                j["error"] = row.error;
            }
            sink.out() << j.dump() << "\n";
        }
    } else {
        sink.out() << "x,y,re_s,im_s,residual,pass\n";
        for (const auto& row : rows) {
            sink.out() << fmt(row.x) << "," << fmt(row.y) << "," << fmt(row.re_s) << ","
                       << fmt(row.im_s) << ",";
            if (row.error.empty())
                sink.out() << fmt(row.residual) << "," << (row.pass ? "true" : "false") << "\n";
            else
                sink.out() << "," << row.error << "\n";
        }
        sink.out() << "# max_residual=" << fmt(max_residual)
                   << " threshold=" << fmt(threshold) << "\n";
    }
    if (domain_error) return kExitDomain;
    return all_pass ? 0 : kExitTolerance;
}

int run_converge(const GlobalOptions& opt, const cli::SweepSpec& spec, double threshold) {
    struct Group {
        double x;
        Complex s;
        ConvergenceTable table;
        std::string error;
    };
    std::vector<Group> groups(spec.x_list.size() * spec.s_list.size());
    cli::parallel_for(groups.size(), opt.jobs, [&](std::size_t idx) {
        Group g;
        g.x = spec.x_list[idx / spec.s_list.size()];
        g.s = spec.s_list[idx % spec.s_list.size()];
        try {
            g.table = convergence_study(g.x, g.s, spec.y_list, spec.cfg);
        } catch (const DomainError& e) {
            g.error = e.name();
        }
        groups[idx] = g;
    });

    OutputSink sink;
    sink.open(opt.out_path);
    bool domain_error = false;
    bool all_ok = true;
    if (!opt.json) sink.out() << "x,re_s,im_s,y,error\n";
    for (const auto& g : groups) {
        if (!g.error.empty()) {
            domain_error = true;
            if (opt.json) {
                ordered_json j;
                j["x"] = g.x;
                j["re_s"] = g.s.real();
                j["im_s"] = g.s.imag();
                j["error"] = g.error;
                sink.out() << j.dump() << "\n";
            } else {
                sink.out() << fmt(g.x) << "," << fmt(g.s.real()) << "," << fmt(g.s.imag())
                           << ",," << g.error << "\n";
            }
            continue;
        }
        const double final_error = g.table.rows.back().error;
        const bool ok = g.table.monotone && final_error <= threshold;
        all_ok = all_ok && ok;
        if (opt.json) {
            ordered_json j;
            j["x"] = g.x;
            j["re_s"] = g.s.real();
            j["im_s"] = g.s.imag();
            j["monotone"] = g.table.monotone;
            j["final_error"] = final_error;
            ordered_json rows = ordered_json::array();
            for (const auto& row : g.table.rows) {
                ordered_json r;
                r["y"] = row.y;
                r["corrected"] = format_complex(row.corrected);
                r["error"] = row.error;
                rows.push_back(r);
            }
            j["rows"] = rows;
            sink.out() << j.dump() << "\n";
        } else {
            for (const auto& row : g.table.rows)
                sink.out() << fmt(g.x) << "," << fmt(g.s.real()) << "," << fmt(g.s.imag())
                           << "," << fmt(row.y) << "," << fmt(row.error) << "\n";
            sink.out() << "# x=" << fmt(g.x) << " s=" << format_complex(g.s)
                       << " monotone=" << (g.table.monotone ? "true" : "false")
                       << " final=" << fmt(final_error) << "\n";
        }
    }
    if (domain_error) return kExitDomain;
    return all_ok ? 0 : kExitTolerance;
}

int run_reduce(const GlobalOptions& opt, const std::string& z_text) {
    const PolePoint z{parse_complex(z_text)};
    const ReductionResult red = reduce_to_fundamental_domain(z);
    const double margin = std::abs(red.point.u);
    OutputSink sink;
    sink.open(opt.out_path);
    if (opt.json) {
        ordered_json j;
        j["z"] = format_complex(z.z());
        j["reduced"] = format_complex(red.point.tau());
        j["matrix"] = {red.map.a, red.map.b, red.map.c, red.map.d};
        j["axis_margin"] = margin;
        sink.out() << j.dump() << "\n";
    } else {
        sink.out() << "z,reduced,a,b,c,d,axis_margin\n"
                   << format_complex(z.z()) << "," << format_complex(red.point.tau()) << ","
                   << red.map.a << "," << red.map.b << "," << red.map.c << "," << red.map.d
                   << "," << fmt(margin) << "\n";
    }
    return 0;
}

int run_selftest(const GlobalOptions& opt, double tolerance_scale) {
    const auto results = cli::run_selftest(opt.seed, tolerance_scale);
    OutputSink sink;
    sink.open(opt.out_path);
    int failures = 0;
    for (const auto& r : results) {
        if (opt.json) {
            ordered_json j;
            j["suite"] = r.name;
            j["max_residual"] = r.max_residual;
            j["tolerance"] = r.tolerance;
            j["pass"] = r.pass;
            sink.out() << j.dump() << "\n";
        } else {
            sink.out() << (r.pass ? "PASS" : "FAIL") << " " << r.name
                       << " max_residual=" << fmt(r.max_residual)
                       << " tolerance=" << fmt(r.tolerance) << "\n";
        }
        if (!r.pass && failures++ == 0 && !opt.json)
            sink.out() << "# first failing suite: " << r.name << "\n";
    }
    if (!opt.json)
        sink.out() << (failures == 0 ? "PASS" : "FAIL") << ", " << results.size()
                   << " suites\n";
    return failures == 0 ? 0 : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized L-functions of the theta group and the xi limit"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--abs-tol", opt.abs_tol, "absolute quadrature tolerance");
    app.add_option("--rel-tol", opt.rel_tol, "relative quadrature tolerance");
    app.add_option("--t0", opt.t0, "inner split point of the Mellin integral");
    app.add_option("--tail-mode", opt.tail_mode, "bound|termwise");
    app.add_option("--jobs", opt.jobs, "parallel workers for sweeps");
    app.add_flag("--json", opt.json, "emit JSON lines instead of CSV");
    app.add_option("--seed", opt.seed, "seed for randomized suites");
    app.add_option("--out", opt.out_path, "write the report to a file");
    app.add_option("--config", opt.config_path, "key=value configuration file");

    auto* eval = app.add_subcommand("eval", "evaluate one quantity");
    eval->fallthrough();
    std::string target, tau_text, z_text, s_text;
    double x_value = 0.5;
    eval->add_option("target", target,
                     "theta|lambda|jtheta|hz|F|xi|xi_theta|corrected_F")->required();
    eval->add_option("--tau", tau_text, "point in the upper half plane, a+bi");
    eval->add_option("--z", z_text, "pole location, a+bi");
    eval->add_option("--s", s_text, "spectral parameter, a+bi");
    eval->add_option("--x", x_value, "real part used by corrections");

    auto* check = app.add_subcommand("check-functional", "sweep the functional equation");
    check->fallthrough();
    std::string z_list_text = "0.5+2i", s_grid_text = "-1.5:2:0.4375,-5:5:1.25";
    double fe_threshold = 1e-6;
    check->add_option("--z", z_list_text, "comma list of pole points");
    check->add_option("--s-grid", s_grid_text, "re0:re1:step,im0:im1:step");
    check->add_option("--threshold", fe_threshold, "pass bound on the residual");

    auto* conv = app.add_subcommand("converge", "convergence study against xi(2s)");
    conv->fallthrough();
    std::string x_list_text = "0.5", s_list_text = "0.75", y_list_text = "5,10,20,40";
    double conv_threshold = 1e-3;
    conv->add_option("--x", x_list_text, "comma list of Re(z)");
    conv->add_option("--s", s_list_text, "comma list of spectral parameters");
    conv->add_option("--y-list", y_list_text, "strictly increasing Im(z) values");
    conv->add_option("--threshold", conv_threshold, "pass bound on the final error");

    auto* reduce = app.add_subcommand("reduce", "fundamental-domain reduction");
    reduce->fallthrough();
    std::string reduce_z_text;
    reduce->add_option("--z", reduce_z_text, "point to reduce, a+bi")->required();

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->fallthrough();
    double tolerance_scale = 1.0;
    selftest->add_option("--tolerance", tolerance_scale, "scale all suite tolerances");

    CLI11_PARSE(app, argc, argv);

    try {
        const SettingResolver resolver(app, opt.config_path);
        const auto as_double = [](const std::string& v) { return std::stod(v); };
        const auto as_string = [](const std::string& v) { return v; };
        const auto as_int = [](const std::string& v) { return std::stoi(v); };
        const auto as_u64 = [](const std::string& v) { return std::uint64_t(std::stoull(v)); };
        resolver.resolve("abs-tol", opt.abs_tol, as_double);
        resolver.resolve("rel-tol", opt.rel_tol, as_double);
        resolver.resolve("t0", opt.t0, as_double);
        resolver.resolve("tail-mode", opt.tail_mode, as_string);
        resolver.resolve("jobs", opt.jobs, as_int);
        resolver.resolve("seed", opt.seed, as_u64);

        if (eval->parsed()) return run_eval(opt, target, tau_text, z_text, s_text, x_value);
        if (check->parsed()) {
            cli::SweepSpec spec;
            for (const Complex z : cli::parse_complex_list(z_list_text))
                spec.z_list.emplace_back(z);
            spec.s_list = cli::parse_s_grid(s_grid_text).enumerate();
            spec.cfg = opt.quadrature();
            if (spec.z_list.empty() || spec.s_list.empty())
                throw DomainError("EmptyList", "sweep needs z and s points");
            return run_check_functional(opt, spec, fe_threshold);
        }
        if (conv->parsed()) {
            cli::SweepSpec spec;
            spec.x_list = cli::parse_double_list(x_list_text);
            for (const Complex s : cli::parse_complex_list(s_list_text))
                spec.s_list.push_back(s);
            spec.y_list = cli::parse_double_list(y_list_text);
            spec.cfg = opt.quadrature();
            if (spec.x_list.empty() || spec.s_list.empty() || spec.y_list.empty())
                throw DomainError("EmptyList", "study needs x, s and y lists");
            return run_converge(opt, spec, conv_threshold);
        }
        if (reduce->parsed()) return run_reduce(opt, reduce_z_text);
        if (selftest->parsed()) return run_selftest(opt, tolerance_scale);
    } catch (const ToleranceError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kExitTolerance;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
