// Config-driven command-line front end: single verifications, reduction
// suites, parameter sweeps, and certified quadrature. Emits JSON reports and
// plot-ready CSV with deterministic formatting (17 significant digits, C
// locale, LF line endings).
//
// Exit codes: 0 all verdicts Holds; 2 any Violated; 3 any Inconclusive;
// 1 configuration/precondition error; 4 quadrature convergence failure.

#include "lfhh/applications.hpp"
#include "lfhh/inequalities.hpp"
#include "lfhh/json_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <clocale>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lfhh;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CliOptions {
    std::string config_path;
    std::string out;
    std::string format;
    std::string scheme_override;
    bool force = false;
    std::vector<std::string> axes;
};

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw configuration_error("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw configuration_error("config parse error in " + path + ": " + e.what());
    }
}

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw configuration_error(std::string("config field '") + field +
                                  "' must be a number");
    return j[field].get<double>();
}

GeneralizedFunction parse_function(const json& j, const char* field) {
    if (!j.is_object() || !j.contains("kind"))
        throw configuration_error(std::string("config field '") + field +
                                  "' must be an object with a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "monomial_series") {
        const double origin = j.value("origin", 0.0);
        if (!j.contains("terms") || !j["terms"].is_array())
            throw configuration_error(std::string(field) +
                                      ".terms must be an array of [k, coeff]");
        std::vector<std::pair<int, double>> terms;
        for (const auto& t : j["terms"]) {
            if (!t.is_array() || t.size() != 2)
                throw configuration_error(std::string(field) +
                                          ".terms entries must be [k, coeff]");
            terms.emplace_back(t[0].get<int>(), t[1].get<double>());
        }
        return GeneralizedFunction::monomial(origin, std::move(terms));
    }
    if (kind == "base_mapped_poly") {
        if (!j.contains("coeffs") || !j["coeffs"].is_array())
            throw configuration_error(std::string(field) +
                                      ".coeffs must be an array");
        std::vector<double> coeffs = j["coeffs"].get<std::vector<double>>();
        return GeneralizedFunction(BaseMapped{[coeffs](double x) {
            double acc = 0.0;
            for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
            return acc;
        }});
    }
    throw configuration_error(std::string(field) + ".kind '" + kind +
                              "' is not one of monomial_series, base_mapped_poly");
}

HFunction parse_h(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw configuration_error("config field 'h' must be an object with 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "power_alpha") return HFunction::power_alpha();
    if (kind == "power_s_alpha") return HFunction::power_s_alpha(require_number(j, "s"));
    if (kind == "constant") return HFunction::constant();
    throw configuration_error("h.kind '" + kind +
                              "' is not one of power_alpha, power_s_alpha, constant");
}

SchemeKind parse_scheme_kind(const std::string& s) {
    if (s == "exact") return SchemeKind::ExactMonomial;
    if (s == "kernel_left") return SchemeKind::KernelLeft;
    if (s == "kernel_right") return SchemeKind::KernelRight;
    if (s == "classical") return SchemeKind::Classical;
    throw configuration_error("scheme kind '" + s +
                              "' is not one of exact, kernel_left, kernel_right, "
                              "classical");
}

IntegralScheme parse_scheme(const json& cfg) {
    IntegralScheme s;
    if (cfg.contains("scheme")) {
        const json& j = cfg["scheme"];
        if (j.contains("kind")) s.kind = parse_scheme_kind(j["kind"].get<std::string>());
        s.order = j.value("order", s.order);
        s.tol = j.value("tol", s.tol);
        s.max_depth = j.value("max_depth", s.max_depth);
    }
    return s;
}

InequalityCase build_case(const json& cfg, const CliOptions& opt) {
    const double alpha = require_number(cfg, "alpha");
    const double m = cfg.value("m", 1.0);
    if (!cfg.contains("h")) throw configuration_error("config requires field 'h'");
    if (!cfg.contains("G")) throw configuration_error("config requires field 'G'");
    if (!cfg.contains("interval") || !cfg["interval"].is_array() ||
        cfg["interval"].size() != 2)
        throw configuration_error("config field 'interval' must be [nu, mu]");
    const double nu = cfg["interval"][0].get<double>();
    const double mu = cfg["interval"][1].get<double>();
    const double b = cfg.value("domain_b", mu > 0 ? mu : 1.0);

    InequalityCase c{parse_function(cfg["G"], "G"),
                     ConvexityParams(parse_h(cfg["h"]), m, Alpha(alpha), b)};
    c.nu = nu;
    c.mu = mu;
    if (cfg.contains("weight"))
        c.W = WeightFunction{parse_function(cfg["weight"], "weight")};
    c.q = cfg.value("q", 1.0);
    IntegralScheme s = parse_scheme(cfg);
    if (!opt.scheme_override.empty()) s.kind = parse_scheme_kind(opt.scheme_override);
    c.scheme = s;
    c.force = opt.force || cfg.value("force", false);
    c.precheck.seed = static_cast<std::uint64_t>(cfg.value("seed", 24601));
    return c;
}

const std::vector<std::string> kAllTheorems = {
    "hh_hm", "hh_pair", "fejer_hm", "fejer_deriv", "lemma_identity", "jensen"};

std::vector<InequalityReport> run_theorem(const std::string& name,
                                          InequalityCase c) {
    if (name == "fejer_hm" || name == "fejer_deriv" || name == "lemma_identity") {
        if (!c.W) c.W = WeightFunction{GeneralizedFunction::constant(1.0)};
    }
    if (name == "hh_hm") return {verify_hh_hm(c)};
    if (name == "hh_pair") return {verify_hh_pair(c)};
    if (name == "fejer_hm") return {verify_fejer_hm(c)};
    if (name == "fejer_deriv") return {verify_fejer_deriv(c)};
    if (name == "lemma_identity") return {verify_lemma_identity(c)};
    if (name == "jensen") return {verify_jensen(c)};
    if (name == "reductions") return run_reduction_matrix(c);
    throw configuration_error("unknown theorem '" + name + "'");
}

std::vector<std::string> theorem_list(const json& cfg) {
    const std::string t = cfg.value("theorem", "all");
    if (t == "all") return kAllTheorems;
    return {t};
}

fs::path output_dir(const json& cfg, const CliOptions& opt) {
    std::string out = !opt.out.empty() ? opt.out : cfg.value("output", "");
    if (out.empty()) {
        const char* env = std::getenv("LFHH_OUT_DIR");
        out = env ? env : ".";
    }
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

int verdict_exit(const std::vector<InequalityReport>& reports) {
    bool violated = false, inconclusive = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Violated) violated = true;
        if (r.verdict == Verdict::Inconclusive) inconclusive = true;
    }
    return violated ? 2 : (inconclusive ? 3 : 0);
}

int cmd_verify(const CliOptions& opt) {
    const json cfg = load_config(opt.config_path);
    const fs::path dir = output_dir(cfg, opt);
    std::vector<InequalityReport> all;
    for (const std::string& name : theorem_list(cfg)) {
        InequalityCase c = build_case(cfg, opt);
        std::vector<InequalityReport> reps = run_theorem(name, std::move(c));
        json arr = json::array();
        for (const auto& r : reps) {
            arr.push_back(to_json(r));
            std::cout << r.theorem << ": " << to_string(r.verdict) << "\n";
            all.push_back(r);
        }
        std::ofstream out(dir / (name + ".json"));
        out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    }
    return verdict_exit(all);
}

struct SweepCell {
    double alpha, m, s, nu, mu;
    bool has_s = false;
};

std::map<std::string, std::vector<double>> parse_axes(const CliOptions& opt) {
    std::map<std::string, std::vector<double>> axes;
    for (const std::string& spec : opt.axes) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw configuration_error("--axis must look like name=v1,v2,...");
        const std::string name = spec.substr(0, eq);
        if (name != "alpha" && name != "m" && name != "s" && name != "nu" &&
            name != "mu")
            throw configuration_error("unknown sweep axis '" + name + "'");
        std::vector<double> vals;
        std::string rest = spec.substr(eq + 1);
        size_t pos = 0;
        while (pos <= rest.size()) {
            const size_t comma = rest.find(',', pos);
            const std::string tok =
                rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                            : comma - pos);
            if (tok.empty())
                throw configuration_error("empty value in axis '" + name + "'");
            vals.push_back(std::stod(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        axes[name] = vals;
    }
    return axes;
}

std::string csv_row(const SweepCell& cell, const std::string& theorem,
                    const InequalityReport* rep, const std::string& error) {
    std::string row = fmt17(cell.alpha) + "," + fmt17(cell.m) + "," +
                      (cell.has_s ? fmt17(cell.s) : std::string()) + "," +
                      fmt17(cell.nu) + "," + fmt17(cell.mu) + "," + theorem;
    for (int i = 0; i < 3; ++i) {
        if (rep && i < static_cast<int>(rep->sides.size()))
            row += "," + rep->sides[i].label + "," + fmt17(rep->sides[i].value.base);
        else
            row += ",,";
    }
    for (int i = 0; i < 2; ++i) {
        if (rep && i < static_cast<int>(rep->margins.size()))
            row += "," + fmt17(rep->margins[i]);
        else
            row += ",";
    }
    row += ",";
    row += rep ? to_string(rep->verdict) : "";
    row += ",";
    row += error;
    return row;
}

int cmd_sweep(const CliOptions& opt) {
    const json cfg = load_config(opt.config_path);
    const auto axes = parse_axes(opt);
    auto axis_or = [&](const char* name, double fallback) {
        auto it = axes.find(name);
        if (it != axes.end()) return it->second;
        return std::vector<double>{fallback};
    };
    const std::vector<double> alphas = axis_or("alpha", require_number(cfg, "alpha"));
    const std::vector<double> ms = axis_or("m", cfg.value("m", 1.0));
    const bool has_s = axes.count("s") > 0;
    const std::vector<double> ss = axis_or("s", 1.0);
    if (!cfg.contains("interval") || !cfg["interval"].is_array() ||
        cfg["interval"].size() != 2)
        throw configuration_error("config field 'interval' must be [nu, mu]");
    const std::vector<double> nus = axis_or("nu", cfg["interval"][0].get<double>());
    const std::vector<double> mus = axis_or("mu", cfg["interval"][1].get<double>());

    std::vector<SweepCell> cells;
    for (double a : alphas)
        for (double m : ms)
            for (double s : ss)
                for (double nu : nus)
                    for (double mu : mus)
                        cells.push_back({a, m, s, nu, mu, has_s});

    const std::vector<std::string> theorems = theorem_list(cfg);
    std::vector<std::vector<std::string>> rows(cells.size());
    std::vector<std::vector<InequalityReport>> cell_reports(cells.size());

    // worker pool; output assembled in deterministic axis order below
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const SweepCell& cell = cells[i];
            for (const std::string& name : theorems) {
                try {
                    json mod = cfg;
                    mod["alpha"] = cell.alpha;
                    mod["m"] = cell.m;
                    if (cell.has_s) mod["h"] = {{"kind", "power_s_alpha"}, {"s", cell.s}};
                    mod["interval"] = {cell.nu, cell.mu};
                    std::vector<InequalityReport> reps =
                        run_theorem(name, build_case(mod, opt));
                    for (const auto& r : reps) {
                        rows[i].push_back(csv_row(cell, r.theorem, &r, ""));
                        cell_reports[i].push_back(r);
                    }
                } catch (const std::exception& e) {
                    std::string msg = e.what();
                    for (char& ch : msg)
                        if (ch == ',' || ch == '\n') ch = ';';
                    rows[i].push_back(csv_row(cell, name, nullptr, msg));
                }
            }
        }
    };
    const unsigned nthreads =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(cells.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    const fs::path dir = output_dir(cfg, opt);
    const fs::path file =
        opt.format == "json" ? dir / "sweep.json" : dir / "sweep.csv";
    std::ofstream out(file);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& reps : cell_reports)
            for (const auto& r : reps) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
    } else {
        out << "alpha,m,s,nu,mu,theorem,side1_label,side1_base,side2_label,"
               "side2_base,side3_label,side3_base,margin1,margin2,verdict,error\n";
        for (const auto& cell_rows : rows)
            for (const std::string& row : cell_rows) out << row << "\n";
    }
    std::cout << "wrote " << file.string() << " (" << cells.size() << " cells)\n";

    std::vector<InequalityReport> flat;
    for (const auto& reps : cell_reports)
        for (const auto& r : reps) flat.push_back(r);
    return verdict_exit(flat);
}

int cmd_quadrature(const CliOptions& opt) {
    const json cfg = load_config(opt.config_path);
    if (!cfg.contains("G")) throw configuration_error("config requires field 'G'");
    const Alpha alpha(require_number(cfg, "alpha"));
    GeneralizedFunction G = parse_function(cfg["G"], "G");
    WeightFunction W{cfg.contains("weight")
                         ? parse_function(cfg["weight"], "weight")
                         : GeneralizedFunction::constant(1.0)};
    const json q = cfg.value("quadrature", json::object());
    const double m = q.value("m", cfg.value("m", 1.0));
    IntegralScheme scheme = parse_scheme(cfg);
    if (!opt.scheme_override.empty())
        scheme.kind = parse_scheme_kind(opt.scheme_override);

    QuadratureResult res;
    if (q.contains("partition")) {
        Partition part;
        part.points = q["partition"].get<std::vector<double>>();
        res = weighted_trapezoid(G, W, part, alpha, m, scheme);
    } else if (q.contains("target")) {
        if (!cfg.contains("interval") || cfg["interval"].size() != 2)
            throw configuration_error("config field 'interval' must be [nu, mu]");
        res = adaptive_quadrature(G, W, alpha, m, cfg["interval"][0].get<double>(),
                                  cfg["interval"][1].get<double>(),
                                  q["target"].get<double>(),
                                  q.value("max_cells", 1024), scheme);
    } else {
        throw configuration_error(
            "quadrature config requires 'target' or an explicit 'partition'");
    }

    const fs::path dir = output_dir(cfg, opt);
    std::ofstream out(dir / "quadrature.json");
    out << to_json(res).dump(2) << "\n";
    std::cout << "T=" << fmt17(res.value.base)
              << " bound=" << fmt17(res.certified_bound.base)
              << " actual=" << fmt17(res.actual_error.base)
              << " cells=" << res.cells.size()
              << (res.converged ? "" : " (target not met)") << "\n";
    return res.converged ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"local fractional Hermite-Hadamard toolkit"};
    app.require_subcommand(1);

    CliOptions opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", opt.config_path, "config file (JSON)")->required();
        sub->add_option("--out", opt.out, "output directory");
        sub->add_option("--format", opt.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--force", opt.force, "skip convexity preconditions");
        sub->add_option("--scheme", opt.scheme_override,
                        "exact|kernel_left|kernel_right|classical");
    };
    CLI::App* verify = app.add_subcommand("verify", "run verifier(s) from a config");
    add_common(verify);
    CLI::App* sweep = app.add_subcommand("sweep", "cross-product parameter sweep");
    add_common(sweep);
    sweep->add_option("--axis", opt.axes, "axis values, e.g. alpha=0.3,0.5")
        ->take_all();
    CLI::App* quad =
        app.add_subcommand("quadrature", "certified weighted trapezoid");
    add_common(quad);

    CLI11_PARSE(app, argc, argv);
    try {
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt);
        if (app.got_subcommand(quad)) return cmd_quadrature(opt);
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const configuration_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
