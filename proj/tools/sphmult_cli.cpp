// Experiment driver: wires models, profiles, grids and tolerances into
// reproducible runs with CSV/JSON outputs.
//
// Exit codes: 0 all declared tolerances passed, 1 numerical failure,
// 2 usage or config error.

#include "CLI11.hpp"
#include "json.hpp"

#include "sphmult/contraction.hpp"
#include "sphmult/fourier.hpp"
#include "sphmult/model.hpp"
#include "sphmult/norms.hpp"
#include "sphmult/report.hpp"
#include "sphmult/spherical.hpp"
#include "sphmult/transfer.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace sphmult;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw usage_error("bad JSON in " + path + ": " + e.what());
    }
    if (!j.is_object()) throw usage_error("config must be a JSON object: " + path);
    return j;
}

// defaults <- config file <- command-line overrides (shallow)
json resolve_config(json defaults, const std::string& config_path, const json& overrides) {
    if (!config_path.empty()) {
        json file = load_json_file(config_path);
        for (auto& [k, v] : file.items()) defaults[k] = v;
    }
    for (auto& [k, v] : overrides.items()) defaults[k] = v;
    return defaults;
}

// "a:b:n" (linear) or "a:b:nlog" (geometric); JSON arrays pass through.
std::vector<double> parse_t_grid(const json& spec) {
    std::vector<double> out;
    if (spec.is_array()) {
        for (const auto& v : spec) out.push_back(v.get<double>());
    } else if (spec.is_string()) {
        std::string s = spec.get<std::string>();
        bool logspace = false;
        if (s.size() >= 3 && s.substr(s.size() - 3) == "log") {
            logspace = true;
            s = s.substr(0, s.size() - 3);
            if (!s.empty() && s.back() == ':') s.pop_back();
        }
        double a = 0, b = 0;
        int n = 0;
        if (std::sscanf(s.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3)
            throw usage_error("bad t-grid spec (want a:b:n or a:b:nlog): " +
                              spec.get<std::string>());
        if (n < 2 || !(a > 0) || !(b > a)) throw usage_error("bad t-grid range");
        for (int i = 0; i < n; ++i) {
            double t = logspace ? a * std::pow(b / a, double(i) / (n - 1))
                                : a + (b - a) * double(i) / (n - 1);
            out.push_back(t);
        }
    } else {
        throw usage_error("t_grid must be an array or an a:b:n spec string");
    }
    if (out.size() < 2 || !std::is_sorted(out.begin(), out.end()))
        throw usage_error("t grid must be increasing with >= 2 points");
    return out;
}

std::vector<double> parse_number_list(const json& spec, const char* what) {
    if (!spec.is_array() || spec.empty())
        throw usage_error(std::string(what) + " must be a non-empty array");
    std::vector<double> out;
    for (const auto& v : spec) out.push_back(v.get<double>());
    return out;
}

// "bump:R[:k]", "gauss:SIGMA[:cut]", "modgauss:SIGMA:K", "csv:PATH" or PATH
RadialFunction parse_one_profile(const std::string& spec) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            if (i == s.size() || s[i] == ':') {
                parts.push_back(s.substr(start, i - start));
                start = i + 1;
            }
        }
        return parts;
    };
    auto parts = split(spec);
    try {
        if (parts[0] == "bump") {
            if (parts.size() < 2) throw usage_error("bump profile needs a radius: " + spec);
            double r = std::stod(parts[1]);
            int k = parts.size() > 2 ? std::stoi(parts[2]) : 8;
            return make_smooth_bump(r, k);
        }
        if (parts[0] == "gauss") {
            if (parts.size() < 2) throw usage_error("gauss profile needs a sigma: " + spec);
            double s = std::stod(parts[1]);
            double cut = parts.size() > 2 ? std::stod(parts[2]) : 6.5;
            return make_gaussian_profile(s, cut);
        }
        if (parts[0] == "modgauss") {
            if (parts.size() < 3) throw usage_error("modgauss profile needs sigma:k: " + spec);
            return make_modulated_gaussian(std::stod(parts[1]), std::stod(parts[2]));
        }
    } catch (const std::invalid_argument&) {
        throw usage_error("bad profile parameters: " + spec);
    }
    std::string path = parts[0] == "csv" ? spec.substr(4) : spec;
    if (!fs::exists(path)) throw usage_error("profile file not found: " + path);
    return RadialFunction::from_csv(path);
}

RadialFunction parse_profile(const SymmetricSpaceModel& model, const json& spec) {
    std::vector<std::string> specs;
    if (spec.is_string()) specs.push_back(spec.get<std::string>());
    else if (spec.is_array())
        for (const auto& v : spec) specs.push_back(v.get<std::string>());
    else throw usage_error("profile must be a string or array of strings");

    RadialFunction out = parse_one_profile(specs[0]);
    for (std::size_t i = 1; i < specs.size(); ++i)
        out = RadialFunction::tensor(out, parse_one_profile(specs[i]));
    if (out.rank() == 1 && model.rank() > 1) {
        // broadcast a single radial profile to every factor
        RadialFunction base = out;
        for (int f = 1; f < model.rank(); ++f) out = RadialFunction::tensor(out, base);
    }
    if (out.rank() != model.rank())
        throw usage_error("profile rank " + std::to_string(out.rank()) +
                          " does not match model rank " + std::to_string(model.rank()));
    return out;
}

SymmetricSpaceModel parse_model(const json& cfg) {
    if (!cfg.contains("model")) throw usage_error("missing model name");
    try {
        return SymmetricSpaceModel::from_name(cfg["model"].get<std::string>());
    } catch (const invalid_model_error& e) {
        throw usage_error(e.what());
    }
}

int quad_order_of(const json& cfg) {
    int q = cfg.value("quad_order", 200);
    if (q < 8) throw usage_error("quad_order must be >= 8");
    return q;
}

std::pair<double, double> slope_band_of(const json& cfg) {
    auto band = cfg.value("slope_band", json::array({-1.3, -0.7}));
    if (!band.is_array() || band.size() != 2) throw usage_error("slope_band must be [lo, hi]");
    double lo = band[0].get<double>(), hi = band[1].get<double>();
    if (!(lo < hi)) throw usage_error("slope_band must satisfy lo < hi");
    return {lo, hi};
}

fs::path prepare_out_dir(const json& cfg, const char* sub) {
    fs::path dir = cfg.value("out_dir", std::string("out/") + sub);
    fs::create_directories(dir);
    return dir;
}

void write_resolved_config(const fs::path& dir, const json& cfg) {
    write_text_file((dir / "resolved_config.json").string(), cfg.dump(2) + "\n");
}

std::string csv_row(std::initializer_list<double> vals) {
    std::string row;
    for (double v : vals) {
        if (!row.empty()) row += ',';
        row += format_double(v);
    }
    return row + "\n";
}

// ---------------------------------------------------------------- lemma --

int run_lemma(const json& cfg) {
    auto model = parse_model(cfg);
    auto ts = parse_t_grid(cfg.value("t_grid", json("50:800:5log")));
    auto zs = parse_number_list(cfg.value("z_values", json::array({0.5, 1.0, 2.0})), "z_values");
    auto thetas = parse_number_list(cfg.value("theta_values", json::array({0.3, 0.8, 1.2})),
                                    "theta_values");
    double ytheta = cfg.value("y_theta", 0.0);
    auto [lo, hi] = slope_band_of(cfg);
    auto dir = prepare_out_dir(cfg, "lemma");

    std::string csv = "z,theta,t,error,value\n";
    json summary = json::object();
    summary["cases"] = json::array();
    bool all_pass = true;
    for (double z : zs) {
        for (double theta : thetas) {
            std::vector<double> X(model.dim(), 0.0), Y(model.dim(), 0.0);
            X[0] = theta;
            if (model.dim() > 1) Y[1] = ytheta;
            CartanPoint Z(std::vector<double>(model.rank(), z));
            auto rep = lemma_limit_check(model, Z, X, Y, ts, lo, hi);
            for (std::size_t i = 0; i < rep.t.size(); ++i)
                csv += csv_row({z, theta, rep.t[i], rep.errors[i], rep.values[i]});
            json c;
            c["z"] = z;
            c["theta"] = theta;
            c["slope"] = std::isfinite(rep.slope) ? json(rep.slope) : json();
            c["limit_estimate"] = rep.limit_estimate;
            c["pass"] = rep.pass;
            if (!rep.note.empty()) c["note"] = rep.note;
            summary["cases"].push_back(c);
            all_pass = all_pass && rep.pass;
        }
    }
    summary["pass"] = all_pass;
    write_text_file((dir / "lemma_errors.csv").string(), csv);
    write_text_file((dir / "lemma_summary.json").string(), summary.dump(2) + "\n");
    write_resolved_config(dir, cfg);
    std::cout << (all_pass ? "lemma: PASS\n" : "lemma: FAIL\n");
    return all_pass ? 0 : 1;
}

// -------------------------------------------------------------- forward --

MultiplierFamily parse_family(const SymmetricSpaceModel& model, const std::string& spec) {
    if (spec == "one") return {[](double, const WeightPoint&) { return 1.0; }, "one", ""};
    if (spec == "gauss")
        return dilation_family(
            model, [](const CartanPoint& Z) { return std::exp(-Z.norm2() * Z.norm2()); },
            "dilation[exp(-|Z|^2)]");
    if (spec == "scaled-gauss")
        return {[](double t, const WeightPoint& w) {
                    double n2 = 0.0;
                    for (auto c : w.coords) n2 += double(c) * double(c);
                    return std::exp(-n2 / (t * t));
                },
                "exp(-|w|^2/t^2)", ""};
    if (spec.rfind("gauss-reg:", 0) == 0) {
        double eps = std::stod(spec.substr(10));
        return gaussian_regularize(parse_family(model, "gauss"), eps);
    }
    if (spec.rfind("dilation:", 0) == 0)
        return dilation_family(model, parse_one_profile(spec.substr(9)));
    throw usage_error("unknown family spec: " + spec);
}

int run_forward(const json& cfg) {
    auto model = parse_model(cfg);
    std::string famspec = cfg.value("family", "gauss");
    auto fam = parse_family(model, famspec);
    auto ts = parse_t_grid(cfg.value("t_grid", json("100:1000000:5log")));
    auto zs = parse_number_list(cfg.value("z_values", json::array({0.25, 0.5, 1.0, 1.5, 2.0})),
                                "z_values");
    double limit_tol = cfg.value("limit_tol", 1e-5);
    auto dir = prepare_out_dir(cfg, "forward");

    // analytic limit known for the builtin gaussian dilation families
    bool has_target = famspec == "gauss" || famspec.rfind("gauss-reg:", 0) == 0;
    double reg_eps = famspec.rfind("gauss-reg:", 0) == 0 ? std::stod(famspec.substr(10)) : 0.0;

    std::string csv = "z,t,error,estimate\n";
    json summary = json::object();
    summary["family"] = fam.name;
    if (!fam.note.empty()) summary["family_note"] = fam.note;
    summary["cases"] = json::array();
    bool all_pass = true;
    for (double z : zs) {
        CartanPoint Z(std::vector<double>(model.rank(), z));
        auto rep = forward_limit(model, fam, Z, ts);
        for (std::size_t i = 0; i < rep.t.size(); ++i)
            csv += csv_row({z, rep.t[i], rep.errors[i], rep.values[i]});
        bool pass = rep.pass;
        json c;
        c["z"] = z;
        c["limit_estimate"] = rep.limit_estimate;
        c["slope"] = std::isfinite(rep.slope) ? json(rep.slope) : json();
        if (has_target) {
            double z2 = Z.norm2() * Z.norm2();
            double target = std::exp(-z2) * (reg_eps > 0.0 ? std::exp(-reg_eps * z2) : 1.0);
            c["limit_target"] = target;
            c["limit_error"] = std::abs(rep.limit_estimate - target);
            pass = pass && std::abs(rep.limit_estimate - target) <= limit_tol;
        }
        c["pass"] = pass;
        summary["cases"].push_back(c);
        all_pass = all_pass && pass;
    }
    summary["pass"] = all_pass;
    write_text_file((dir / "forward_errors.csv").string(), csv);
    write_text_file((dir / "forward_summary.json").string(), summary.dump(2) + "\n");
    write_resolved_config(dir, cfg);
    std::cout << (all_pass ? "forward: PASS\n" : "forward: FAIL\n");
    return all_pass ? 0 : 1;
}

// ------------------------------------------------------------- backward --

int run_backward(const json& cfg) {
    auto model = parse_model(cfg);
    auto xi = parse_profile(model, cfg.value("profile", json("bump:0.5")));
    if (cfg.value("unit_mass", true)) xi = unit_mass(model, xi, quad_order_of(cfg));
    auto ts = parse_t_grid(cfg.value("t_grid", json("20:320:5log")));
    auto zs =
        parse_number_list(cfg.value("z_values", json::array({0.0, 0.5, 1.0, 2.0})), "z_values");
    auto [lo, hi] = slope_band_of(cfg);
    double z0_tol = cfg.value("z0_tol", 1e-8);
    int border = cfg.value("backward_order", 64);
    BackwardQuad quad{border, border, border};
    auto dir = prepare_out_dir(cfg, "backward");

    std::string csv = "z,t,error,estimate\n";
    json summary = json::object();
    summary["profile"] = xi.description();
    summary["cases"] = json::array();
    bool all_pass = true;
    for (double z : zs) {
        CartanPoint Z(std::vector<double>(model.rank(), z));
        auto rep = backward_limit_check(model, xi, Z, ts, quad, quad_order_of(cfg), lo, hi);
        for (std::size_t i = 0; i < rep.t.size(); ++i)
            csv += csv_row({z, rep.t[i], rep.errors[i], rep.values[i]});
        bool pass = rep.pass;
        if (z == 0.0) {
            pass = true;
            for (double e : rep.errors) pass = pass && e <= z0_tol;
        }
        json c;
        c["z"] = z;
        c["slope"] = std::isfinite(rep.slope) ? json(rep.slope) : json();
        c["limit_estimate"] = rep.limit_estimate;
        c["pass"] = pass;
        if (!rep.note.empty()) c["note"] = rep.note;
        summary["cases"].push_back(c);
        all_pass = all_pass && pass;
    }
    summary["pass"] = all_pass;
    write_text_file((dir / "backward_errors.csv").string(), csv);
    write_text_file((dir / "backward_summary.json").string(), summary.dump(2) + "\n");
    write_resolved_config(dir, cfg);
    std::cout << (all_pass ? "backward: PASS\n" : "backward: FAIL\n");
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- norms --

json norm_estimate_json(const NormEstimate& e) {
    json j;
    j["p"] = e.p;
    j["value"] = e.value;
    j["kind"] = e.kind == NormKind::exact ? "exact" : "lower_bound";
    if (!e.witness.empty()) j["witness"] = e.witness;
    return j;
}

int run_norms(const json& cfg) {
    auto model = parse_model(cfg);
    auto xi = parse_profile(model, cfg.value("profile", json("bump:0.5")));
    if (cfg.value("unit_mass", true)) xi = unit_mass(model, xi, quad_order_of(cfg));
    auto ts = parse_t_grid(cfg.value("t_grid", json("20:80:3log")));
    auto zs =
        parse_number_list(cfg.value("z_grid", json::array({0.0, 0.5, 1.0, 1.5, 2.0})), "z_grid");
    auto ps = parse_number_list(cfg.value("p_values", json::array({1.5, 2.0, 3.0})), "p_values");
    int degree_cut = cfg.value("degree_cut", 12);
    double p2_tol = cfg.value("p2_tol", 1e-2);
    int border = cfg.value("backward_order", 64);
    auto dir = prepare_out_dir(cfg, "norms");

    auto trials = default_flat_trials(model);
    LpFlatOptions opt;
    opt.theta_order = quad_order_of(cfg);

    std::string csv = "p,side,t,value,kind\n";
    json summary = json::object();
    summary["profile"] = xi.description();
    summary["reports"] = json::array();
    bool all_pass = true;
    for (double p : ps) {
        auto rep = transference_norm_report(model, xi, p, ts, zs, trials, degree_cut,
                                            BackwardQuad{border, border, border}, opt, p2_tol);
        csv += format_double(p) + ",flat,," + format_double(rep.flat.value) + ",lower_bound\n";
        for (std::size_t i = 0; i < rep.t.size(); ++i)
            csv += format_double(p) + ",spherical," + format_double(rep.t[i]) + "," +
                   format_double(rep.spherical[i].value) + ",lower_bound\n";
        json r;
        r["p"] = p;
        r["flat"] = norm_estimate_json(rep.flat);
        r["spherical"] = json::array();
        for (std::size_t i = 0; i < rep.t.size(); ++i) {
            json s = norm_estimate_json(rep.spherical[i]);
            s["t"] = rep.t[i];
            s["ratio_flat_over_spherical"] = rep.ratio[i];
            r["spherical"].push_back(s);
        }
        if (p == 2.0) {
            r["sup_flat_symbol"] = rep.sup_flat_symbol;
            r["sup_mt"] = rep.sup_mt;
            r["p2_gap"] = rep.p2_gap;
            r["p2_pass"] = rep.p2_pass;
            all_pass = all_pass && rep.p2_pass;
        }
        if (!rep.note.empty()) r["note"] = rep.note;
        summary["reports"].push_back(r);
    }
    summary["pass"] = all_pass;
    write_text_file((dir / "norms_table.csv").string(), csv);
    write_text_file((dir / "norms_report.json").string(), summary.dump(2) + "\n");
    write_resolved_config(dir, cfg);
    std::cout << (all_pass ? "norms: PASS\n" : "norms: FAIL\n");
    return all_pass ? 0 : 1;
}

// --------------------------------------------------------- fourier-check --

int run_fourier_check(const json& cfg) {
    auto model = parse_model(cfg);
    json profile_spec = cfg.value("profile", json("bump:0.5"));
    auto xi = parse_profile(model, profile_spec);
    int order = quad_order_of(cfg);
    int inv_order = cfg.value("inverse_order", 600);
    double tol = cfg.value("roundtrip_tol", 1e-5);
    auto dir = prepare_out_dir(cfg, "fourier-check");

    auto zrad = choose_inverse_radius(model, xi, order);
    auto xhat = transform_profile(model, xi, zrad, order);
    InverseTransform inv(model, xhat, inv_order);

    // sup of the round-trip error over a diagonal chamber grid
    double sup = 0.0;
    std::string csv = "theta,original,recovered,error\n";
    const int n_check = 61;
    double max_theta = 1.2 * xi.support_radius();
    for (int i = 0; i < n_check; ++i) {
        double th = max_theta * i / (n_check - 1);
        CartanPoint X(std::vector<double>(model.rank(), th));
        double orig = xi(X.coords);
        double rec = inv.at(X);
        sup = std::max(sup, std::abs(orig - rec));
        csv += csv_row({th, orig, rec, std::abs(orig - rec)});
    }
    bool pass = sup <= tol;

    json summary = json::object();
    summary["profile"] = xi.description();
    summary["inverse_radius"] = zrad;
    summary["roundtrip_sup_error"] = sup;
    summary["roundtrip_tol"] = tol;

    // Gaussian closed form on su2: nu = 1/2 is exactly the R^3 transform
    bool is_unit_gauss =
        profile_spec.is_string() && profile_spec.get<std::string>().rfind("gauss:1", 0) == 0;
    if (model.name() == "su2" && is_unit_gauss) {
        double gtol = cfg.value("gaussian_tol", 1e-6);
        ForwardTransform F(model, xi, order);
        double worst = 0.0;
        for (double z = 0.0; z <= 6.0; z += 0.25) {
            double want = std::pow(2.0 * M_PI, 1.5) * std::exp(-0.5 * z * z);
            worst = std::max(worst, std::abs(F.at(CartanPoint({z})) - want));
        }
        summary["gaussian_closed_form_error"] = worst;
        summary["gaussian_tol"] = gtol;
        pass = pass && worst <= gtol;
    }
    summary["pass"] = pass;
    write_text_file((dir / "roundtrip.csv").string(), csv);
    write_text_file((dir / "fourier_check.json").string(), summary.dump(2) + "\n");
    write_resolved_config(dir, cfg);
    std::cout << (pass ? "fourier-check: PASS\n" : "fourier-check: FAIL\n");
    return pass ? 0 : 1;
}

// ------------------------------------------------------------ model-info --

int run_model_info(const json& cfg) {
    auto model = parse_model(cfg);
    json info;
    info["name"] = model.name();
    info["rank"] = model.rank();
    info["dim"] = model.dim();
    info["root_count"] = model.root_count();
    info["delta"] = model.delta();
    info["chamber_radius"] = model.chamber_radius();
    info["omega_radius"] = omega_radius(model);
    info["o_radius"] = o_radius(model);
    info["measure_constant"] = model.measure_constant();
    info["roots"] = json::array();
    for (const auto& r : model.roots()) {
        json jr;
        jr["coords"] = r.coords;
        jr["multiplicity"] = r.multiplicity;
        jr["weyl_denominators"] = r.weyl_denominators;
        info["roots"].push_back(jr);
    }
    json dims = json::array();
    for (long long n = 0; n <= 6; ++n) {
        WeightPoint w(std::vector<long long>(model.rank(), n));
        dims.push_back(model.weyl_dim(w));
    }
    info["weyl_dim_diagonal_0_to_6"] = dims;

    std::cout << info.dump(2) << "\n";
    if (cfg.contains("out_dir")) {
        auto dir = prepare_out_dir(cfg, "model-info");
        write_text_file((dir / "model_info.json").string(), info.dump(2) + "\n");
        write_resolved_config(dir, cfg);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical transference experiments between spherical and flat multipliers"};
    app.require_subcommand(1);

    struct Flags {
        std::string model, config, out_dir, t_grid, tol;
        std::vector<std::string> profiles;
        int quad_order = 0;
    };

    std::map<std::string, Flags> flags;
    for (const char* name :
         {"lemma", "forward", "backward", "norms", "fourier-check", "model-info"}) {
        auto* sub = app.add_subcommand(name);
        auto& f = flags[name];
        sub->add_option("--model", f.model, "model name (sphere:d, su2, product:a,b)");
        sub->add_option("--config", f.config, "JSON config file");
        sub->add_option("--out-dir", f.out_dir, "output directory");
        sub->add_option("--t-grid", f.t_grid, "t grid spec a:b:n or a:b:nlog");
        sub->add_option("--tol", f.tol, "primary tolerance of the subcommand");
        sub->add_option("--quad-order", f.quad_order, "quadrature nodes per axis");
        sub->add_option("--profile", f.profiles,
                        "profile spec (bump:R, gauss:SIGMA, modgauss:SIGMA:K, csv path); "
                        "repeat per product factor");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    const Flags& f = flags[sub];

    json overrides = json::object();
    if (!f.model.empty()) overrides["model"] = f.model;
    if (!f.out_dir.empty()) overrides["out_dir"] = f.out_dir;
    if (!f.t_grid.empty()) overrides["t_grid"] = f.t_grid;
    if (f.quad_order > 0) overrides["quad_order"] = f.quad_order;
    if (!f.profiles.empty())
        overrides["profile"] = f.profiles.size() == 1 ? json(f.profiles[0]) : json(f.profiles);
    if (!f.tol.empty()) {
        double tol = 0.0;
        try {
            tol = std::stod(f.tol);
        } catch (...) {
            std::cerr << "error: bad --tol value: " << f.tol << "\n";
            return 2;
        }
        // --tol maps onto the subcommand's headline tolerance
        if (sub == "backward") overrides["z0_tol"] = tol;
        else if (sub == "forward") overrides["limit_tol"] = tol;
        else if (sub == "norms") overrides["p2_tol"] = tol;
        else if (sub == "fourier-check") overrides["roundtrip_tol"] = tol;
        else overrides["tol"] = tol;
    }

    json defaults = json::object();
    defaults["model"] = "su2";

    try {
        json cfg = resolve_config(defaults, f.config, overrides);
        if (sub == "lemma") return run_lemma(cfg);
        if (sub == "forward") return run_forward(cfg);
        if (sub == "backward") return run_backward(cfg);
        if (sub == "norms") return run_norms(cfg);
        if (sub == "fourier-check") return run_fourier_check(cfg);
        if (sub == "model-info") return run_model_info(cfg);
        std::cerr << "error: unknown subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_model_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}
