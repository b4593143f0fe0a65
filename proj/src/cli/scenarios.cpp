// scenarios.cpp - scenario dispatch and CSV emission

#include "fdqme/cli/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fdqme/baths.hpp"
#include "fdqme/fdme.hpp"
#include "fdqme/liouville.hpp"
#include "fdqme/oracle.hpp"
#include "fdqme/parallel.hpp"
#include "fdqme/redfield.hpp"
#include "fdqme/waveguide.hpp"

namespace fdqme::cli {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

baths::ThermalBathParams thermal_params(const ScenarioConfig& c)
{
    baths::ThermalBathParams p;
    p.g = c.param_or("g", 1.0);
    p.omega_q = c.param("omega_q");
    p.omega_c = p.omega_q - c.param("delta");
    p.kappa = c.param("kappa");
    p.nbar = c.param("nbar");
    p.validate();
    return p;
}

baths::SqueezedBathParams squeezed_params(const ScenarioConfig& c)
{
    baths::SqueezedBathParams p;
    p.g = c.param_or("g", 1.0);
    p.delta_q = c.param("delta_q");
    p.delta_c = c.param("delta_c");
    p.kappa = c.param("kappa");
    if (c.has("delta_c_eff")) {
        const double e = c.param("delta_c_eff");
        p.r = std::sqrt((p.delta_c - e) * (p.delta_c + e));
    } else {
        p.r = c.param_or("r", 0.0);
    }
    p.validate();
    return p;
}

struct Context {
    const ScenarioConfig& cfg;
    const RunOptions& opts;
    std::string prefix;
    std::vector<std::string> meta; // key = value lines for the sidecar
    std::vector<fs::path> written;

    fs::path file(const std::string& curve) const
    {
        return opts.out_dir / (prefix + (curve.empty() ? "" : "_" + curve) + ".csv");
    }

    void emit(const std::string& curve, const std::vector<Column>& cols)
    {
        std::vector<std::string> header{"scenario: " + cfg.scenario, "curve: " + curve};
        for (const auto& [k, v] : cfg.params) {
            header.push_back(k + " = " + fmt(v));
        }
        for (const auto& [k, v] : cfg.options) {
            header.push_back(k + " = " + v);
        }
        const fs::path path = file(curve);
        write_csv(path, header, cols);
        written.push_back(path);
        meta.push_back("file." + curve + " = " + path.filename().string());
        meta.push_back("file." + curve + ".rows = " + std::to_string(cols.front().values.size()));
    }
};

std::vector<double> frequency_grid(const ScenarioConfig& c, const std::vector<grid::Peak>& peaks,
                                   const std::vector<double>& fallback, std::vector<std::string>& meta)
{
    const auto it = c.grids.find("frequency");
    if (it == c.grids.end()) {
        meta.push_back("grid.frequency = default adaptive, " + std::to_string(fallback.size()) + " points");
        return fallback;
    }
    const auto& g = it->second;
    std::vector<double> x = g.spacing == "adaptive" ? grid::adaptive(g.min, g.max, peaks) : g.values();
    meta.push_back("grid.frequency = " + g.spacing + ", " + std::to_string(x.size()) + " points");
    return x;
}

Column spectrum_column(const Spectrum& s) { return {"density [1/unit]", s.values}; }

void thermal_spectrum(Context& ctx)
{
    const auto p = thermal_params(ctx.cfg);
    const auto m = baths::thermal_markov_rates(p);
    const auto x = frequency_grid(ctx.cfg, {{m.delta_eff, m.gamma_eff}, {-p.detuning(), p.kappa}},
                                  measures::spectrum_grid(m.delta_eff, m.gamma_eff, {-p.detuning()}, p.kappa,
                                                          std::abs(p.detuning()) + 50.0 * p.kappa),
                                  ctx.meta);
    const auto model = baths::thermal_kernel(p);
    const fdme::FrequencyPropagator fp(model);
    const fdme::FrequencyPropagator fm(model, fdme::KernelMode::markov);
    const Vec4 rho0 = liouville::vectorize(qubit::projector_e());
    ctx.meta.push_back("steady_state.initial_state = |e>");
    const Mat sm = qubit::sigma_minus();
    const auto s_fd = fdme::emission_spectrum(fp, sm, fdme::steady_state(fp, rho0), x);
    const auto s_m = fdme::emission_spectrum(fm, sm, fdme::steady_state(fm, rho0), x);
    const auto s_br = redfield::br_spectrum(p, x);
    ctx.meta.push_back("delta_eff = " + fmt(m.delta_eff));
    ctx.meta.push_back("gamma_eff = " + fmt(m.gamma_eff));
    ctx.emit("fdqme", {{"delta [g]", x}, spectrum_column(s_fd)});
    ctx.emit("markov", {{"delta [g]", x}, spectrum_column(s_m)});
    ctx.emit("br", {{"delta [g]", x}, spectrum_column(s_br)});
}

void squeezed_spectrum(Context& ctx)
{
    const auto p = squeezed_params(ctx.cfg);
    const auto b = baths::bogoliubov_params(p);
    const auto m = baths::squeezed_markov_rates(p);
    const double span = std::abs(b.delta_diff) + std::abs(b.sigma_sum) + 40.0 * p.kappa;
    const auto x = frequency_grid(
        ctx.cfg, {{m.delta_eff, m.gamma_eff}, {-b.delta_diff, p.kappa}, {-b.sigma_sum, p.kappa}},
        measures::spectrum_grid(m.delta_eff, m.gamma_eff, {-b.delta_diff, -b.sigma_sum}, p.kappa, span), ctx.meta);
    const auto model = baths::squeezed_kernel(p);
    const fdme::FrequencyPropagator fp(model);
    const fdme::FrequencyPropagator fm(model, fdme::KernelMode::markov);
    const Vec4 rho0 = liouville::vectorize(qubit::projector_e());
    ctx.meta.push_back("steady_state.initial_state = |e>");
    const Mat sm = qubit::sigma_minus();
    const auto s_fd = fdme::emission_spectrum(fp, sm, fdme::steady_state(fp, rho0), x);
    const auto s_m = fdme::emission_spectrum(fm, sm, fdme::steady_state(fm, rho0), x);
    ctx.meta.push_back("delta_c_eff = " + fmt(b.delta_c_eff));
    ctx.meta.push_back("delta_eff = " + fmt(m.delta_eff));
    ctx.meta.push_back("gamma_eff = " + fmt(m.gamma_eff));
    ctx.emit("fdqme", {{"delta [g]", x}, spectrum_column(s_fd)});
    ctx.emit("markov", {{"delta [g]", x}, spectrum_column(s_m)});
}

void waveguide_spectrum(Context& ctx)
{
    waveguide::WaveguideParams p;
    p.omega0 = ctx.cfg.param("omega0");
    p.gamma = ctx.cfg.param_or("gamma", 1.0);
    p.beta = ctx.cfg.param("beta");
    p.eta = ctx.cfg.param("eta");
    p.validate();
    const auto x = frequency_grid(ctx.cfg, {{0.0, 0.5 * p.gamma * (1.0 + p.beta)}}, waveguide::waveguide_grid(p),
                                  ctx.meta);
    const auto s = waveguide::waveguide_spectrum(p, x);
    ctx.emit("spectrum", {{"omega - omega0 [gamma]", x}, {"density [1/gamma]", s.values}});
}

void measure_sweep(Context& ctx)
{
    const auto& c = ctx.cfg;
    const auto& g = c.grids.at("sweep");
    const std::string bath = c.option_or("bath", "");
    const std::vector<double> xs = g.values();
    std::vector<double> ns(xs.size());
    std::string unit = "[g]";

    if (bath == "waveguide") {
        waveguide::WaveguideParams p;
        p.omega0 = c.param("omega0");
        p.gamma = c.param_or("gamma", 1.0);
        p.beta = c.param("beta");
        p.validate();
        std::vector<double> etas;
        for (double x : xs) {
            etas.push_back(g.parameter == "n" ? waveguide::resonant_eta(p, static_cast<int>(std::lround(x))) : x);
        }
        const auto sweep = waveguide::waveguide_measure_sweep(p, etas);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ns[i] = sweep.measure[i].value;
        }
        ctx.meta.push_back("gap = fwhm of eta = 0 spectrum = " + fmt(sweep.markov_width));
        ctx.meta.push_back("eta_max = " + fmt(sweep.eta_max));
        ctx.meta.push_back("saturation = " + fmt(sweep.saturation));
        ctx.emit("measure", {{"eta [1]", etas}, {"N_S [1/gamma]", ns}});
        return;
    }

    parallel_for(xs.size(), [&](std::size_t i) {
        const double x = xs[i];
        if (bath == "thermal") {
            ScenarioConfig local = c;
            local.params[g.parameter] = x;
            ns[i] = measures::thermal_spectral_measure(thermal_params(local), ctx.opts.gap).value;
        } else {
            ScenarioConfig local = c;
            if (g.parameter == "r") {
                local.params["r"] = x;
            } else if (g.parameter == "delta_tilde") {
                const double dc = c.param("delta_c");
                const double eff = c.param("delta_q") - x;
                if (std::abs(eff) > std::abs(dc)) {
                    throw std::invalid_argument("delta_tilde = " + fmt(x) + " needs |delta_q - delta_tilde| <= |delta_c|");
                }
                local.params["r"] = std::sqrt((dc - eff) * (dc + eff));
            } else {
                local.params["r"] = 0.0;
                local.params["delta_c"] = c.param("delta_q") - x;
            }
            ns[i] = measures::squeezed_spectral_measure(squeezed_params(local), ctx.opts.gap).value;
        }
    });
    ctx.meta.push_back(std::string("gap = ") + (ctx.opts.gap == measures::GapDefinition::eigen ? "eigen" : "fwhm"));
    ctx.emit("measure", {{g.parameter + " " + unit, xs}, {"N_S [1/g]", ns}});
}

void blp_compare(Context& ctx)
{
    const auto& c = ctx.cfg;
    const std::vector<double> deltas = c.grids.at("sweep").values();
    const std::vector<double> ts = c.grids.at("time").values();
    std::vector<double> blp(deltas.size());
    std::vector<double> ns(deltas.size());
    const Vec4 g0 = liouville::vectorize(qubit::projector_g());
    const Vec4 e0 = liouville::vectorize(qubit::projector_e());
    parallel_for(deltas.size(), [&](std::size_t i) {
        ScenarioConfig local = c;
        local.params["delta"] = deltas[i];
        const auto p = thermal_params(local);
        const auto a = redfield::br_evolve(p, g0, ts);
        const auto b = redfield::br_evolve(p, e0, ts);
        blp[i] = measures::blp_measure(a, b).value;
        ns[i] = measures::thermal_spectral_measure(p, ctx.opts.gap).value;
    });
    ctx.meta.push_back("blp.states = |g>, |e>");
    ctx.meta.push_back("ode.rtol = 1e-10");
    ctx.meta.push_back("ode.atol = 1e-12");
    ctx.emit("measures", {{"delta [g]", deltas}, {"N_BLP [1]", blp}, {"N_S [1/g]", ns}});
}

void positivity(Context& ctx)
{
    const auto p = squeezed_params(ctx.cfg);
    const std::vector<double> ts = ctx.cfg.grids.at("time").values();
    const Vec4 rho0 = liouville::vectorize(qubit::sigma_y_eigenstate(-1));
    redfield::EvolveOptions eo;
    eo.include_sum_frequency = ctx.opts.include_sum_frequency;
    const auto br = redfield::br_evolve(p, rho0, ts, eo);
    fdme::InverseTransformReport rep;
    const auto fd = fdme::inverse_transform(fdme::FrequencyPropagator(baths::squeezed_kernel(p)), rho0, ts, {}, &rep);
    std::vector<double> pb(ts.size());
    std::vector<double> pf(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        pb[i] = fdme::purity(br.states[i]);
        pf[i] = fdme::purity(fd.states[i]);
    }
    ctx.meta.push_back("initial_state = sigma_y eigenstate -1");
    ctx.meta.push_back("ode.rtol = 1e-10");
    ctx.meta.push_back("ode.atol = 1e-12");
    ctx.meta.push_back("inverse_transform.nodes = " + std::to_string(rep.nodes));
    ctx.meta.push_back("inverse_transform.truncation_estimate = " + fmt(rep.truncation_estimate));
    ctx.emit("purity", {{"t [1/g]", ts}, {"purity_BR [1]", pb}, {"purity_FDQME [1]", pf}});
}

void oracle_compare(Context& ctx)
{
    const auto p = thermal_params(ctx.cfg);
    const auto m = baths::thermal_markov_rates(p);
    const auto x = frequency_grid(ctx.cfg, {{m.delta_eff, m.gamma_eff}, {-p.detuning(), p.kappa}},
                                  measures::spectrum_grid(m.delta_eff, m.gamma_eff, {-p.detuning()}, p.kappa,
                                                          std::abs(p.detuning()) + 10.0 * p.kappa),
                                  ctx.meta);
    const fdme::FrequencyPropagator fp(baths::thermal_kernel(p));
    const Vec4 rho0 = liouville::vectorize(qubit::projector_e());
    ctx.meta.push_back("steady_state.initial_state = |e>");
    const auto s_fd = fdme::emission_spectrum(fp, qubit::sigma_minus(), fdme::steady_state(fp, rho0), x);
    const auto n_fock = static_cast<Eigen::Index>(ctx.cfg.param("n_fock"));
    const auto full = oracle::build_full_model(p, n_fock);
    const auto s_or = oracle::full_steady_spectrum(full, oracle::full_steady_state(full), x);
    ctx.meta.push_back("oracle.truncation_tolerance = 1e-6");
    ctx.emit("fdqme", {{"delta [g]", x}, spectrum_column(s_fd)});
    ctx.emit("oracle", {{"delta [g]", x}, spectrum_column(s_or)});
}

} // namespace

void write_csv(const fs::path& path, const std::vector<std::string>& metadata, const std::vector<Column>& columns)
{
    if (columns.empty()) {
        throw std::invalid_argument("write_csv: no columns");
    }
    for (const auto& col : columns) {
        if (col.values.size() != columns.front().values.size()) {
            throw std::invalid_argument("write_csv: column length mismatch");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    for (const auto& line : metadata) {
        out << "# " << line << '\n';
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
        out << (j ? "," : "") << '"' << columns[j].name << '"';
    }
    out << '\n';
    for (std::size_t i = 0; i < columns.front().values.size(); ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            out << (j ? "," : "") << fmt(columns[j].values[i]);
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

std::vector<fs::path> run_scenario(const ScenarioConfig& cfg, const RunOptions& opts)
{
    Context ctx{cfg, opts, cfg.output_prefix.empty() ? cfg.scenario : cfg.output_prefix, {}, {}};
    ctx.meta.push_back("scenario = " + cfg.scenario);
    ctx.meta.push_back("spectrum.clip_tolerance = 1e-12");
    ctx.meta.push_back("steady_state.fvt_omegas = 1e-3, 1e-4, 1e-5 x relaxation scale");
    ctx.meta.push_back(std::string("include_sum_frequency = ") + (opts.include_sum_frequency ? "true" : "false"));
    try {
        fs::create_directories(opts.out_dir);
        if (cfg.scenario == "thermal-spectrum") {
            thermal_spectrum(ctx);
        } else if (cfg.scenario == "squeezed-spectrum") {
            squeezed_spectrum(ctx);
        } else if (cfg.scenario == "waveguide-spectrum") {
            waveguide_spectrum(ctx);
        } else if (cfg.scenario == "measure-sweep") {
            measure_sweep(ctx);
        } else if (cfg.scenario == "blp-compare") {
            blp_compare(ctx);
        } else if (cfg.scenario == "positivity") {
            positivity(ctx);
        } else if (cfg.scenario == "oracle-compare") {
            oracle_compare(ctx);
        } else {
            throw std::invalid_argument("unknown scenario");
        }
    } catch (const std::exception& e) {
        throw std::runtime_error(cfg.scenario + ": " + e.what());
    }

    const fs::path meta_path = opts.out_dir / (ctx.prefix + ".meta");
    std::ofstream meta(meta_path, std::ios::binary);
    for (const auto& line : ctx.meta) {
        meta << line << '\n';
    }
    meta << "\n# config\n" << echo_config(cfg);
    if (!meta) {
        throw std::runtime_error(cfg.scenario + ": failed writing " + meta_path.string());
    }
    ctx.written.push_back(meta_path);
    return ctx.written;
}

} // namespace fdqme::cli
