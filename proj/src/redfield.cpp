// redfield.cpp - Born-Redfield and Born-Markov solvers

#include "fdqme/redfield.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/FFT>

#include "fdqme/liouville.hpp"

namespace fdqme::redfield {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (1 - e^{-(kappa + i x) t}) / (kappa + i x), exact at small arguments.
cplx decay_integral(double kappa, double x, double t)
{
    const cplx z{kappa, x};
    if (std::isinf(t)) {
        return 1.0 / z;
    }
    const cplx e = -z * t;
    const double s = std::sin(0.5 * e.imag());
    const cplx em1{std::expm1(e.real()) * std::cos(e.imag()) - 2.0 * s * s, std::exp(e.real()) * std::sin(e.imag())};
    if (std::abs(e) < 1e-8) {
        return t * (1.0 + 0.5 * e);
    }
    return -em1 / z;
}

void require_time(double t)
{
    if (!(t >= 0.0)) {
        throw std::invalid_argument("time must be >= 0");
    }
}

using State = std::array<double, 8>;

Vec4 unpack(const State& x)
{
    Vec4 v;
    for (int k = 0; k < 4; ++k) {
        v(k) = cplx(x[2 * k], x[2 * k + 1]);
    }
    return v;
}

State pack(const Vec4& v)
{
    State x;
    for (int k = 0; k < 4; ++k) {
        x[2 * k] = v(k).real();
        x[2 * k + 1] = v(k).imag();
    }
    return x;
}

template <class GeneratorAt>
Trajectory integrate(const baths::KernelModel& model, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts, GeneratorAt&& l2_at)
{
    if (t_grid.empty() || !grid::is_increasing(t_grid) || t_grid.front() < 0.0) {
        throw std::invalid_argument("time grid must be non-empty, increasing and start at t >= 0");
    }
    const auto nu = model.natural_frequencies();

    // Interaction picture of L0: entry (j, k) picks up e^{i (nu_k - nu_j) t}.
    auto rhs = [&](const State& x, State& dxdt, double t) {
        const Mat4 l2 = l2_at(t);
        const Vec4 r = unpack(x);
        Vec4 d = Vec4::Zero();
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                if (l2(j, k) != 0.0) {
                    d(j) += l2(j, k) * std::polar(1.0, (nu(k) - nu(j)) * t) * r(k);
                }
            }
        }
        dxdt = pack(d);
    };

    std::vector<double> times;
    const bool prepend = t_grid.front() > 0.0;
    if (prepend) {
        times.push_back(0.0);
    }
    times.insert(times.end(), t_grid.begin(), t_grid.end());

    Trajectory out;
    out.times = t_grid;
    out.states.reserve(t_grid.size());
    std::size_t seen = 0;
    auto observer = [&](const State& x, double t) {
        if (prepend && seen++ == 0) {
            return;
        }
        Vec4 r = unpack(x);
        for (int k = 0; k < 4; ++k) {
            r(k) *= std::polar(1.0, nu(k) * t);
        }
        out.states.push_back(r);
    };

    namespace odeint = boost::numeric::odeint;
    State x = pack(rho0);
    auto stepper = odeint::make_dense_output(opts.atol, opts.rtol, odeint::runge_kutta_dopri5<State>());
    const double dt = std::min(opts.initial_step, times.size() > 1 ? times[1] - times[0] : opts.initial_step);
    try {
        odeint::integrate_times(stepper, rhs, x, times.begin(), times.end(), dt, observer,
                                odeint::max_step_checker(10'000'000));
    } catch (const odeint::step_adjustment_error& e) {
        throw std::runtime_error(std::string("step-size underflow: ") + e.what());
    } catch (const odeint::no_progress_error& e) {
        throw std::runtime_error(std::string("step-size underflow: ") + e.what());
    }
    return out;
}

} // namespace

ThermalRates br_rates_thermal(const baths::ThermalBathParams& p, double t)
{
    p.validate();
    require_time(t);
    const cplx i_t = p.g * p.g * decay_integral(p.kappa, p.detuning(), t);
    return {-i_t.imag(), i_t.real()};
}

SqueezedRates br_rates_squeezed(const baths::SqueezedBathParams& p, double t, bool include_sum_frequency)
{
    require_time(t);
    const auto b = baths::bogoliubov_params(p);
    const double g1 = b.g1;
    const double g2 = b.g2;
    const double n = b.nbar;
    const cplx m = b.mbar;
    const cplx mc = std::conj(m);
    const cplx id = decay_integral(p.kappa, b.delta_diff, t);
    const cplx is = include_sum_frequency ? decay_integral(p.kappa, b.sigma_sum, t) : cplx(0.0);

    const cplx a11 = g1 * g1 * n + g1 * g2 * mc;
    const cplx b11 = g2 * g2 * (n + 1.0) + g1 * g2 * m;
    const cplx a44 = g1 * g1 * (n + 1.0) + g1 * g2 * mc;
    const cplx b44 = g2 * g2 * n + g1 * g2 * m;
    const cplx A32 = 2.0 * g1 * g1 * m + g1 * g2 * (2.0 * n + 1.0);
    const cplx B32 = 2.0 * g2 * g2 * mc + g1 * g2 * (2.0 * n + 1.0);

    const cplx big_mp = a44 * id + b44 * is;
    const cplx big_pm = a11 * id + b11 * is;
    SqueezedRates r;
    r.gamma_mp = big_mp.real();
    r.gamma_pm = big_pm.real();
    r.delta_mp = -big_mp.imag();
    r.delta_pm = -big_pm.imag();
    r.gamma_pp = 0.5 * (B32 * id + A32 * is);
    r.gamma_mm = std::conj(r.gamma_pp);
    return r;
}

Mat4 br_generator(const baths::KernelModel& model, double t, bool include_sum_frequency)
{
    require_time(t);
    const auto nu = model.natural_frequencies();
    const double w = model.omega_ref();
    Mat4 l2 = Mat4::Zero();
    for (const auto& term : model.terms()) {
        if (term.sum_frequency && !include_sum_frequency) {
            continue;
        }
        const double kappa = -term.rate.real();
        for (int k = 0; k < 4; ++k) {
            if (term.coeff.col(k).isZero(0.0)) {
                continue;
            }
            // mu = rate - i nu_k = -(kappa + i x) with x = offset - (omega_ref - nu_k)
            const double x = term.offset - (w - nu(k));
            l2.col(k) += term.coeff.col(k) * decay_integral(kappa, x, t);
        }
    }
    return l2;
}

Mat4 thermal_dissipator_generator(const baths::ThermalBathParams& p, double t)
{
    using namespace fdqme::liouville;
    const auto r = br_rates_thermal(p, t);
    const double n = p.nbar;
    const Mat sp = qubit::sigma_plus();
    const Mat sm = qubit::sigma_minus();
    const Mat h = (n + 1.0) * sp * sm - n * sm * sp;
    return r.delta * commutator_superop(h) + r.gamma * ((n + 1.0) * lindblad_dissipator(sm) + n * lindblad_dissipator(sp));
}

Mat4 squeezed_dissipator_generator(const baths::SqueezedBathParams& p, double t, bool include_sum_frequency)
{
    using namespace fdqme::liouville;
    const auto r = br_rates_squeezed(p, t, include_sum_frequency);
    const Mat sp = qubit::sigma_plus();
    const Mat sm = qubit::sigma_minus();
    const Mat h = 0.5 * (r.delta_pm + r.delta_mp) * (sp * sm - sm * sp);
    return commutator_superop(h) + r.gamma_mp * lindblad_dissipator(sm) + r.gamma_pm * lindblad_dissipator(sp)
        + r.gamma_mm * squeeze_dissipator(sm) + r.gamma_pp * squeeze_dissipator(sp);
}

Trajectory br_evolve(const baths::KernelModel& model, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts)
{
    return integrate(model, rho0, t_grid, opts,
                     [&](double t) { return br_generator(model, t, opts.include_sum_frequency); });
}

Trajectory br_evolve(const baths::ThermalBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts)
{
    return br_evolve(baths::thermal_kernel(p), rho0, t_grid, opts);
}

Trajectory br_evolve(const baths::SqueezedBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts)
{
    return br_evolve(baths::squeezed_kernel(p), rho0, t_grid, opts);
}

Trajectory bm_evolve(const baths::KernelModel& model, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts)
{
    const Mat4 l2 = br_generator(model, kInf, opts.include_sum_frequency);
    return integrate(model, rho0, t_grid, opts, [&](double) { return l2; });
}

Trajectory bm_evolve(const baths::ThermalBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts)
{
    return bm_evolve(baths::thermal_kernel(p), rho0, t_grid, opts);
}

Trajectory bm_evolve(const baths::SqueezedBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts)
{
    return bm_evolve(baths::squeezed_kernel(p), rho0, t_grid, opts);
}

namespace {

// Correlator with the e^{i omega_q tau} factor removed.
cplx slow_correlator(const baths::ThermalBathParams& p, double tau)
{
    const cplx z{p.kappa, p.detuning()};
    const double c = (2.0 * p.nbar + 1.0) * p.g * p.g;
    const cplx integral = decay_integral(p.kappa, p.detuning(), tau); // (1 - e^{-z tau}) / z
    return std::exp(-c * tau / z + c * integral / z);
}

} // namespace

std::vector<cplx> br_correlator(const baths::ThermalBathParams& p, const std::vector<double>& tau_grid)
{
    p.validate();
    std::vector<cplx> out;
    out.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        require_time(tau);
        out.push_back(std::polar(1.0, p.omega_q * tau) * slow_correlator(p, tau));
    }
    return out;
}

double br_spectrum_value(const baths::ThermalBathParams& p, double delta)
{
    const auto m = br_rates_thermal(p, kInf);
    const double scale = 2.0 * p.nbar + 1.0;
    const double de = scale * m.delta;
    const double ge = scale * m.gamma;
    const double det = p.detuning();
    const double k = p.kappa;
    const double d2 = det * det + k * k;
    const double c = delta - de;
    const double x = c + det;
    const double w = ge + k;
    const double side = (de * det - ge * k) / d2 * w / (x * x + w * w);
    const double fano = 2.0 * std::sqrt(std::abs(de * det * ge * k)) / d2 * x / (x * x + w * w);
    return (ge / (c * c + ge * ge) + side + fano) / kPi;
}

Spectrum br_spectrum(const baths::ThermalBathParams& p, const std::vector<double>& delta_grid, bool normalize)
{
    if (delta_grid.empty() || !grid::is_increasing(delta_grid)) {
        throw std::invalid_argument("br_spectrum: grid must be non-empty and increasing");
    }
    p.validate();
    Spectrum s = sample_spectrum(delta_grid, [&](double d) { return br_spectrum_value(p, d); });
    return normalize ? normalized(std::move(s)) : s;
}

Spectrum br_spectrum_fft(const baths::ThermalBathParams& p, double dtau, std::size_t n, bool normalize)
{
    p.validate();
    if (!(dtau > 0.0) || n < 4 || n % 2 != 0) {
        throw std::invalid_argument("br_spectrum_fft: need dtau > 0 and even n >= 4");
    }
    std::vector<cplx> g(n);
    for (std::size_t j = 0; j < n; ++j) {
        g[j] = slow_correlator(p, dtau * static_cast<double>(j));
    }
    g[0] *= 0.5; // trapezoid end weight
    Eigen::FFT<double> fft;
    std::vector<cplx> f;
    fft.fwd(f, g);

    Spectrum s;
    s.grid.resize(n);
    s.values.resize(n);
    const double dw = 2.0 * kPi / (static_cast<double>(n) * dtau);
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        // i = 0 maps to the most negative frequency -n/2.
        const std::size_t m = (i + half) % n;
        const auto signed_m = static_cast<double>(i) - static_cast<double>(half);
        s.grid[i] = dw * signed_m;
        s.values[i] = std::max(0.0, dtau * f[m].real() / kPi);
    }
    return normalize ? normalized(std::move(s)) : s;
}

PurityReport purity_violation(const Trajectory& traj, double threshold)
{
    if (traj.times.size() != traj.states.size()) {
        throw std::invalid_argument("purity_violation: malformed trajectory");
    }
    PurityReport rep;
    rep.max_purity = -kInf;
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const Mat r = liouville::devectorize(traj.states[i]);
        const double pur = (r * r).trace().real();
        if (pur > rep.max_purity) {
            rep.max_purity = pur;
            rep.time_of_max = traj.times[i];
        }
        if (!rep.first_crossing && pur > 1.0 + threshold) {
            rep.first_crossing = traj.times[i];
        }
    }
    rep.max_excess = std::max(0.0, rep.max_purity - 1.0);
    return rep;
}

} // namespace fdqme::redfield
