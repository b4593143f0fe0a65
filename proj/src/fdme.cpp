// fdme.cpp - frequency-domain master equation

#include "fdqme/fdme.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fdqme/liouville.hpp"
#include "fdqme/parallel.hpp"

namespace fdqme::fdme {

namespace {

Mat4 frozen_columns(const baths::KernelModel& model)
{
    const auto nu = model.natural_frequencies();
    Mat4 l2;
    for (int k = 0; k < 4; ++k) {
        l2.col(k) = model.at_omega(nu(k)).col(k);
    }
    return l2;
}

double smallest_nonzero_rate(const Mat4& gen)
{
    const Eigen::ComplexEigenSolver<Mat4> es(gen);
    const double norm = gen.cwiseAbs().maxCoeff();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        const double re = std::abs(es.eigenvalues()(i).real());
        if (re > 1e-12 * std::max(1.0, norm)) {
            best = std::min(best, re);
        }
    }
    return std::isfinite(best) ? best : 0.0;
}

Mat4 solve_identity(const Mat4& a, double omega)
{
    const Eigen::FullPivLU<Mat4> lu(a);
    if (!lu.isInvertible() || lu.rcond() < 1e-15) {
        std::ostringstream msg;
        msg << "propagator is singular at omega = " << omega;
        throw std::runtime_error(msg.str());
    }
    return lu.inverse();
}

// Polynomial through (x_i, y_i) evaluated at 0 (Neville).
Vec4 neville_at_zero(const std::array<double, 3>& x, std::array<Vec4, 3> y)
{
    for (std::size_t m = 1; m < x.size(); ++m) {
        for (std::size_t i = 0; i + m < x.size(); ++i) {
            y[i] = (x[i + m] * y[i] - x[i] * y[i + 1]) / (x[i + m] - x[i]);
        }
    }
    return y[0];
}

} // namespace

FrequencyPropagator::FrequencyPropagator(baths::KernelModel model, KernelMode mode)
    : model_(std::move(model)), mode_(mode), frozen_(frozen_columns(model_))
{
    relaxation_scale_ = smallest_nonzero_rate(markov_generator());
}

Mat4 FrequencyPropagator::kernel_detuning(double delta) const
{
    return mode_ == KernelMode::markov ? frozen_ : model_.freq(delta);
}

Mat4 FrequencyPropagator::system_matrix(double delta) const
{
    // i(omega - nu_k) on the diagonal, formed from delta to keep the resonant column exact.
    const auto nu = model_.natural_frequencies();
    Mat4 a = -kernel_detuning(delta);
    for (int k = 0; k < 4; ++k) {
        a(k, k) += I * ((model_.omega_ref() - nu(k)) + delta);
    }
    return a;
}

Mat4 FrequencyPropagator::propagate(double omega) const
{
    Mat4 a = mode_ == KernelMode::markov ? Mat4(-frozen_) : Mat4(-model_.at_omega(omega));
    const auto nu = model_.natural_frequencies();
    for (int k = 0; k < 4; ++k) {
        a(k, k) += I * (omega - nu(k));
    }
    return solve_identity(a, omega);
}

Mat4 FrequencyPropagator::propagate_detuning(double delta) const
{
    return solve_identity(system_matrix(delta), model_.omega_ref() + delta);
}

Vec4 FrequencyPropagator::laplace_solution(cplx s, const Vec4& rho0) const
{
    const Mat4 k = mode_ == KernelMode::markov ? frozen_ : model_.laplace(s);
    const Mat4 a = s * Mat4::Identity() - l0() - k;
    return a.partialPivLu().solve(rho0);
}

Vec4 steady_state(const FrequencyPropagator& fp, const Vec4& rho0)
{
    // A second zero mode of the zero-frequency generator means no unique limit.
    const Mat4 gen0 = fp.l0() + (fp.mode() == KernelMode::markov ? Mat4(fp.markov_generator() - fp.l0())
                                                                  : fp.model().at_omega(0.0));
    const Eigen::JacobiSVD<Mat4> svd(gen0);
    const auto sv = svd.singularValues();
    if (sv(2) <= 1e-10 * sv(0)) {
        throw std::runtime_error("steady_state: degenerate steady-state manifold");
    }

    const double scale = fp.relaxation_scale();
    const std::array<double, 3> omegas{1e-3 * scale, 1e-4 * scale, 1e-5 * scale};
    std::array<Vec4, 3> values;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        values[i] = I * omegas[i] * (fp.propagate(omegas[i]) * rho0);
    }
    const Vec4 rho = neville_at_zero(omegas, values);
    // Linear extrapolation from the two smallest frequencies as a convergence check.
    const Vec4 linear = (omegas[1] * values[2] - omegas[2] * values[1]) / (omegas[1] - omegas[2]);
    if ((rho - linear).cwiseAbs().maxCoeff() > 1e-6) {
        throw std::runtime_error("steady_state: extrapolation did not converge");
    }
    return rho;
}

Spectrum emission_spectrum(const FrequencyPropagator& fp, const Mat& o, const Vec4& rho_ss,
                           const std::vector<double>& delta_grid, const SpectrumOptions& opts)
{
    if (delta_grid.empty() || !grid::is_increasing(delta_grid)) {
        throw std::invalid_argument("emission_spectrum: grid must be non-empty and increasing");
    }
    if (o.rows() != 2 || o.cols() != 2) {
        throw std::invalid_argument("emission_spectrum: operator must be 2x2");
    }
    // The elastic part Tr[o rho_ss] rho_ss is removed, and the zero-frequency pole is moved to
    // -scale by adding scale |rho_ss>><<I|; both leave the traceless response unchanged.
    const Vec source = liouville::vectorize(o * liouville::devectorize(rho_ss));
    const Eigen::RowVector4cd tr = liouville::trace_functional(2);
    const Vec4 x0 = Vec4(source) - (tr * source).value() * rho_ss;
    const Eigen::RowVector4cd left = liouville::vectorize(o).adjoint();
    if (!(fp.relaxation_scale() > 0.0)) {
        throw std::invalid_argument("emission_spectrum: generator has no dissipation");
    }
    const Mat4 deflate = fp.relaxation_scale() * rho_ss * tr;

    Spectrum s;
    s.grid = delta_grid;
    s.values.resize(delta_grid.size());
    parallel_for(delta_grid.size(), [&](std::size_t i) {
        const Vec4 u = (fp.system_matrix(delta_grid[i]) + deflate).partialPivLu().solve(x0);
        s.values[i] = 2.0 * (left * u).value().real();
    });
    const double neg = clip_negative(s, opts.clip_tolerance);
    if (neg > opts.clip_tolerance) {
        std::ostringstream msg;
        msg << "emission_spectrum: relative negativity " << neg << " exceeds tolerance";
        throw std::runtime_error(msg.str());
    }
    return opts.normalize ? normalized(std::move(s)) : s;
}

Trajectory inverse_transform(const FrequencyPropagator& fp, const Vec4& rho0, const std::vector<double>& t_grid,
                             const InverseTransformOptions& opts, InverseTransformReport* report)
{
    if (t_grid.empty()) {
        throw std::invalid_argument("inverse_transform: empty time grid");
    }
    const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
    if (*std::min_element(t_grid.begin(), t_grid.end()) < 0.0) {
        throw std::invalid_argument("inverse_transform: times must be >= 0");
    }
    const auto& model = fp.model();
    const bool markov = fp.mode() == KernelMode::markov;
    const Mat4 l0 = fp.l0();

    // Taylor data at t = 0 for the tail terms.
    std::array<Vec4, 4> f;
    f[0] = rho0;
    if (markov) {
        const Mat4 gen = fp.markov_generator();
        for (int n = 1; n < 4; ++n) {
            f[n] = gen * f[n - 1];
        }
    } else {
        const Mat4 k0 = model.value_at_zero();
        const Mat4 k1 = model.derivative_at_zero();
        f[1] = l0 * f[0];
        f[2] = l0 * f[1] + k0 * f[0];
        f[3] = l0 * f[2] + k0 * f[1] + k1 * f[0];
    }

    double min_kappa = std::numeric_limits<double>::infinity();
    double scale = l0.cwiseAbs().maxCoeff();
    for (const auto& term : model.terms()) {
        min_kappa = std::min(min_kappa, -term.rate.real());
        scale += std::sqrt(term.coeff.cwiseAbs().maxCoeff());
    }
    double max_rate = 0.0;
    for (const auto& term : model.terms()) {
        max_rate = std::max(max_rate, std::abs(term.rate));
    }
    scale += max_rate;
    if (markov) {
        scale = std::max(scale, fp.markov_generator().cwiseAbs().maxCoeff());
    }
    const double t_ref = t_max > 0.0 ? t_max : 1.0;
    const double a = -(std::isfinite(min_kappa) ? min_kappa : 1.0 / t_ref);

    // c_n t^n e^{a t} / n! matches f^{(n)}(0) for n = 0..3.
    std::array<Vec4, 4> c;
    c[0] = f[0];
    c[1] = f[1] - a * c[0];
    c[2] = f[2] - a * a * c[0] - 2.0 * a * c[1];
    c[3] = f[3] - a * a * a * c[0] - 3.0 * a * a * c[1] - 3.0 * a * c[2];

    const double period = opts.period_factor * t_ref;
    const double sigma = opts.damping / (2.0 * period);
    const double step = kPi / period;
    std::size_t n_nodes = static_cast<std::size_t>(std::ceil(opts.bandwidth_factor * scale / step));
    if (2 * n_nodes + 1 > opts.max_nodes) {
        std::ostringstream msg;
        msg << "inverse_transform: accuracy budget exceeded (needs " << 2 * n_nodes + 1 << " nodes, limit "
            << opts.max_nodes << "); reduce t_max or the frequency scale";
        throw std::runtime_error(msg.str());
    }

    Trajectory out;
    out.times = t_grid;
    out.states.resize(t_grid.size());
    // The node count doubles until the truncation estimate (full sum minus half sum) meets the tolerance.
    while (true) {
        const auto nn = static_cast<std::ptrdiff_t>(n_nodes);
        const std::size_t count = 2 * n_nodes + 1;

        Eigen::Matrix<cplx, 4, Eigen::Dynamic> h(4, static_cast<Eigen::Index>(count));
        parallel_for(count, [&](std::size_t j) {
            const auto k = static_cast<std::ptrdiff_t>(j) - nn;
            const cplx s{sigma, step * static_cast<double>(k)};
            Vec4 v = fp.laplace_solution(s, rho0);
            cplx denom = 1.0;
            for (int n = 0; n < 4; ++n) {
                denom *= (s - a);
                v -= c[n] / denom;
            }
            h.col(static_cast<Eigen::Index>(j)) = v;
        });

        std::vector<double> truncation(t_grid.size(), 0.0);
        const std::ptrdiff_t half = nn / 2;
        parallel_for(t_grid.size(), [&](std::size_t i) {
            const double t = t_grid[i];
            const double theta = step * t;
            Vec4 full = Vec4::Zero();
            Vec4 inner = Vec4::Zero();
            cplx z = std::polar(1.0, -theta * static_cast<double>(nn));
            const cplx rot = std::polar(1.0, theta);
            for (std::ptrdiff_t k = -nn; k <= nn; ++k) {
                if ((k + nn) % 512 == 0) {
                    z = std::polar(1.0, theta * static_cast<double>(k));
                }
                const Vec4 term = z * h.col(k + nn);
                full += term;
                if (k >= -half && k <= half) {
                    inner += term;
                }
                z *= rot;
            }
            const double pref = std::exp(sigma * t) / (2.0 * period);
            Vec4 tail = Vec4::Zero();
            double tn = 1.0;
            double fact = 1.0;
            for (int n = 0; n < 4; ++n) {
                tail += c[n] * (tn / fact);
                tn *= t;
                fact *= static_cast<double>(n + 1);
            }
            tail *= std::exp(a * t);
            out.states[i] = pref * full + tail;
            truncation[i] = pref * (full - inner).cwiseAbs().maxCoeff();
        });

        const double worst = *std::max_element(truncation.begin(), truncation.end());
        if (report) {
            report->nodes = count;
            report->truncation_estimate = worst;
        }
        if (worst <= opts.tolerance) {
            return out;
        }
        if (2 * (2 * n_nodes) + 1 > opts.max_nodes) {
            std::ostringstream msg;
            msg << "inverse_transform: accuracy budget exceeded (truncation estimate " << worst << " with "
                << count << " nodes)";
            throw std::runtime_error(msg.str());
        }
        n_nodes *= 2;
    }
}

double purity(const Vec4& rho)
{
    const Mat r = liouville::devectorize(rho);
    return (r * r).trace().real();
}

} // namespace fdqme::fdme
