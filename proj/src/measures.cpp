// measures.cpp - spectral and trace-distance non-Markovianity measures

#include "fdqme/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fdqme/fdme.hpp"
#include "fdqme/liouville.hpp"

namespace fdqme::measures {

double kl_divergence(const Spectrum& s, const Spectrum& s_ref, double tail_cut)
{
    if (s.grid.size() != s_ref.grid.size() || s.values.size() != s.grid.size()
        || s_ref.values.size() != s_ref.grid.size()) {
        throw std::invalid_argument("kl_divergence: grid mismatch");
    }
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        if (s.grid[i] != s_ref.grid[i]) {
            throw std::invalid_argument("kl_divergence: grid mismatch");
        }
    }
    const double peak = *std::max_element(s.values.begin(), s.values.end());
    const double peak_ref = *std::max_element(s_ref.values.begin(), s_ref.values.end());
    std::vector<double> f(s.grid.size(), 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double p = s.values[i];
        const double q = s_ref.values[i];
        if (p <= 0.0 || (p < tail_cut * peak && q < tail_cut * peak_ref)) {
            continue;
        }
        if (q <= 0.0) {
            throw std::invalid_argument("kl_divergence: reference vanishes where the spectrum does not");
        }
        f[i] = p * std::log2(p / q);
    }
    return std::max(0.0, grid::trapezoid(s.grid, f));
}

double generator_gap(const Mat4& generator)
{
    const Eigen::ComplexEigenSolver<Mat4> es(generator);
    const double tol = 1e-12 * std::max(1.0, generator.cwiseAbs().maxCoeff());
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        const double re = std::abs(es.eigenvalues()(i).real());
        if (re > tol) {
            best = std::min(best, re);
        }
    }
    if (!std::isfinite(best)) {
        throw std::invalid_argument("generator_gap: no eigenvalue with nonzero real part");
    }
    return best;
}

double spectral_gap(const baths::ThermalBathParams& p, GapDefinition def)
{
    if (def == GapDefinition::fwhm) {
        return 2.0 * baths::thermal_markov_rates(p).gamma_eff;
    }
    return generator_gap(fdme::FrequencyPropagator(baths::thermal_kernel(p)).markov_generator());
}

double spectral_gap(const baths::SqueezedBathParams& p, GapDefinition def)
{
    if (def == GapDefinition::fwhm) {
        return 2.0 * baths::squeezed_markov_rates(p).gamma_eff;
    }
    return generator_gap(fdme::FrequencyPropagator(baths::squeezed_kernel(p)).markov_generator());
}

MeasureResult spectral_measure(const Spectrum& s, const Spectrum& s_m, double gap)
{
    if (!(gap > 0.0)) {
        throw std::invalid_argument("spectral_measure: gap must be > 0");
    }
    MeasureResult r;
    r.method = Method::spectral;
    r.kl_bits = kl_divergence(s, s_m);
    r.gap = gap;
    r.value = r.kl_bits / gap;
    r.samples = s.grid.size();
    return r;
}

double trace_distance(const Vec4& rho1, const Vec4& rho2)
{
    const Mat d = liouville::devectorize(rho1 - rho2);
    if (!liouville::is_hermitian(d, 1e-8)) {
        throw std::invalid_argument("trace_distance: difference is not Hermitian");
    }
    const Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (d + d.adjoint()));
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

MeasureResult blp_measure(const Trajectory& a, const Trajectory& b)
{
    if (a.times != b.times || a.states.size() != a.times.size() || b.states.size() != b.times.size()) {
        throw std::invalid_argument("blp_measure: trajectories must share one time grid");
    }
    MeasureResult r;
    r.method = Method::blp;
    r.samples = a.times.size();
    double prev = 0.0;
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        const double d = trace_distance(a.states[i], b.states[i]);
        if (i > 0 && d > prev) {
            r.value += d - prev;
        }
        prev = d;
    }
    return r;
}

std::vector<double> spectrum_grid(double delta_eff, double gamma_eff, const std::vector<double>& side_centres,
                                  double kappa, double half_span)
{
    std::vector<grid::Peak> peaks{{delta_eff, gamma_eff}};
    double lo = std::min(-half_span, delta_eff - 50.0 * gamma_eff);
    double hi = std::max(half_span, delta_eff + 50.0 * gamma_eff);
    for (double c : side_centres) {
        peaks.push_back({c, kappa});
        lo = std::min(lo, c - 10.0 * kappa);
        hi = std::max(hi, c + 10.0 * kappa);
    }
    return grid::adaptive(lo, hi, peaks);
}

namespace {

Spectrum lorentzian(const std::vector<double>& x, const baths::MarkovRates& m)
{
    return normalized(sample_spectrum(x, [&](double d) { return baths::markovian_spectrum(m, d); }));
}

} // namespace

MeasureResult thermal_spectral_measure(const baths::ThermalBathParams& p, GapDefinition def)
{
    const auto m = baths::thermal_markov_rates(p);
    const double det = p.detuning();
    const auto x = spectrum_grid(m.delta_eff, m.gamma_eff, {-det}, p.kappa, std::abs(det) + 50.0 * p.kappa);
    const Spectrum s = normalized(sample_spectrum(x, [&](double d) { return baths::thermal_closed_spectrum(p, d); }));
    return spectral_measure(s, lorentzian(x, m), spectral_gap(p, def));
}

MeasureResult squeezed_spectral_measure(const baths::SqueezedBathParams& p, GapDefinition def)
{
    const auto b = baths::bogoliubov_params(p);
    const auto m = baths::squeezed_markov_rates(p);
    const double span = std::abs(b.delta_diff) + std::abs(b.sigma_sum) + 40.0 * p.kappa;
    const auto x = spectrum_grid(m.delta_eff, m.gamma_eff, {-b.delta_diff, -b.sigma_sum}, p.kappa, span);
    const Spectrum s =
        normalized(sample_spectrum(x, [&](double d) { return baths::squeezed_closed_spectrum(p, d); }));
    return spectral_measure(s, lorentzian(x, m), spectral_gap(p, def));
}

} // namespace fdqme::measures
