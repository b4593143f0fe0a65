// waveguide.cpp - delayed-feedback emission spectrum and its spectral measure

#include "fdqme/waveguide.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fdqme/parallel.hpp"

namespace fdqme::waveguide {

void WaveguideParams::validate() const
{
    if (!std::isfinite(omega0) || !std::isfinite(eta) || !std::isfinite(beta) || !std::isfinite(gamma)) {
        throw std::invalid_argument("waveguide parameters must be finite");
    }
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("beta must lie in [0, 1]");
    if (eta < 0.0) throw std::invalid_argument("eta must be >= 0");
}

double resonant_eta(const WaveguideParams& p, int n)
{
    if (n < 0) {
        throw std::invalid_argument("resonant_eta: n must be >= 0");
    }
    return 2.0 * kPi * static_cast<double>(n) * p.gamma / p.omega0;
}

cplx field_amplitude(const WaveguideParams& p, double x)
{
    const double phase = p.eta * (p.omega0 + x) / p.gamma;
    const double num = std::sqrt(p.gamma * p.beta / (2.0 * kPi)) * std::cos(0.5 * phase);
    const cplx den{x - 0.5 * p.gamma * p.beta * std::sin(phase), 0.5 * p.gamma * (1.0 + p.beta * std::cos(phase))};
    return num / den;
}

std::vector<double> waveguide_grid(const WaveguideParams& p, double half_span)
{
    p.validate();
    double h = 0.02 * p.gamma;
    if (p.eta > 0.0) {
        h = std::min(h, 2.0 * kPi * p.gamma / p.eta / 80.0);
    }
    const double span = half_span * p.gamma;
    const auto n = static_cast<std::size_t>(std::ceil(2.0 * span / h)) + 1;
    return grid::uniform(-span, span, n);
}

Spectrum waveguide_spectrum(const WaveguideParams& p, const std::vector<double>& x)
{
    p.validate();
    if (x.size() < 2 || !grid::is_increasing(x)) {
        throw std::invalid_argument("waveguide_spectrum: grid must be increasing");
    }
    return normalized(sample_spectrum(x, [&](double v) { return std::norm(field_amplitude(p, v)); }));
}

double fwhm(const Spectrum& s)
{
    const std::size_t peak = argmax(s);
    const double half = 0.5 * s.values[peak];
    auto crossing = [&](std::size_t i, std::size_t j) {
        const double t = (half - s.values[i]) / (s.values[j] - s.values[i]);
        return s.grid[i] + t * (s.grid[j] - s.grid[i]);
    };
    std::size_t r = peak;
    while (r + 1 < s.values.size() && s.values[r + 1] >= half) {
        ++r;
    }
    std::size_t l = peak;
    while (l > 0 && s.values[l - 1] >= half) {
        --l;
    }
    if (r + 1 >= s.values.size() || l == 0) {
        throw std::runtime_error("fwhm: half maximum not reached inside the grid");
    }
    return crossing(r + 1, r) - crossing(l - 1, l);
}

SweepResult waveguide_measure_sweep(const WaveguideParams& p, const std::vector<double>& eta_grid)
{
    if (eta_grid.size() < 4) {
        throw std::invalid_argument("waveguide_measure_sweep: need at least 4 eta values");
    }
    WaveguideParams markov = p;
    markov.eta = 0.0;
    SweepResult out;
    out.eta = eta_grid;
    out.markov_width = fwhm(waveguide_spectrum(markov, waveguide_grid(markov)));
    out.measure.resize(eta_grid.size());
    parallel_for(eta_grid.size(), [&](std::size_t i) {
        WaveguideParams q = p;
        q.eta = eta_grid[i];
        const auto x = waveguide_grid(q);
        out.measure[i] = measures::spectral_measure(waveguide_spectrum(q, x), waveguide_spectrum(markov, x),
                                                    out.markov_width);
    });
    std::vector<double> v(out.measure.size());
    std::transform(out.measure.begin(), out.measure.end(), v.begin(), [](const auto& m) { return m.value; });
    out.argmax = static_cast<std::size_t>(std::distance(v.begin(), std::max_element(v.begin(), v.end())));
    out.eta_max = eta_grid[out.argmax];
    const std::size_t q0 = v.size() - v.size() / 4;
    const auto [lo, hi] = std::minmax_element(v.begin() + static_cast<std::ptrdiff_t>(q0), v.end());
    out.saturation = std::accumulate(v.begin() + static_cast<std::ptrdiff_t>(q0), v.end(), 0.0)
        / static_cast<double>(v.size() - q0);
    out.saturation_spread = out.saturation > 0.0 ? (*hi - *lo) / out.saturation : 0.0;
    return out;
}

} // namespace fdqme::waveguide
