// waveguide.hpp - two emitters with delayed feedback through a waveguide

#pragma once

#include <vector>

#include "fdqme/grid.hpp"
#include "fdqme/measures.hpp"

namespace fdqme::waveguide {

// Frequencies in units of gamma. eta = gamma * tau_B.
struct WaveguideParams {
    double omega0{500.0};
    double gamma{1.0};
    double beta{0.95};
    double eta{0.0};

    void validate() const;
};

// eta_n = 2 pi n gamma / omega0, so that eta omega0 / gamma = 2 pi n.
double resonant_eta(const WaveguideParams& p, int n);

// Emission amplitude c_a at absolute frequency omega0 + x (the detuning x is passed so
// the comb phase eta (omega0 + x) / gamma is formed once).
cplx field_amplitude(const WaveguideParams& p, double x);

// Uniform detuning grid over +-half_span with spacing min(0.02 gamma, period / 80),
// period = 2 pi gamma / eta.
std::vector<double> waveguide_grid(const WaveguideParams& p, double half_span = 40.0);

// |c_a|^2 normalized to unit area on the grid.
Spectrum waveguide_spectrum(const WaveguideParams& p, const std::vector<double>& x);

// Full width at half maximum of the largest peak, linearly interpolated.
double fwhm(const Spectrum& s);

struct SweepResult {
    std::vector<double> eta;
    std::vector<measures::MeasureResult> measure;
    double eta_max{0.0};
    std::size_t argmax{0};
    double saturation{0.0};       // mean over the largest-eta quartile
    double saturation_spread{0.0};// (max - min) / mean over that quartile
    double markov_width{0.0};     // FWHM of the eta = 0 spectrum
};

// N_S(eta) against the eta = 0 spectrum with Omega_M = its FWHM.
SweepResult waveguide_measure_sweep(const WaveguideParams& p, const std::vector<double>& eta_grid);

} // namespace fdqme::waveguide
