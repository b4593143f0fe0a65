// redfield.hpp - Born-Redfield and Born-Markov time-local solvers

#pragma once

#include <optional>
#include <vector>

#include "fdqme/baths.hpp"
#include "fdqme/grid.hpp"
#include "fdqme/trajectory.hpp"

namespace fdqme::redfield {

// Per-channel thermal rates. The generator is
// -i delta [(N+1) s+ s- - N s- s+, .] + gamma ((N+1) D[s-] + N D[s+]).
struct ThermalRates {
    double delta{0.0};
    double gamma{0.0};
};

// t may be +infinity for the Markovian values.
ThermalRates br_rates_thermal(const baths::ThermalBathParams& p, double t);

// Squeezed rates with gamma_mm = conj(gamma_pp):
// g_mp D[s-] + g_pm D[s+] + g_mm S[s-] + g_pp S[s+] - i[(d_pm + d_mp)/2 (s+ s- - s- s+), .]
struct SqueezedRates {
    double gamma_mp{0.0};
    double gamma_pm{0.0};
    cplx gamma_mm{0.0};
    cplx gamma_pp{0.0};
    double delta_pm{0.0};
    double delta_mp{0.0};
};

SqueezedRates br_rates_squeezed(const baths::SqueezedBathParams& p, double t, bool include_sum_frequency = false);

// L2(t) = integral_0^t K(s) e^{-L0 s} ds from the kernel's exponential terms; t = +inf gives the
// Born-Markov generator. Sum-frequency terms are dropped unless requested.
Mat4 br_generator(const baths::KernelModel& model, double t, bool include_sum_frequency = false);

// The same generators assembled from the rates and explicit superoperators.
Mat4 thermal_dissipator_generator(const baths::ThermalBathParams& p, double t);
Mat4 squeezed_dissipator_generator(const baths::SqueezedBathParams& p, double t,
                                   bool include_sum_frequency = false);

struct EvolveOptions {
    double rtol{1e-10};
    double atol{1e-12};
    bool include_sum_frequency{false};
    double initial_step{1e-4};
};

// d rho/dt = (L0 + L2(t)) rho, integrated in the interaction picture of L0 with an adaptive
// Dormand-Prince 5(4) stepper and dense output at the requested times.
Trajectory br_evolve(const baths::KernelModel& model, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts = {});
Trajectory br_evolve(const baths::ThermalBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts = {});
Trajectory br_evolve(const baths::SqueezedBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts = {});

// Rates frozen at t = infinity.
Trajectory bm_evolve(const baths::KernelModel& model, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts = {});
Trajectory bm_evolve(const baths::ThermalBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts = {});
Trajectory bm_evolve(const baths::SqueezedBathParams& p, const Vec4& rho0, const std::vector<double>& t_grid,
                     const EvolveOptions& opts = {});

// Normalized steady-state correlator <s+(t + tau) s-(t)> / <s+ s-> in the lab frame.
std::vector<cplx> br_correlator(const baths::ThermalBathParams& p, const std::vector<double>& tau_grid);

// First-order-in-g^2 closed form: central Lorentzian, side Lorentzian and Fano term.
double br_spectrum_value(const baths::ThermalBathParams& p, double delta);
Spectrum br_spectrum(const baths::ThermalBathParams& p, const std::vector<double>& delta_grid,
                     bool normalize = true);

// Spectrum from a discrete Fourier transform of the correlator (frame at omega_q), on the
// FFT detuning grid of n points with spacing 2 pi / (n dtau).
Spectrum br_spectrum_fft(const baths::ThermalBathParams& p, double dtau, std::size_t n, bool normalize = true);

struct PurityReport {
    double max_purity{0.0};
    double time_of_max{0.0};
    double max_excess{0.0};             // max(0, max purity - 1)
    std::optional<double> first_crossing; // first time purity > 1 + threshold
};

PurityReport purity_violation(const Trajectory& traj, double threshold = 1e-4);

} // namespace fdqme::redfield
