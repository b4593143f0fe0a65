// measures.hpp - spectral and trace-distance non-Markovianity measures

#pragma once

#include <string>
#include <vector>

#include "fdqme/baths.hpp"
#include "fdqme/grid.hpp"
#include "fdqme/trajectory.hpp"

namespace fdqme::measures {

enum class Method { spectral, blp };

struct MeasureResult {
    double value{0.0};
    Method method{Method::spectral};
    double kl_bits{0.0};    // spectral only
    double gap{0.0};        // spectral only
    std::size_t samples{0}; // grid points or trajectory samples
};

// Trapezoid integral of s log2(s / s_ref) over the common grid. Points where both spectra
// are below tail_cut times their peaks are skipped. The default keeps every point: for lines much
// narrower than the window a peak-relative cut discards tails that carry most of a small KL.
double kl_divergence(const Spectrum& s, const Spectrum& s_ref, double tail_cut = 0.0);

enum class GapDefinition { eigen, fwhm };

// Smallest nonzero |Re| eigenvalue of a generator.
double generator_gap(const Mat4& generator);

// Markovian bandwidth: eigenvalue gap of L0 + L2 (columns frozen at natural frequencies),
// or the FWHM 2 gamma_eff of the Markovian line.
double spectral_gap(const baths::ThermalBathParams& p, GapDefinition def = GapDefinition::eigen);
double spectral_gap(const baths::SqueezedBathParams& p, GapDefinition def = GapDefinition::eigen);

MeasureResult spectral_measure(const Spectrum& s, const Spectrum& s_m, double gap);

// Half the trace norm of the (Hermitian) difference.
double trace_distance(const Vec4& rho1, const Vec4& rho2);

// Sum of positive increments of the trace distance along two trajectories on one grid.
MeasureResult blp_measure(const Trajectory& a, const Trajectory& b);

// Frequency window and adaptive grid for a qubit spectrum with Markovian line (delta_eff,
// gamma_eff) and side features at the given centres with width kappa.
std::vector<double> spectrum_grid(double delta_eff, double gamma_eff, const std::vector<double>& side_centres,
                                  double kappa, double half_span);

// N_S for the thermal bath: nested Lorentzian against the Markovian Lorentzian.
MeasureResult thermal_spectral_measure(const baths::ThermalBathParams& p, GapDefinition def = GapDefinition::eigen);

// N_S for the squeezed bath: closed-form spectrum against the Lorentzian with K_eff frozen at 0.
MeasureResult squeezed_spectral_measure(const baths::SqueezedBathParams& p,
                                        GapDefinition def = GapDefinition::eigen);

} // namespace fdqme::measures
