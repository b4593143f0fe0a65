// baths.hpp - memory kernels and closed-form spectra for thermal and squeezed cavity baths

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fdqme/types.hpp"

namespace fdqme::baths {

// Lab frame. Frequencies in units of g.
struct ThermalBathParams {
    double g{1.0};
    double omega_q{0.0};
    double omega_c{0.0};
    double kappa{1.0};
    double nbar{0.0};

    double detuning() const { return omega_q - omega_c; }
    void validate() const;
};

// Frame rotating at half the pump frequency; detunings delta_i = omega_i - omega_p/2.
struct SqueezedBathParams {
    double g{1.0};
    double delta_q{0.0};
    double delta_c{1.0};
    double r{0.0};
    double kappa{1.0};

    void validate() const;
};

struct BogoliubovParams {
    double zeta{0.0};
    double delta_c_eff{0.0}; // sqrt(delta_c^2 - r^2)
    double g1{0.0};
    double g2{0.0};          // -g sinh(zeta)
    double nbar{0.0};        // <a~^dag a~> = sinh^2(zeta)
    cplx mbar{0.0};          // <a~ a~> = kappa sinh(2 zeta) / (2 (kappa + i delta_c_eff))
    double delta_diff{0.0};  // delta_q - delta_c_eff
    double sigma_sum{0.0};   // delta_q + delta_c_eff
};

BogoliubovParams bogoliubov_params(const SqueezedBathParams& p);

enum class KernelStructure { thermal, squeezed };

// One exponential contribution C e^{rate t}, rate = -kappa + i nu.
// offset = omega_ref - nu is kept separately so that kappa + i(offset + delta)
// is formed without cancelling two large frequencies.
struct KernelTerm {
    Mat4 coeff;
    cplx rate;
    double offset{0.0};
    bool sum_frequency{false};
};

// Second-order memory kernel as a finite exponential sum. Liouville order (gg, ge, eg, ee).
// omega_ref is the qubit frequency in the working frame, so the free Liouvillian is
// diag(0, i omega_ref, -i omega_ref, 0) and spectra use delta = omega - omega_ref.
class KernelModel {
public:
    KernelModel(double omega_ref, std::vector<KernelTerm> terms, KernelStructure structure);

    double omega_ref() const { return omega_ref_; }
    KernelStructure structure() const { return structure_; }
    const std::vector<KernelTerm>& terms() const { return terms_; }

    Mat4 time(double t) const;           // K(t), t >= 0
    Mat4 freq(double delta) const;       // K[omega_ref + delta]
    Mat4 at_omega(double omega) const;   // K[omega]
    Mat4 laplace(cplx s) const;          // sum_k C_k / (s - rate_k)
    Mat4 value_at_zero() const;          // K(0)
    Mat4 derivative_at_zero() const;     // K'(0)

    // Natural (column) frequencies of the free qubit Liouvillian.
    Eigen::Vector4d natural_frequencies() const;
    Mat4 free_liouvillian() const;

    KernelModel without_sum_frequency() const;

private:
    double omega_ref_;
    std::vector<KernelTerm> terms_;
    KernelStructure structure_;
};

KernelModel thermal_kernel(const ThermalBathParams& p);
KernelModel squeezed_kernel(const SqueezedBathParams& p);

Mat4 thermal_kernel_time(const ThermalBathParams& p, double t);
Mat4 thermal_kernel_freq(const ThermalBathParams& p, double delta);
Mat4 squeezed_kernel_time(const SqueezedBathParams& p, double t);
Mat4 squeezed_kernel_freq(const SqueezedBathParams& p, double delta);

// Bath-superoperator route: K(t) = -sum_ij C_ij Sigma_i e^{L_S t} Sigma_j with
// C = G T (e^{M t})^T G and Sigma = (sigma_+ ., sigma_- ., . sigma_-, . sigma_+).
struct GenericKernelMatrices {
    Mat4 m;
    Mat4 t;
    Mat4 g;
};
GenericKernelMatrices generic_kernel_matrices(const SqueezedBathParams& p);
Mat4 generic_kernel_time(const SqueezedBathParams& p, double t);

struct MarkovRates {
    double delta_eff{0.0};
    double gamma_eff{0.0};
};

// Lamb shift and decay from K22[0].
MarkovRates thermal_markov_rates(const ThermalBathParams& p);

// (1/pi) (-Re k) / ((delta - Im k)^2 + (Re k)^2)
double nested_lorentzian(cplx k, double delta);

double thermal_closed_spectrum(const ThermalBathParams& p, double delta);
double markovian_spectrum(const MarkovRates& rates, double delta);

struct SqueezedSpectrumOptions {
    bool include_cross_terms{true}; // the K32 K23 / A33 coupling of the two coherences
};

// Effective coherence kernel K22 + K32[d] K23[d] / (i(d + 2 delta_q) - K33[d]).
cplx squeezed_effective_kernel(const SqueezedBathParams& p, double delta,
                               const SqueezedSpectrumOptions& opts = {});
double squeezed_closed_spectrum(const SqueezedBathParams& p, double delta,
                                const SqueezedSpectrumOptions& opts = {});
MarkovRates squeezed_markov_rates(const SqueezedBathParams& p);

double squeezed_steady_ground_population(const SqueezedBathParams& p);

// Local maximum of f nearest to `target` within [lo, hi], scanned with `step` and
// refined by Brent's method. Empty when no interior local maximum exists.
std::optional<double> locate_local_max(const std::function<double(double)>& f, double lo, double hi,
                                       double step, double target);

// Side peak near delta = -detuning: scan spacing kappa/50 within |delta + detuning| <= 5 kappa.
std::optional<double> find_side_peak(const std::function<double(double)>& f, double detuning,
                                     double kappa);

} // namespace fdqme::baths
