// fdme.hpp - frequency-domain master equation: propagator, steady state, spectra, time reconstruction

#pragma once

#include <vector>

#include "fdqme/baths.hpp"
#include "fdqme/grid.hpp"
#include "fdqme/trajectory.hpp"

namespace fdqme::fdme {

enum class KernelMode {
    full,   // K[omega] evaluated at every frequency
    markov, // each column frozen at its natural frequency
};

// U[omega] = (i omega - L0 - K[omega])^{-1} for a qubit in the kernel's working frame.
class FrequencyPropagator {
public:
    explicit FrequencyPropagator(baths::KernelModel model, KernelMode mode = KernelMode::full);

    const baths::KernelModel& model() const { return model_; }
    KernelMode mode() const { return mode_; }
    double omega_ref() const { return model_.omega_ref(); }

    Mat4 l0() const { return model_.free_liouvillian(); }

    // Constant Markovian generator L0 + L2 with L2 columns K[nu_k](:, k).
    Mat4 markov_generator() const { return l0() + frozen_; }

    // Smallest nonzero |Re| eigenvalue of the Markovian generator; zero without dissipation.
    double relaxation_scale() const { return relaxation_scale_; }

    // i omega - L0 - K[omega], with omega = omega_ref + delta.
    Mat4 system_matrix(double delta) const;

    // Dense solve; throws std::runtime_error when singular.
    Mat4 propagate(double omega) const;
    Mat4 propagate_detuning(double delta) const;

    // (s - L0 - K(s))^{-1} rho0 for complex s with Re s > -min kappa.
    Vec4 laplace_solution(cplx s, const Vec4& rho0) const;

private:
    Mat4 kernel_detuning(double delta) const;

    baths::KernelModel model_;
    KernelMode mode_;
    Mat4 frozen_;
    double relaxation_scale_{0.0};
};

// Final value theorem: i omega U[omega] rho0 at omega in {1e-3, 1e-4, 1e-5} * relaxation_scale,
// extrapolated to omega = 0. Throws when the steady-state manifold is degenerate.
Vec4 steady_state(const FrequencyPropagator& fp, const Vec4& rho0);

struct SpectrumOptions {
    bool normalize{true};
    double clip_tolerance{1e-12}; // relative negativity allowed before raising
};

// S[delta] = 2 Re <<o| U[omega_ref + delta] |o rho_ss>> on a detuning grid,
// excluding the elastic delta-function part carried by Tr[o rho_ss].
Spectrum emission_spectrum(const FrequencyPropagator& fp, const Mat& o, const Vec4& rho_ss,
                           const std::vector<double>& delta_grid, const SpectrumOptions& opts = {});

struct InverseTransformOptions {
    double period_factor{4.0};    // series period 2T with T = period_factor * t_max
    double damping{23.0};         // 2 sigma T, sets the aliasing error e^{-damping}
    double bandwidth_factor{10.0};// initial highest node frequency in units of the generator scale
    double tolerance{1e-6};       // node count doubles until the truncation estimate is below this
    std::size_t max_nodes{1u << 22};
};

struct InverseTransformReport {
    std::size_t nodes{0};
    double truncation_estimate{0.0};
};

// rho(t) from the Bromwich integral along Re s = sigma, written as a Fourier series over a
// period longer than t_max. Four analytic tail terms carry rho(0) and its first three
// derivatives so the remainder decays as s^{-5}. Throws when max_nodes cannot meet the tolerance.
Trajectory inverse_transform(const FrequencyPropagator& fp, const Vec4& rho0, const std::vector<double>& t_grid,
                             const InverseTransformOptions& opts = {}, InverseTransformReport* report = nullptr);

double purity(const Vec4& rho);

} // namespace fdqme::fdme
