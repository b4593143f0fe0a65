// oracle.hpp - exact qubit plus truncated-cavity Lindblad model

#pragma once

#include <utility>
#include <vector>

#include "fdqme/baths.hpp"
#include "fdqme/grid.hpp"

namespace fdqme::oracle {

// Joint space ordered qubit (x) cavity. Thermal models use a frame rotating at omega_q for both
// qubit and cavity; squeezed models use the half-pump frame.
struct FullModel {
    Eigen::Index n_fock{0};
    Mat hamiltonian;
    std::vector<std::pair<double, Mat>> dissipators; // rate * D[operator]
    Mat liouvillian;
    double omega_ref{0.0}; // qubit frequency in the model frame
};

FullModel build_full_model(const baths::ThermalBathParams& p, Eigen::Index n_fock);
FullModel build_full_model(const baths::SqueezedBathParams& p, Eigen::Index n_fock);

// Unit-trace null vector of the Liouvillian (LU with the trace row in place of the first row).
// Throws when the top two Fock levels hold more than top_tolerance of the population.
Mat full_steady_state(const FullModel& m, double top_tolerance = 1e-6);

Mat reduced_qubit(const Mat& chi, Eigen::Index n_fock);
Mat reduced_cavity(const Mat& chi, Eigen::Index n_fock);

// 2 Re Tr[s+ (i omega - L)^{-1} (s- chi_ss)] at omega = omega_ref + delta. One Hessenberg
// reduction, then O(n^2) Givens solves per frequency.
Spectrum full_steady_spectrum(const FullModel& m, const Mat& chi_ss, const std::vector<double>& delta_grid,
                              bool normalize = true);

} // namespace fdqme::oracle
