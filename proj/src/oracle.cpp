// oracle.cpp - exact qubit plus truncated-cavity Lindblad model

#include "fdqme/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fdqme/liouville.hpp"
#include "fdqme/parallel.hpp"

namespace fdqme::oracle {

namespace {

using liouville::kron;

void require_fock(Eigen::Index n)
{
    if (n < 4) {
        throw std::invalid_argument("n_fock must be >= 4");
    }
}

Mat assemble(const Mat& h, const std::vector<std::pair<double, Mat>>& diss)
{
    Mat l = liouville::commutator_superop(h);
    for (const auto& [rate, op] : diss) {
        l += rate * liouville::lindblad_dissipator(op);
    }
    return l;
}

Mat interaction(double g, Eigen::Index n)
{
    const Mat a = fock::destroy(n);
    return g * (kron(qubit::sigma_plus(), a) + kron(qubit::sigma_minus(), a.adjoint()));
}

// Solve (z - H) y = b for upper Hessenberg H with Givens rotations.
Vec hessenberg_solve(const Mat& h, cplx z, Vec b)
{
    const Eigen::Index n = h.rows();
    Mat r = -h;
    r.diagonal().array() += z;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::JacobiRotation<cplx> rot;
        rot.makeGivens(r(k, k), r(k + 1, k));
        r.rightCols(n - k).applyOnTheLeft(k, k + 1, rot.adjoint());
        b.applyOnTheLeft(k, k + 1, rot.adjoint());
    }
    return r.triangularView<Eigen::Upper>().solve(b);
}

} // namespace

FullModel build_full_model(const baths::ThermalBathParams& p, Eigen::Index n_fock)
{
    p.validate();
    require_fock(n_fock);
    const Mat a = fock::destroy(n_fock);
    FullModel m;
    m.n_fock = n_fock;
    m.omega_ref = 0.0;
    m.hamiltonian = -p.detuning() * kron(qubit::identity(), a.adjoint() * a) + interaction(p.g, n_fock);
    const Mat big_a = kron(qubit::identity(), a);
    m.dissipators = {{p.kappa * (p.nbar + 1.0), big_a}, {p.kappa * p.nbar, Mat(big_a.adjoint())}};
    m.liouvillian = assemble(m.hamiltonian, m.dissipators);
    return m;
}

FullModel build_full_model(const baths::SqueezedBathParams& p, Eigen::Index n_fock)
{
    p.validate();
    require_fock(n_fock);
    const Mat a = fock::destroy(n_fock);
    const Mat ad = a.adjoint();
    FullModel m;
    m.n_fock = n_fock;
    m.omega_ref = p.delta_q;
    m.hamiltonian = kron(-0.5 * p.delta_q * qubit::sigma_z(), fock::identity(n_fock))
        + kron(qubit::identity(), Mat(p.delta_c * ad * a + 0.5 * p.r * (a * a + ad * ad)))
        + interaction(p.g, n_fock);
    m.dissipators = {{p.kappa, kron(qubit::identity(), a)}};
    m.liouvillian = assemble(m.hamiltonian, m.dissipators);
    return m;
}

Mat full_steady_state(const FullModel& m, double top_tolerance)
{
    const Eigen::Index n = 2 * m.n_fock;
    Mat a = m.liouvillian;
    a.row(0) = liouville::trace_functional(n);
    Vec rhs = Vec::Zero(n * n);
    rhs(0) = 1.0;
    const Vec x = a.partialPivLu().solve(rhs);
    Mat chi = liouville::devectorize(x);
    chi = 0.5 * (chi + chi.adjoint()).eval();

    const Mat cav = reduced_cavity(chi, m.n_fock);
    const double top = cav(m.n_fock - 1, m.n_fock - 1).real() + cav(m.n_fock - 2, m.n_fock - 2).real();
    if (top > top_tolerance) {
        std::ostringstream msg;
        msg << "full_steady_state: top Fock levels hold " << top << " of the population; increase n_fock";
        throw std::runtime_error(msg.str());
    }
    return chi;
}

Mat reduced_qubit(const Mat& chi, Eigen::Index n_fock)
{
    Mat q = Mat::Zero(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            q(i, j) = chi.block(i * n_fock, j * n_fock, n_fock, n_fock).trace();
        }
    }
    return q;
}

Mat reduced_cavity(const Mat& chi, Eigen::Index n_fock)
{
    return chi.block(0, 0, n_fock, n_fock) + chi.block(n_fock, n_fock, n_fock, n_fock);
}

Spectrum full_steady_spectrum(const FullModel& m, const Mat& chi_ss, const std::vector<double>& delta_grid,
                              bool normalize)
{
    if (delta_grid.empty() || !grid::is_increasing(delta_grid)) {
        throw std::invalid_argument("full_steady_spectrum: grid must be non-empty and increasing");
    }
    const Eigen::Index nf = m.n_fock;
    const Mat sm = kron(qubit::sigma_minus(), fock::identity(nf));
    // Elastic part removed; the steady-state pole is shifted off the real axis (see fdme).
    const Eigen::RowVectorXcd tr = liouville::trace_functional(2 * nf);
    const Vec chi = liouville::vectorize(chi_ss);
    Vec x0 = liouville::vectorize(sm * chi_ss);
    x0 -= (tr * x0).value() * chi;
    const Eigen::RowVectorXcd left = liouville::vectorize(sm).adjoint();
    double shift = 1.0;
    for (const auto& d : m.dissipators) {
        shift = std::max(shift, d.first);
    }
    const Mat deflated = m.liouvillian - shift * chi * tr;

    const Eigen::HessenbergDecomposition<Mat> hd(deflated);
    const Mat h = hd.matrixH();
    const Mat q = hd.matrixQ();
    const Vec b = q.adjoint() * x0;
    const Eigen::RowVectorXcd lq = left * q;

    Spectrum s;
    s.grid = delta_grid;
    s.values.resize(delta_grid.size());
    parallel_for(delta_grid.size(), [&](std::size_t i) {
        const cplx z{0.0, m.omega_ref + delta_grid[i]};
        s.values[i] = 2.0 * (lq * hessenberg_solve(h, z, b)).value().real();
    });
    const double neg = clip_negative(s, 1e-9);
    if (neg > 1e-9) {
        throw std::runtime_error("full_steady_spectrum: negative spectral density");
    }
    return normalize ? normalized(std::move(s)) : s;
}

} // namespace fdqme::oracle
