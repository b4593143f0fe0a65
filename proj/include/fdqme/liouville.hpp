// liouville.hpp - superoperator algebra on a finite Hilbert space

#pragma once

#include "fdqme/types.hpp"

// Vectorization is row-stacked: vec[i*N + j] = O(i, j). For a qubit in the
// basis (g, e) the element order is (gg, ge, eg, ee).
// Left multiplication A. maps to kron(A, I), right multiplication .B to kron(I, B^T).

namespace fdqme::liouville {

// Hilbert-space operators, vectorized operators and superoperators are plain
// Eigen objects; these aliases name the role.
using HilbertOperator = Mat;
using VectorizedOperator = Vec;
using LiouvilleOperator = Mat;

Vec vectorize(const Mat& op);
Mat devectorize(const Vec& v);

// Tr[a^dagger b]
cplx hs_inner(const Mat& a, const Mat& b);

// Row vector <<I| with <<I|v>> = Tr[devectorize(v)].
Eigen::RowVectorXcd trace_functional(Eigen::Index dim);

bool is_hermitian(const Mat& op, double tol = 1e-12);

Mat kron(const Mat& a, const Mat& b);
Mat left_superop(const Mat& a);
Mat right_superop(const Mat& b);

// -i[h, .]; throws std::invalid_argument when check_hermitian and h is not Hermitian.
Mat commutator_superop(const Mat& h, bool check_hermitian = true, double tol = 1e-12);

// D[o]. = 2 o . o^dagger - o^dagger o . - . o^dagger o
Mat lindblad_dissipator(const Mat& o);

// S[o]. = 2 o . o - o^2 . - . o^2
Mat squeeze_dissipator(const Mat& o);

// Matrix exponential (Pade scaling and squaring).
Mat expm(const Mat& m);

// e^{-l0 t} l e^{l0 t}
Mat frame_transform(const Mat& l, const Mat& l0, double t);

// Superoperator application a(.)b as a matrix: kron(a, b^T).
Mat sandwich_superop(const Mat& a, const Mat& b);

} // namespace fdqme::liouville

namespace fdqme::qubit {

// Basis (g, e). sigma_z = diag(1, -1) so that H = -(w/2) sigma_z puts e above g by w.
Mat sigma_minus(); // |g><e|
Mat sigma_plus();  // |e><g|
Mat sigma_x();
Mat sigma_y();
Mat sigma_z();
Mat identity();
Mat projector_g();
Mat projector_e();

// Pure-state density matrices.
Mat density_from_ket(const Vec& ket);
Mat sigma_x_eigenstate(int sign);
Mat sigma_y_eigenstate(int sign);
Mat sigma_z_eigenstate(int sign); // +1 -> |g>, -1 -> |e>

} // namespace fdqme::qubit

namespace fdqme::fock {

Mat destroy(Eigen::Index n);
Mat identity(Eigen::Index n);

} // namespace fdqme::fock
