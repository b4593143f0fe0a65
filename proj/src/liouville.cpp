// liouville.cpp - superoperator algebra

#include "fdqme/liouville.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace fdqme::liouville {

namespace {

void require_square(const Mat& m, const char* what)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument(std::string(what) + ": operator must be square and non-empty");
    }
}

} // namespace

Vec vectorize(const Mat& op)
{
    require_square(op, "vectorize");
    const Eigen::Index n = op.rows();
    Vec v(n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            v(i * n + j) = op(i, j);
        }
    }
    return v;
}

Mat devectorize(const Vec& v)
{
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (n * n != v.size() || n == 0) {
        throw std::invalid_argument("devectorize: length is not a perfect square");
    }
    Mat op(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            op(i, j) = v(i * n + j);
        }
    }
    return op;
}

cplx hs_inner(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("hs_inner: dimension mismatch");
    }
    return (a.adjoint() * b).trace();
}

Eigen::RowVectorXcd trace_functional(Eigen::Index dim)
{
    return vectorize(Mat::Identity(dim, dim)).transpose();
}

bool is_hermitian(const Mat& op, double tol)
{
    return op.rows() == op.cols() && (op - op.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Mat kron(const Mat& a, const Mat& b)
{
    return Eigen::kroneckerProduct(a, b).eval();
}

Mat left_superop(const Mat& a)
{
    require_square(a, "left_superop");
    return kron(a, Mat::Identity(a.rows(), a.rows()));
}

Mat right_superop(const Mat& b)
{
    require_square(b, "right_superop");
    return kron(Mat::Identity(b.rows(), b.rows()), b.transpose());
}

Mat sandwich_superop(const Mat& a, const Mat& b)
{
    return kron(a, b.transpose());
}

Mat commutator_superop(const Mat& h, bool check_hermitian, double tol)
{
    require_square(h, "commutator_superop");
    if (check_hermitian && !is_hermitian(h, tol)) {
        throw std::invalid_argument("commutator_superop: Hamiltonian is not Hermitian");
    }
    return -I * (left_superop(h) - right_superop(h));
}

Mat lindblad_dissipator(const Mat& o)
{
    require_square(o, "lindblad_dissipator");
    const Mat od = o.adjoint();
    const Mat odo = od * o;
    return 2.0 * sandwich_superop(o, od) - left_superop(odo) - right_superop(odo);
}

Mat squeeze_dissipator(const Mat& o)
{
    require_square(o, "squeeze_dissipator");
    const Mat o2 = o * o;
    return 2.0 * sandwich_superop(o, o) - left_superop(o2) - right_superop(o2);
}

Mat expm(const Mat& m)
{
    require_square(m, "expm");
    return m.exp();
}

Mat frame_transform(const Mat& l, const Mat& l0, double t)
{
    if (l.rows() != l0.rows() || l.cols() != l0.cols()) {
        throw std::invalid_argument("frame_transform: dimension mismatch");
    }
    const Mat l0t = l0 * t;
    return expm(-l0t) * l * expm(l0t);
}

} // namespace fdqme::liouville

namespace fdqme::qubit {

Mat sigma_minus()
{
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

Mat sigma_plus() { return sigma_minus().adjoint(); }

Mat sigma_x() { return sigma_minus() + sigma_plus(); }

Mat sigma_y()
{
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = -I;
    m(1, 0) = I;
    return m;
}

Mat sigma_z()
{
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Mat identity() { return Mat::Identity(2, 2); }

Mat projector_g()
{
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 1.0;
    return m;
}

Mat projector_e()
{
    Mat m = Mat::Zero(2, 2);
    m(1, 1) = 1.0;
    return m;
}

Mat density_from_ket(const Vec& ket)
{
    const Vec k = ket / ket.norm();
    return k * k.adjoint();
}

namespace {

Mat eigenprojector(const Mat& pauli, int sign)
{
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("eigenstate sign must be +1 or -1");
    }
    return 0.5 * (identity() + static_cast<double>(sign) * pauli);
}

} // namespace

Mat sigma_x_eigenstate(int sign) { return eigenprojector(sigma_x(), sign); }
Mat sigma_y_eigenstate(int sign) { return eigenprojector(sigma_y(), sign); }
Mat sigma_z_eigenstate(int sign) { return eigenprojector(sigma_z(), sign); }

} // namespace fdqme::qubit

namespace fdqme::fock {

Mat destroy(Eigen::Index n)
{
    if (n < 1) {
        throw std::invalid_argument("destroy: dimension must be positive");
    }
    Mat a = Mat::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

} // namespace fdqme::fock
