#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace tga {

using cplx = std::complex<double>;

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// operator norm (largest singular value) via Hermitian eigensolve of M^H M
inline double op_norm(const MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().maxCoeff();
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

inline VectorXcd vectorize(const MatrixXcd& m) {
    return Eigen::Map<const VectorXcd>(m.data(), m.size());
}

inline MatrixXcd unvectorize(const VectorXcd& v, int rows, int cols) {
    return Eigen::Map<const MatrixXcd>(v.data(), rows, cols);
}

// Rank decisions use a threshold relative to the top singular value with an
// absolute floor, so that numerically-zero matrices rank as zero.
inline constexpr double kSingularFloor = 1e-12;

// numerical rank with a threshold relative to the top singular value
inline int numeric_rank(const MatrixXcd& m, double rel_tol = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double thresh = std::max(rel_tol * sv(0), kSingularFloor);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return r;
}

// orthonormal basis of the column space (left singular vectors above threshold)
inline MatrixXcd column_space(const MatrixXcd& m, double rel_tol = 1e-10) {
    if (m.rows() == 0 || m.cols() == 0) return MatrixXcd(m.rows(), 0);
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    double thresh = sv.size() > 0 ? std::max(rel_tol * sv(0), kSingularFloor) : kSingularFloor;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return svd.matrixU().leftCols(r);
}

// orthonormal basis of the null space (right singular vectors below threshold)
inline MatrixXcd null_space_basis(const MatrixXcd& m, double rel_tol = 1e-9) {
    if (m.cols() == 0) return MatrixXcd(0, 0);
    if (m.rows() == 0) return MatrixXcd::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double thresh = sv.size() > 0 ? std::max(rel_tol * sv(0), kSingularFloor) : kSingularFloor;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return svd.matrixV().rightCols(svd.matrixV().cols() - r);
}

// greedy minimal-distance matching of two eigenvalue multisets; returns the
// largest matched distance, or +inf on size mismatch
inline double spectrum_distance(std::vector<std::complex<double>> a,
                                std::vector<std::complex<double>> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    while (!a.empty()) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) {
                double d = std::abs(a[i] - b[j]);
                if (d < best) { best = d; bi = i; bj = j; }
            }
        worst = std::max(worst, best);
        a.erase(a.begin() + static_cast<long>(bi));
        b.erase(b.begin() + static_cast<long>(bj));
    }
    return worst;
}

} // namespace tga
