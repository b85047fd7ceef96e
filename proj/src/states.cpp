#include "tga/states.hpp"

#include <random>

namespace tga {

namespace {

// --- real coordinates for Hermitian matrices ---------------------------
// hvec is an isometry: <hvec(a), hvec(b)> = tr(ab) for Hermitian a, b.

int herm_dim(int n) { return n * n; }

VectorXd hvec(const MatrixXcd& h) {
    const int n = static_cast<int>(h.rows());
    VectorXd v(herm_dim(n));
    int idx = 0;
    for (int i = 0; i < n; ++i) v(idx++) = h(i, i).real();
    const double s = std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            v(idx++) = s * h(i, j).real();
            v(idx++) = s * h(i, j).imag();
        }
    return v;
}

MatrixXcd hunvec(const VectorXd& v, int n) {
    MatrixXcd h = MatrixXcd::Zero(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i) h(i, i) = v(idx++);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double re = v(idx++) * s;
            double im = v(idx++) * s;
            h(i, j) = cplx(re, im);
            h(j, i) = cplx(re, -im);
        }
    return h;
}

MatrixXcd psd_project(const MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (h + h.adjoint()));
    VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double min_eigenvalue(const MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// The affine constraint system tr(rho C_i) = c_i in hvec coordinates,
// together with the projector onto its solution set.
struct AffineSystem {
    int n = 0;
    MatrixXd rows;
    VectorXd rhs;
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod;
    MatrixXd kernel; // orthonormal basis of the homogeneous solutions

    void finalize() {
        cod.compute(rows);
        Eigen::JacobiSVD<MatrixXd> svd(rows, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double thresh = sv.size() > 0 ? std::max(1e-10 * sv(0), 1e-13) : 1e-13;
        int r = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > thresh) ++r;
        kernel = svd.matrixV().rightCols(svd.matrixV().cols() - r);
    }

    VectorXd project(const VectorXd& x) const { return x - cod.solve(rows * x - rhs); }
    double residual(const VectorXd& x) const { return (rows * x - rhs).norm(); }
};

// Dykstra's alternating projections between the PSD cone and the affine set.
std::optional<MatrixXcd> dykstra(const AffineSystem& sys, MatrixXcd start,
                                 int max_iter = 8000, double tol = 1e-12) {
    const int n = sys.n;
    VectorXd x = hvec(0.5 * (start + start.adjoint()));
    VectorXd p = VectorXd::Zero(x.size());
    VectorXd q = VectorXd::Zero(x.size());
    double prev_gap = std::numeric_limits<double>::infinity();
    int stagnant = 0;
    for (int it = 0; it < max_iter; ++it) {
        VectorXd y = hvec(psd_project(hunvec(x + p, n)));
        p = x + p - y;
        VectorXd x2 = sys.project(y + q);
        q = y + q - x2;
        double gap = (y - x2).norm();
        x = x2;
        if (gap < tol) {
            MatrixXcd rho = hunvec(x, n);
            if (min_eigenvalue(rho) > -1e-9 && sys.residual(x) < 1e-9) return rho;
        }
        // slow tail near a degenerate intersection: settle for the current
        // iterate once the gap stops improving and is already tight enough
        stagnant = gap > 0.999 * prev_gap ? stagnant + 1 : 0;
        prev_gap = gap;
        if (stagnant > 50 && gap < 1e-10) break;
    }
    MatrixXcd rho = hunvec(x, n);
    if (min_eigenvalue(rho) > -1e-8 && sys.residual(x) < 1e-8) return rho;
    return std::nullopt;
}

// Orthonormal basis, in hvec coordinates, of the feasible directions at a
// point with support projector cols: directions d in the constraint kernel
// with d = P d P.
MatrixXd face_directions(const AffineSystem& sys, const MatrixXcd& support_vectors) {
    const int n = sys.n;
    const int q = static_cast<int>(sys.kernel.cols());
    if (q == 0) return MatrixXd(herm_dim(n), 0);
    MatrixXcd P = support_vectors * support_vectors.adjoint();
    // condition (1-P) d = 0, evaluated on the kernel basis
    MatrixXcd offmap = MatrixXcd::Identity(n, n) - P;
    MatrixXd cond(2 * n * n, q);
    for (int j = 0; j < q; ++j) {
        MatrixXcd d = hunvec(sys.kernel.col(j), n);
        MatrixXcd viol = offmap * d;
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) {
                cond(2 * (c * n + r), j) = viol(r, c).real();
                cond(2 * (c * n + r) + 1, j) = viol(r, c).imag();
            }
    }
    Eigen::JacobiSVD<MatrixXd> svd(cond, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double top = sv.size() > 0 ? sv(0) : 0.0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (top > 0.0 && sv(i) > 1e-8 * std::max(1.0, top)) ++r;
    MatrixXd coeffs = svd.matrixV().rightCols(q - r);
    return sys.kernel * coeffs; // orthonormal since kernel is
}

MatrixXcd support_vectors_of(const MatrixXcd& rho, double tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (rho + rho.adjoint()));
    double top = std::max(1.0, es.eigenvalues().maxCoeff());
    int keep = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > tol * top) ++keep;
    return es.eigenvectors().rightCols(keep);
}

// largest t >= 0 with x + t d psd, for d supported on the face of x; the
// feasible set has unit trace, so steps beyond 2/|d| cannot stay inside
double max_step(const MatrixXcd& x, const MatrixXcd& d) {
    MatrixXcd u = support_vectors_of(x);
    if (u.cols() == 0 || d.norm() < 1e-14) return 0.0;
    double cap = 2.0 / d.norm() + 1.0;
    MatrixXcd xr = u.adjoint() * x * u;
    MatrixXcd dr = u.adjoint() * d * u;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(xr);
    VectorXd ev = es.eigenvalues().cwiseMax(1e-14);
    MatrixXcd isqrt = es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                      es.eigenvectors().adjoint();
    double lo = min_eigenvalue(isqrt * dr * isqrt);
    if (lo >= -1e-12) return cap;
    return std::min(1.0 / (-lo), cap);
}

// boundary ascent: maximize tr(x h) over the feasible set from a given start
std::pair<double, MatrixXcd> ascend(const AffineSystem& sys, MatrixXcd x, const MatrixXcd& h) {
    const int n = sys.n;
    auto value = [&h](const MatrixXcd& m) { return (m * h).trace().real(); };
    for (int iter = 0; iter < 2 * n + 10; ++iter) {
        MatrixXd dirs = face_directions(sys, support_vectors_of(x));
        if (dirs.cols() == 0) break;
        VectorXd hv = hvec(h);
        VectorXd coeffs = dirs.transpose() * hv;
        VectorXd dv = dirs * coeffs;
        if (dv.norm() < 1e-10) break;
        MatrixXcd d = hunvec(dv, n);
        double t = max_step(x, d);
        if (t <= 1e-12 || t * dv.squaredNorm() < 1e-13) break;
        x = hunvec(sys.project(hvec(psd_project(x + t * d))), n);
    }
    return {value(x), x};
}

MatrixXcd hermitian_part(const MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

bool same_span(const ConcreteAlgebra& a, const ConcreteAlgebra& b) {
    if (a.dim != b.dim || a.k() != b.k()) return false;
    for (int j = 0; j < b.k(); ++j)
        if (!a.contains(b.basis_matrix(j))) return false;
    return true;
}

} // namespace

// --- ConcreteAlgebra -----------------------------------------------------

MatrixXcd ConcreteAlgebra::project(const MatrixXcd& m) const {
    VectorXcd v = vectorize(m);
    return unvectorize(onb * (onb.adjoint() * v), dim, dim);
}

bool ConcreteAlgebra::contains(const MatrixXcd& m, double tol) const {
    return (m - project(m)).norm() <= tol * std::max(1.0, m.norm());
}

AlgebraPtr make_algebra(int dim, std::vector<MatrixXcd> basis) {
    if (basis.empty()) throw NotASubalgebra("algebra needs at least one basis matrix");
    for (const auto& b : basis)
        if (b.rows() != dim || b.cols() != dim)
            throw NotASubalgebra("basis matrix has the wrong ambient dimension");
    auto alg = std::make_shared<ConcreteAlgebra>();
    alg->dim = dim;
    alg->basis = std::move(basis);
    MatrixXcd cols(dim * dim, static_cast<long>(alg->basis.size()));
    for (size_t j = 0; j < alg->basis.size(); ++j)
        cols.col(static_cast<long>(j)) = vectorize(alg->basis[j]);
    alg->onb = column_space(cols, 1e-10);

    for (size_t i = 0; i < alg->basis.size(); ++i) {
        if (!alg->contains(alg->basis[i].adjoint(), 1e-10 * 10))
            throw NotASubalgebra("span is not closed under adjoints");
        for (size_t j = 0; j < alg->basis.size(); ++j)
            if (!alg->contains(alg->basis[i] * alg->basis[j], 1e-10 * 10))
                throw NotASubalgebra("span is not closed under products");
    }

    // the unit: solve E q_j = q_j = q_j E inside the span
    const int k = alg->k();
    MatrixXcd system(2 * k * dim * dim, k);
    VectorXcd rhs(2 * k * dim * dim);
    for (int j = 0; j < k; ++j) {
        MatrixXcd qj = alg->basis_matrix(j);
        for (int i = 0; i < k; ++i) {
            MatrixXcd qi = alg->basis_matrix(i);
            system.block(static_cast<long>(j) * dim * dim, i, dim * dim, 1) = vectorize(qi * qj);
            system.block(static_cast<long>(k + j) * dim * dim, i, dim * dim, 1) = vectorize(qj * qi);
        }
        rhs.segment(static_cast<long>(j) * dim * dim, dim * dim) = vectorize(qj);
        rhs.segment(static_cast<long>(k + j) * dim * dim, dim * dim) = vectorize(qj);
    }
    VectorXcd coeff = system.completeOrthogonalDecomposition().solve(rhs);
    MatrixXcd unit = MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < k; ++i) unit += coeff(i) * alg->basis_matrix(i);
    if ((system * coeff - rhs).norm() > 1e-8 * std::max(1.0, rhs.norm()))
        throw NotASubalgebra("span has no multiplicative identity");
    alg->unit = hermitian_part(unit);
    return alg;
}

AlgebraPtr full_matrix_algebra(int n) {
    std::vector<MatrixXcd> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatrixXcd e = MatrixXcd::Zero(n, n);
            e(i, j) = 1.0;
            basis.push_back(std::move(e));
        }
    return make_algebra(n, std::move(basis));
}

AlgebraPtr diagonal_algebra(int n) {
    std::vector<MatrixXcd> basis;
    for (int i = 0; i < n; ++i) {
        MatrixXcd e = MatrixXcd::Zero(n, n);
        e(i, i) = 1.0;
        basis.push_back(std::move(e));
    }
    return make_algebra(n, std::move(basis));
}

AlgebraPtr scalar_algebra(int n) {
    return make_algebra(n, {MatrixXcd::Identity(n, n)});
}

StateFunctional make_state(AlgebraPtr algebra, MatrixXcd riesz) {
    StateFunctional phi{std::move(algebra), std::move(riesz)};
    const int k = phi.algebra->k();
    MatrixXcd gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            gram(i, j) = phi.value(phi.algebra->basis_matrix(i).adjoint() *
                                   phi.algebra->basis_matrix(j));
    if ((gram - gram.adjoint()).norm() > 1e-8 * std::max(1.0, gram.norm()))
        throw NotAState("the form phi(a*b) is not Hermitian");
    if (min_eigenvalue(gram) < -1e-10)
        throw NotAState("phi is not positive on the algebra");
    cplx at_unit = phi.value(phi.algebra->unit);
    if (std::abs(at_unit - cplx(1.0, 0.0)) > 1e-9)
        throw NotAState("phi is not normalized: phi(unit) != 1");
    return phi;
}

std::vector<MatrixXcd> state_null_space(const StateFunctional& phi) {
    const auto& alg = *phi.algebra;
    const int k = alg.k();
    MatrixXcd gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            gram(i, j) = phi.value(alg.basis_matrix(i).adjoint() * alg.basis_matrix(j));
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (gram + gram.adjoint()));
    double top = std::max(1.0, es.eigenvalues().maxCoeff());
    std::vector<MatrixXcd> out;
    for (int i = 0; i < k; ++i) {
        if (es.eigenvalues()(i) < 1e-9 * top) {
            MatrixXcd m = MatrixXcd::Zero(alg.dim, alg.dim);
            for (int j = 0; j < k; ++j) m += es.eigenvectors()(j, i) * alg.basis_matrix(j);
            out.push_back(std::move(m));
        }
    }
    return out;
}

namespace {

// residual of the multiplicative-domain conditions at a single element
double mult_domain_residual(const StateFunctional& phi, const MatrixXcd& a) {
    const auto& alg = *phi.algebra;
    double worst = 0.0;
    cplx pa = phi.value(a);
    for (int j = 0; j < alg.k(); ++j) {
        MatrixXcd qj = alg.basis_matrix(j);
        cplx pj = phi.value(qj);
        worst = std::max(worst, std::abs(phi.value(a * qj) - pa * pj));
        worst = std::max(worst, std::abs(phi.value(qj * a) - pj * pa));
    }
    return worst;
}

} // namespace

std::vector<MatrixXcd> mult_domain(const StateFunctional& phi) {
    const auto& alg = *phi.algebra;
    const int k = alg.k();
    // rows of the linear system phi(a q_j) = phi(a) phi(q_j), phi(q_j a) = ...
    MatrixXcd rows(2 * k, k);
    for (int j = 0; j < k; ++j) {
        MatrixXcd qj = alg.basis_matrix(j);
        cplx pj = phi.value(qj);
        for (int i = 0; i < k; ++i) {
            MatrixXcd qi = alg.basis_matrix(i);
            rows(j, i) = phi.value(qi * qj) - phi.value(qi) * pj;
            rows(k + j, i) = phi.value(qj * qi) - pj * phi.value(qi);
        }
    }
    MatrixXcd null = null_space_basis(rows, 1e-9);
    std::vector<MatrixXcd> out;
    for (int c = 0; c < null.cols(); ++c) {
        MatrixXcd m = MatrixXcd::Zero(alg.dim, alg.dim);
        for (int i = 0; i < k; ++i) m += null(i, c) * alg.basis_matrix(i);
        out.push_back(std::move(m));
    }

    // cross-check against { a : a - phi(a) 1 in L ∩ L* }
    std::vector<MatrixXcd> lphi = state_null_space(phi);
    MatrixXcd lcols(alg.dim * alg.dim, static_cast<long>(lphi.size()));
    for (size_t i = 0; i < lphi.size(); ++i) lcols.col(static_cast<long>(i)) = vectorize(lphi[i]);
    MatrixXcd lproj = column_space(lcols, 1e-10);
    auto in_l_and_lstar = [&](const MatrixXcd& m) {
        VectorXcd v = vectorize(m);
        VectorXcd vs = vectorize(m.adjoint());
        double r1 = lproj.cols() == 0 ? v.norm() : (v - lproj * (lproj.adjoint() * v)).norm();
        double r2 = lproj.cols() == 0 ? vs.norm() : (vs - lproj * (lproj.adjoint() * vs)).norm();
        return std::max(r1, r2) <= 1e-7 * std::max(1.0, m.norm());
    };
    for (const auto& m : out) {
        MatrixXcd centered = m - phi.value(m) * alg.unit;
        if (centered.norm() > 1e-9 && !in_l_and_lstar(centered))
            throw Error("multiplicative domain disagrees with its null-space characterization");
    }
    return out;
}

bool in_unitary_peak_set(const StateFunctional& phi, const MatrixXcd& a) {
    if (!phi.algebra->contains(a))
        throw NotAState("element does not belong to the algebra");
    bool hit = std::abs(std::abs(phi.value(a)) - 1.0) <= 1e-9 && std::abs(op_norm(a) - 1.0) <= 1e-9;
    if (hit && mult_domain_residual(phi, a) > 1e-8)
        throw Error("peak-set element escaped the multiplicative domain");
    return hit;
}

// --- compressibility ------------------------------------------------------

CompressibilityResult is_compressible(const AlgebraPtr& a, const AlgebraPtr& b,
                                      const StateFunctional& phi, int sample_count,
                                      std::uint64_t seed,
                                      const std::vector<MatrixXcd>& extra_candidates) {
    if (a->dim != b->dim) throw NotASubalgebra("algebras live in different ambient dimensions");
    for (const auto& m : b->basis)
        if (!a->contains(m)) throw NotASubalgebra("B is not contained in A");
    if (!phi.algebra || !same_span(*phi.algebra, *b))
        throw NotAState("phi must be a state of the subalgebra");

    const int n = a->dim;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // candidate compressors: spectral projections of Hermitian elements of B
    std::vector<MatrixXcd> candidates;
    auto add_candidate = [&](const MatrixXcd& m) {
        if (m.norm() < 1e-12) return;
        for (const auto& c : candidates)
            if ((c - m).norm() < 1e-8) return;
        candidates.push_back(m);
    };
    auto spectral_projections = [&](const MatrixXcd& h) {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
        const VectorXd& ev = es.eigenvalues();
        int lo = 0;
        for (int i = 1; i <= ev.size(); ++i) {
            if (i == ev.size() || ev(i) - ev(i - 1) > 1e-8) {
                MatrixXcd v = es.eigenvectors().middleCols(lo, i - lo);
                add_candidate(v * v.adjoint());
                lo = i;
            }
        }
    };
    add_candidate(b->unit);
    for (int j = 0; j < b->k(); ++j) {
        MatrixXcd q = b->basis_matrix(j);
        spectral_projections(hermitian_part(q));
        spectral_projections(hermitian_part(cplx(0.0, 1.0) * (q - q.adjoint()) * 0.5));
    }
    for (int t = 0; t < 8; ++t) {
        MatrixXcd h = MatrixXcd::Zero(n, n);
        for (int j = 0; j < b->k(); ++j) h += cplx(gauss(rng), gauss(rng)) * b->basis_matrix(j);
        spectral_projections(hermitian_part(h));
    }
    for (const auto& m : extra_candidates) add_candidate(m);

    // samples of A: the basis plus random combinations
    std::vector<MatrixXcd> samples;
    for (int j = 0; j < a->k(); ++j) samples.push_back(a->basis_matrix(j));
    for (int t = 0; t < sample_count; ++t) {
        MatrixXcd m = MatrixXcd::Zero(n, n);
        for (int j = 0; j < a->k(); ++j) m += cplx(gauss(rng), gauss(rng)) * a->basis_matrix(j);
        if (m.norm() > 0) m /= m.norm();
        samples.push_back(std::move(m));
    }

    CompressibilityResult result;
    double best_overall = std::numeric_limits<double>::infinity();
    for (const auto& cand : candidates) {
        if (!b->contains(cand)) continue;
        if (min_eigenvalue(cand) < -1e-9) continue;
        if (std::abs(op_norm(cand) - 1.0) > 1e-9) continue;
        if (std::abs(phi.value(cand) - cplx(1.0, 0.0)) > 1e-9) continue;
        double worst = 0.0;
        MatrixXcd worst_sample;
        for (const auto& s : samples) {
            MatrixXcd squeezed = cand * s * cand;
            double dist = (squeezed - b->project(squeezed)).norm();
            if (dist > worst) {
                worst = dist;
                worst_sample = s;
            }
        }
        if (worst < 1e-8) {
            result.compressible = true;
            result.witness = cand;
            result.max_distance = worst;
            return result;
        }
        if (worst < best_overall) {
            best_overall = worst;
            result.witness = cand;
            result.max_distance = worst;
            result.worst_sample = worst_sample;
        }
    }
    result.compressible = false;
    return result;
}

// --- state extension ------------------------------------------------------

namespace {

AffineSystem extension_constraints(const AlgebraPtr& a, const AlgebraPtr& b,
                                   const StateFunctional& phi) {
    const int n = a->dim;
    AffineSystem sys;
    sys.n = n;
    std::vector<VectorXd> rows;
    std::vector<double> rhs;
    auto add = [&](const MatrixXcd& c, double v) {
        rows.push_back(hvec(c));
        rhs.push_back(v);
    };
    // agreement with phi on B, split into Hermitian pairings
    for (int j = 0; j < b->k(); ++j) {
        MatrixXcd q = b->basis_matrix(j);
        cplx target = phi.value(q);
        add(hermitian_part(q), target.real());
        add(hermitian_part(cplx(0.0, 1.0) * (q - q.adjoint()) * 0.5), target.imag());
    }
    // normalization against the unit of A
    add(hermitian_part(a->unit), 1.0);
    // support: rho = E rho E, expressed row by row over the coordinate basis
    MatrixXcd e = hermitian_part(a->unit);
    const int d = herm_dim(n);
    MatrixXd t(d, d);
    for (int k = 0; k < d; ++k) {
        VectorXd base = VectorXd::Zero(d);
        base(k) = 1.0;
        MatrixXcd dk = hunvec(base, n);
        t.col(k) = hvec(dk - e * dk * e);
    }
    for (int r = 0; r < d; ++r) {
        if (t.row(r).norm() < 1e-14) continue;
        rows.push_back(t.row(r).transpose());
        rhs.push_back(0.0);
    }
    sys.rows.resize(static_cast<long>(rows.size()), d);
    sys.rhs.resize(static_cast<long>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        sys.rows.row(static_cast<long>(i)) = rows[i].transpose();
        sys.rhs(static_cast<long>(i)) = rhs[i];
    }
    sys.finalize();
    return sys;
}

} // namespace

ExtensionResult extend_state(const AlgebraPtr& a, const AlgebraPtr& b,
                             const StateFunctional& phi, std::uint64_t seed) {
    if (a->dim != b->dim) throw NotASubalgebra("algebras live in different ambient dimensions");
    for (const auto& m : b->basis)
        if (!a->contains(m)) throw NotASubalgebra("B is not contained in A");
    if (!phi.algebra || !same_span(*phi.algebra, *b))
        throw NotAState("phi must be a state of the subalgebra");

    const int n = a->dim;
    AffineSystem sys = extension_constraints(a, b, phi);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // a pool of feasible points from spread-out starts
    std::vector<MatrixXcd> pool;
    std::vector<MatrixXcd> starts;
    starts.push_back(hunvec(sys.cod.solve(sys.rhs), n)); // least-norm solution
    starts.push_back(MatrixXcd::Identity(n, n) / n);
    for (int t = 0; t < 8; ++t) {
        MatrixXcd r(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r(i, j) = cplx(gauss(rng), gauss(rng));
        starts.push_back(hermitian_part(r));
    }
    for (const auto& s : starts)
        if (auto rho = dykstra(sys, s)) pool.push_back(*rho);
    if (pool.empty()) throw Infeasible("no feasible extension found; the solver failed");

    auto mean_of = [&](const std::vector<MatrixXcd>& v) {
        MatrixXcd m = MatrixXcd::Zero(n, n);
        for (const auto& x : v) m += x;
        return MatrixXcd(m / static_cast<double>(v.size()));
    };

    // probe functionals: seeded random Hermitian elements of the algebra; the
    // exact pairing certificate below covers the directions the samples miss
    std::vector<MatrixXcd> probes;
    for (int t = 0; t < 8; ++t) {
        MatrixXcd h = MatrixXcd::Zero(n, n);
        for (int j = 0; j < a->k(); ++j) h += cplx(gauss(rng), gauss(rng)) * a->basis_matrix(j);
        probes.push_back(hermitian_part(h));
    }

    double max_gap = 0.0;
    MatrixXcd best_hi, best_lo;
    MatrixXcd start = mean_of(pool);
    for (const auto& h : probes) {
        auto [vmax, xmax] = ascend(sys, start, h);
        auto [vmin, xmin] = ascend(sys, start, MatrixXcd(-h));
        pool.push_back(xmax);
        pool.push_back(xmin);
        double gap = vmax + vmin; // vmin is the maximum of -h
        if (gap > max_gap) {
            max_gap = gap;
            best_hi = xmax;
            best_lo = xmin;
        }
    }

    // affine-hull certificate on the pooled support: feasible directions at
    // the pool mean that pair nontrivially with A witness non-uniqueness
    MatrixXcd mean = mean_of(pool);
    MatrixXd dirs = face_directions(sys, support_vectors_of(mean));
    double pairing = 0.0;
    int pairing_dir = -1, pairing_elem = -1;
    for (int l = 0; l < dirs.cols(); ++l) {
        MatrixXcd d = hunvec(dirs.col(l), n);
        for (int j = 0; j < a->k(); ++j) {
            double p = std::abs((d * a->basis_matrix(j)).trace());
            if (p > pairing) {
                pairing = p;
                pairing_dir = l;
                pairing_elem = j;
            }
        }
    }

    ExtensionResult result;
    result.unique = max_gap < 1e-7 && pairing < 1e-7;
    result.max_gap = std::max(max_gap, pairing);

    if (!result.unique) {
        MatrixXcd hi, lo;
        if (pairing >= 1e-7) {
            // walk the certified direction to both boundaries
            MatrixXcd d = hunvec(dirs.col(pairing_dir), n);
            double tp = std::min(max_step(mean, d), 1e3);
            double tm = std::min(max_step(mean, MatrixXcd(-d)), 1e3);
            hi = psd_project(mean + tp * d);
            lo = psd_project(mean - tm * d);
            (void)pairing_elem;
        } else {
            hi = best_hi;
            lo = best_lo;
        }
        StateFunctional s1{a, hi};
        StateFunctional s2{a, lo};
        result.separated = std::make_pair(std::move(s1), std::move(s2));
    }

    result.extension = StateFunctional{a, mean};
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(mean, Eigen::EigenvaluesOnly);
    double top = std::max(es.eigenvalues().maxCoeff(), 1e-30);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 1e-7 * top) ++result.extension_rank;
    return result;
}

StateAnalysis analyze_state_extension(const AlgebraPtr& a, const AlgebraPtr& b,
                                      const StateFunctional& phi, std::uint64_t seed) {
    StateAnalysis out;
    out.compressibility = is_compressible(a, b, phi, 40, seed);
    out.extension = extend_state(a, b, phi, seed);
    if (out.compressibility.compressible && !out.extension.unique)
        throw Error("compressibility certificate found but the extension is not unique; "
                    "this contradicts the unique-extension theorem");
    return out;
}

} // namespace tga
