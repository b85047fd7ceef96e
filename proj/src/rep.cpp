#include "tga/rep.hpp"

#include <random>

namespace tga {

RepMatrix regular_rep(const AlgElem& f, int unit) {
    const auto& ctx = *f.context();
    const auto& G = ctx.groupoid();
    if (unit < 0 || unit >= G.size() || !G.is_unit(unit))
        throw UnknownUnit("regular_rep: not a unit");
    RepMatrix rep;
    rep.unit = unit;
    rep.basis = G.source_fiber(unit);
    const int d = static_cast<int>(rep.basis.size());
    rep.mat = MatrixXcd::Zero(d, d);
    for (int col = 0; col < d; ++col) {
        int g = rep.basis[col];
        int ginv = G.inverse(g);
        for (int row = 0; row < d; ++row) {
            int a = G.compose(rep.basis[row], ginv);
            if (f[a] != cplx{0.0, 0.0}) rep.mat(row, col) = ctx.twist(a, g) * f[a];
        }
    }
    return rep;
}

std::vector<int> full_rep_offsets(const ContextPtr& ctx) {
    const auto& G = ctx->groupoid();
    std::vector<int> offsets;
    int off = 0;
    for (int u : G.units()) {
        offsets.push_back(off);
        off += static_cast<int>(G.source_fiber(u).size());
    }
    return offsets;
}

MatrixXcd full_rep(const AlgElem& f) {
    const auto& G = f.context()->groupoid();
    const int n = G.size();
    MatrixXcd out = MatrixXcd::Zero(n, n);
    int off = 0;
    for (int u : G.units()) {
        RepMatrix rep = regular_rep(f, u);
        const int d = static_cast<int>(rep.basis.size());
        out.block(off, off, d, d) = rep.mat;
        off += d;
    }
    return out;
}

double reduced_norm(const AlgElem& f) {
    double best = 0.0;
    for (int u : f.context()->groupoid().units())
        best = std::max(best, op_norm(regular_rep(f, u).mat));
    return best;
}

MatrixAlgebra algebra_image(const ContextPtr& ctx) {
    const auto& G = ctx->groupoid();
    const int n = G.size();
    MatrixAlgebra alg;
    alg.ambient_dim = n;
    alg.spanning.reserve(n);
    MatrixXcd cols(n * n, n);
    for (int e = 0; e < n; ++e) {
        alg.spanning.push_back(full_rep(delta(ctx, e)));
        cols.col(e) = vectorize(alg.spanning.back());
    }
    if (numeric_rank(cols, 1e-8) != n)
        throw RankDeficient("algebra image is not |G|-dimensional; the summed regular representation should be faithful");
    alg.onb = column_space(cols, 1e-10);

    // the image of the unit element is the ambient identity
    MatrixXcd unit_image = MatrixXcd::Zero(n, n);
    for (int u : G.units()) unit_image += alg.spanning[u];
    if ((unit_image - MatrixXcd::Identity(n, n)).norm() > 1e-12)
        throw ClosureFailure("image of the unit element is not the identity");

    // closure under products and adjoints inside the span
    auto in_span = [&alg](const MatrixXcd& m) {
        VectorXcd v = vectorize(m);
        double res = (v - alg.onb * (alg.onb.adjoint() * v)).norm();
        return res <= 1e-9 * std::max(1.0, v.norm());
    };
    for (int a = 0; a < n; ++a) {
        if (!in_span(alg.spanning[a].adjoint()))
            throw ClosureFailure("adjoint of generator '" + G.id(a) + "' escapes the span");
        for (int b = 0; b < n; ++b)
            if (!in_span(alg.spanning[a] * alg.spanning[b]))
                throw ClosureFailure("product of generators '" + G.id(a) + "' and '" +
                                     G.id(b) + "' escapes the span");
    }
    return alg;
}

namespace {

// orthonormal basis of the solutions z in the span with [z, B_i] = 0 for all i
std::vector<MatrixXcd> center_basis(const MatrixAlgebra& alg) {
    const int r = alg.dim();
    const int N = alg.ambient_dim;
    std::vector<MatrixXcd> basis(r);
    for (int j = 0; j < r; ++j) basis[j] = alg.basis_matrix(j);
    MatrixXcd K(static_cast<long>(r) * N * N, r);
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i) {
            MatrixXcd comm = basis[j] * basis[i] - basis[i] * basis[j];
            K.block(static_cast<long>(i) * N * N, j, N * N, 1) = vectorize(comm);
        }
    }
    MatrixXcd null = null_space_basis(K, 1e-9);
    std::vector<MatrixXcd> out;
    for (int k = 0; k < null.cols(); ++k) {
        MatrixXcd z = MatrixXcd::Zero(N, N);
        for (int j = 0; j < r; ++j) z += null(j, k) * basis[j];
        out.push_back(std::move(z));
    }
    return out;
}

} // namespace

std::vector<int> wedderburn_blocks(const MatrixAlgebra& alg, std::uint64_t seed) {
    const int N = alg.ambient_dim;
    const int r = alg.dim();
    std::vector<MatrixXcd> center = center_basis(alg);
    const int p = static_cast<int>(center.size());
    if (p == 0) throw RankDeficient("algebra has an empty center");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double gap_tol = 1e-6;

    for (int attempt = 0; attempt < 5; ++attempt) {
        MatrixXcd w = MatrixXcd::Zero(N, N);
        for (const auto& z : center) w += cplx(gauss(rng), gauss(rng)) * z;
        MatrixXcd h = w + w.adjoint();

        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
        const VectorXd& ev = es.eigenvalues();
        std::vector<std::pair<int, int>> clusters; // [begin, end) index ranges
        int begin = 0;
        bool ambiguous = false;
        for (int i = 1; i <= N; ++i) {
            if (i == N || ev(i) - ev(i - 1) > gap_tol) {
                clusters.emplace_back(begin, i);
                begin = i;
            } else if (ev(i) - ev(i - 1) > gap_tol * 1e-3) {
                // gap neither clearly open nor clearly closed
                ambiguous = true;
                break;
            }
        }
        if (ambiguous || static_cast<int>(clusters.size()) != p) continue;

        std::vector<int> dims;
        bool ok = true;
        int total = 0;
        for (const auto& [lo, hi] : clusters) {
            MatrixXcd vecs = es.eigenvectors().middleCols(lo, hi - lo);
            MatrixXcd proj = vecs * vecs.adjoint();
            MatrixXcd compressed(static_cast<long>(N) * N, r);
            for (int j = 0; j < r; ++j)
                compressed.col(j) = vectorize(proj * alg.basis_matrix(j) * proj);
            int rank = numeric_rank(compressed, 1e-8);
            int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rank))));
            if (d * d != rank) { ok = false; break; }
            dims.push_back(d);
            total += rank;
        }
        if (!ok || total != r) continue;
        std::sort(dims.begin(), dims.end());
        return dims;
    }
    throw ToleranceAmbiguity("could not split the center after 5 random central elements");
}

MatrixXcd StarHom::apply(const AlgElem& f) const {
    MatrixXcd out = MatrixXcd::Zero(target_dim, target_dim);
    for (int e = 0; e < f.size(); ++e)
        if (f[e] != cplx{0.0, 0.0}) out += f[e] * images[e];
    return out;
}

StarHom build_hom(const ContextPtr& ctx, std::vector<MatrixXcd> images, double tol) {
    const auto& G = ctx->groupoid();
    const int n = G.size();
    if (static_cast<int>(images.size()) != n)
        throw RelationViolation("homomorphism must assign an image to every element");
    const int d = images.empty() ? 0 : static_cast<int>(images[0].rows());
    for (const auto& t : images)
        if (t.rows() != d || t.cols() != d)
            throw RelationViolation("generator images must be square matrices of equal size");

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            MatrixXcd lhs = images[a] * images[b];
            if (G.composable(a, b)) {
                MatrixXcd rhs = ctx->twist(a, b) * images[G.compose(a, b)];
                if ((lhs - rhs).norm() > tol)
                    throw RelationViolation("product relation fails on ('" + G.id(a) +
                                            "', '" + G.id(b) + "')");
            } else if (lhs.norm() > tol) {
                throw RelationViolation("non-composable pair ('" + G.id(a) + "', '" +
                                        G.id(b) + "') has a nonzero product image");
            }
        }
        MatrixXcd star = ctx->involution_phase(a) * images[G.inverse(a)];
        if ((images[a].adjoint() - star).norm() > tol)
            throw RelationViolation("involution relation fails at '" + G.id(a) + "'");
    }

    StarHom h;
    h.ctx = ctx;
    h.target_dim = d;
    h.images = std::move(images);
    h.validated = true;
    return h;
}

StarHom identity_hom(const ContextPtr& ctx) {
    const int n = ctx->groupoid().size();
    std::vector<MatrixXcd> images;
    images.reserve(n);
    for (int e = 0; e < n; ++e) images.push_back(full_rep(delta(ctx, e)));
    return build_hom(ctx, std::move(images));
}

StarHom zero_hom(const ContextPtr& ctx, int target_dim) {
    std::vector<MatrixXcd> images(ctx->groupoid().size(),
                                  MatrixXcd::Zero(target_dim, target_dim));
    return build_hom(ctx, std::move(images));
}

namespace {

bool rank_equals(const StarHom& h, const std::vector<int>& elements) {
    if (elements.empty()) return true;
    MatrixXcd cols(static_cast<long>(h.target_dim) * h.target_dim,
                   static_cast<long>(elements.size()));
    for (size_t i = 0; i < elements.size(); ++i)
        cols.col(static_cast<long>(i)) = vectorize(h.images[elements[i]]);
    return numeric_rank(cols, 1e-8) == static_cast<int>(elements.size());
}

} // namespace

bool is_injective(const StarHom& h) {
    std::vector<int> all(h.images.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return rank_equals(h, all);
}

bool is_injective_on(const StarHom& h, const std::vector<int>& elements) {
    return rank_equals(h, elements);
}

} // namespace tga
