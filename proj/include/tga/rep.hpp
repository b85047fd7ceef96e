#pragma once

#include <cstdint>
#include <optional>

#include "tga/algebra.hpp"
#include "tga/linalg.hpp"

namespace tga {

// The matrix of the regular representation pi_u(f) acting on functions on the
// source fibre G_u, in the canonical basis order.
struct RepMatrix {
    int unit = -1;
    std::vector<int> basis; // the fibre G_u in canonical element order
    MatrixXcd mat;
};

// pi_u(f)[g', g] = twist(g' g^{-1}, g) f(g' g^{-1}); throws UnknownUnit
RepMatrix regular_rep(const AlgElem& f, int unit);

// block diagonal sum of pi_u over all units in canonical order; the ambient
// space has dimension |G|
MatrixXcd full_rep(const AlgElem& f);

// offsets of each unit's fibre block inside full_rep, keyed by unit order
std::vector<int> full_rep_offsets(const ContextPtr& ctx);

// sup over units of the operator norm of pi_u(f)
double reduced_norm(const AlgElem& f);

// The image of the algebra under the sum of all regular representations,
// realized concretely: one spanning matrix per groupoid element plus an
// orthonormalized linear basis of the span.
struct MatrixAlgebra {
    int ambient_dim = 0;
    std::vector<MatrixXcd> spanning; // spanning[e] = full_rep(delta(e))
    MatrixXcd onb;                   // ambient_dim^2 x dim, orthonormal columns
    int dim() const { return static_cast<int>(onb.cols()); }
    MatrixXcd basis_matrix(int j) const { return unvectorize(onb.col(j), ambient_dim, ambient_dim); }
};

// Builds the image and verifies closure under products and adjoints and that
// the linear dimension equals |G|. Throws ClosureFailure / RankDeficient on
// violation; both signal an internal bug.
MatrixAlgebra algebra_image(const ContextPtr& ctx);

// Multiset of matrix-block dimensions of a closed *-algebra of matrices:
// computes the center inside the span, splits it with a seeded random
// Hermitian central element, and reads off each block's dimension from the
// rank of the compressed span. Retries on eigenvalue clusters closer than
// 1e-6 and throws ToleranceAmbiguity after five failures.
std::vector<int> wedderburn_blocks(const MatrixAlgebra& alg, std::uint64_t seed = 1);

// A *-homomorphism presented by generator images delta(g) -> T_g.
struct StarHom {
    ContextPtr ctx;
    int target_dim = 0;
    std::vector<MatrixXcd> images; // one per groupoid element
    bool validated = false;

    // linear extension to an arbitrary algebra element
    MatrixXcd apply(const AlgElem& f) const;
};

// Validates the generator relations T_a T_b = twist(a,b) T_{ab} (zero for
// non-composable pairs) and the involution relation, within tol. Throws
// RelationViolation naming the offending pair.
StarHom build_hom(const ContextPtr& ctx, std::vector<MatrixXcd> images, double tol = 1e-9);

// the identity embedding delta(g) -> full_rep(delta(g))
StarHom identity_hom(const ContextPtr& ctx);

// the degenerate hom with every generator mapped to the zero matrix
StarHom zero_hom(const ContextPtr& ctx, int target_dim);

// rank of the linear map delta(g) -> T_g on the coefficient space; injective
// iff the rank equals |G|
bool is_injective(const StarHom& h);

// same rank test restricted to the coefficient subspace of a subset of
// elements (used for the isotropy-restricted injectivity question)
bool is_injective_on(const StarHom& h, const std::vector<int>& elements);

} // namespace tga
