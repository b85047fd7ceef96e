#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "tga/errors.hpp"
#include "tga/linalg.hpp"

namespace tga {

// A *-closed subalgebra of n x n matrices given by a spanning set, with an
// orthonormalized internal basis and the algebra's own multiplicative unit
// (a projection, not necessarily the ambient identity).
struct ConcreteAlgebra {
    int dim = 0;                   // ambient matrix size
    std::vector<MatrixXcd> basis;  // user-facing spanning set
    MatrixXcd onb;                 // dim^2 x k, orthonormal columns
    MatrixXcd unit;                // multiplicative identity of the algebra

    int k() const { return static_cast<int>(onb.cols()); }
    MatrixXcd basis_matrix(int j) const { return unvectorize(onb.col(j), dim, dim); }
    MatrixXcd project(const MatrixXcd& m) const;
    bool contains(const MatrixXcd& m, double tol = 1e-8) const;
};

using AlgebraPtr = std::shared_ptr<const ConcreteAlgebra>;

// Validates closure under products and adjoints (tolerance 1e-10 relative)
// and locates the unit; throws NotASubalgebra on failure.
AlgebraPtr make_algebra(int dim, std::vector<MatrixXcd> basis);

AlgebraPtr full_matrix_algebra(int n);
AlgebraPtr diagonal_algebra(int n);
AlgebraPtr scalar_algebra(int n);

// A state phi(a) = tr(riesz^H a) on a concrete algebra. Positivity is checked
// through the Gram form phi(b_i^* b_j) and normalization through phi(unit)=1.
struct StateFunctional {
    AlgebraPtr algebra;
    MatrixXcd riesz;

    cplx value(const MatrixXcd& a) const { return (riesz.adjoint() * a).trace(); }
};

StateFunctional make_state(AlgebraPtr algebra, MatrixXcd riesz);

// orthonormal basis (as matrices) of the null space { a : phi(a*a) = 0 }
std::vector<MatrixXcd> state_null_space(const StateFunctional& phi);

// orthonormal basis of the multiplicative domain
// { a : phi(ax) = phi(xa) = phi(a)phi(x) for all x }; cross-checked against
// the characterization a - phi(a) 1 in L ∩ L*
std::vector<MatrixXcd> mult_domain(const StateFunctional& phi);

// |phi(a)| = ||a|| = 1 within 1e-9; a positive hit asserts membership in the
// multiplicative domain as a built-in postcondition
bool in_unitary_peak_set(const StateFunctional& phi, const MatrixXcd& a);

// Search for a positive norm-one b in B with phi(b) = 1 such that every
// sampled a in A satisfies dist(bab, B) < 1e-8. Success gives a certificate;
// failure gives the best evidence found, not a proof.
struct CompressibilityResult {
    bool compressible = false;
    MatrixXcd witness;       // the compressor b (best candidate when failing)
    double max_distance = 0; // worst dist(bab, B) over the samples for witness
    MatrixXcd worst_sample;  // sample a realizing max_distance
};
CompressibilityResult is_compressible(const AlgebraPtr& a, const AlgebraPtr& b,
                                      const StateFunctional& phi, int sample_count = 40,
                                      std::uint64_t seed = 1,
                                      const std::vector<MatrixXcd>& extra_candidates = {});

// One state extension of phi from B to A, plus a uniqueness verdict decided
// by maximizing and minimizing seeded random linear functionals over the
// feasible set of extensions (density matrices over the PSD cone meeting the
// affine constraints). Non-uniqueness comes with two explicitly separated
// extensions.
struct ExtensionResult {
    StateFunctional extension;
    bool unique = false;
    double max_gap = 0.0; // largest optimum spread seen across the probes
    int extension_rank = 0;
    std::optional<std::pair<StateFunctional, StateFunctional>> separated;
};
ExtensionResult extend_state(const AlgebraPtr& a, const AlgebraPtr& b,
                             const StateFunctional& phi, std::uint64_t seed = 1);

// Runs the compressibility search and the extension solver together and
// enforces the implication certificate => unique extension.
struct StateAnalysis {
    CompressibilityResult compressibility;
    ExtensionResult extension;
};
StateAnalysis analyze_state_extension(const AlgebraPtr& a, const AlgebraPtr& b,
                                      const StateFunctional& phi, std::uint64_t seed = 1);

} // namespace tga
