#pragma once

#include "tga/rep.hpp"

namespace tga {

// conditional expectation onto the unit-space subalgebra: restriction to units
AlgElem expect_onto_units(const AlgElem& f);

// conditional expectation onto the isotropy subalgebra: restriction to the
// interior of the isotropy (all of Iso in the discrete model)
AlgElem expect_onto_isotropy(const AlgElem& f);

// The isotropy subgroupoid packaged as a convolution algebra of its own, with
// index maps to and from the ambient context. The embed map is extension by
// zero; it is a *-homomorphism and an isometry in the reduced norm.
struct IsotropySubalgebra {
    ContextPtr parent;
    ContextPtr iso;
    std::vector<int> to_parent;   // iso element -> parent element
    std::vector<int> from_parent; // parent element -> iso element, -1 off Iso

    AlgElem embed(const AlgElem& f_iso) const;
    // reinterprets an ambient element as an isotropy element; throws
    // SupportViolation if any coefficient lives off the isotropy
    AlgElem to_subalgebra(const AlgElem& f_parent) const;
};
IsotropySubalgebra isotropy_subalgebra(const ContextPtr& ctx);

// Partition of the fibre G_u into classes g ~ g' iff g' g^{-1} lies in the
// interior of the isotropy.
struct CosetDecomposition {
    int unit = -1;
    std::vector<int> fiber;            // G_u in canonical order
    std::vector<std::vector<int>> classes; // indices into `fiber`
};
CosetDecomposition coset_blocks(const FiniteGroupoid& g, int unit);

// pi_u of an embedded isotropy element is block diagonal with respect to the
// coset classes, and each block is unitarily equivalent to the regular
// representation of the isotropy algebra at the class's range unit.
struct BlockStructureReport {
    int unit = -1;
    double off_block_max = 0.0;      // largest entry outside the blocks
    double spectrum_mismatch = 0.0;  // worst eigenvalue-multiset distance
    bool pass(double off_tol = 1e-12, double spec_tol = 1e-8) const {
        return off_block_max < off_tol && spectrum_mismatch < spec_tol;
    }
};
BlockStructureReport verify_block_structure(const IsotropySubalgebra& sub,
                                            const AlgElem& f_iso, int unit);

// The isotropy group at a unit packaged as a one-unit convolution algebra.
struct IsotropyGroupAlgebra {
    ContextPtr parent;
    ContextPtr group;
    int unit = -1;
    std::vector<int> to_parent; // group element -> parent element
};
IsotropyGroupAlgebra isotropy_group_algebra(const ContextPtr& ctx, int unit);

// Quotient onto the isotropy-group algebra at the chosen unit: coefficient
// restriction to I^G_u. Multiplicative on the isotropy algebra; the kernel is
// the span of point masses off I^G_u.
AlgElem quotient_to_isotropy_group(const IsotropyGroupAlgebra& q, const AlgElem& f_iso);

// Compression by the positive norm-one element b = delta(u). Left
// convolution by delta(u) keeps exactly the arrows with range u and right
// convolution those with source u, so supp(b f b) lands in the isotropy
// group at u; in the discrete model the unit indicator is continuous and
// compactly supported, so no bump function is needed.
struct CompressionCertificate {
    int unit = -1;
    AlgElem compressor;       // the point mass at the unit
    double outside_max = 0.0; // largest |(b f b)(g)| off G_u^u (exactly zero)
    double compressor_norm = 0.0;
    bool contained() const { return outside_max == 0.0; }
};
CompressionCertificate compress(const AlgElem& f, int unit);

// Homomorphism induced by a twisted unitary family on a one-unit groupoid.
// Throws NotAGroup if the context has several units, NotUnitary if some image
// fails unitarity, RelationViolation if the twisted relation fails.
StarHom universal_hom(const ContextPtr& group_ctx, std::vector<MatrixXcd> unitaries,
                      double tol = 1e-9);

// Injectivity of a homomorphism is equivalent to injectivity of its
// restriction to the isotropy subalgebra; the checker computes both sides
// independently and reports whether they agree.
struct UniquenessReport {
    bool injective = false;
    bool injective_on_isotropy = false;
    bool theorem_consistent = false;
};
UniquenessReport uniqueness_check(const StarHom& h);

// Simplicity: for effective groupoids the algebra is simple iff the groupoid
// is minimal; the Wedderburn block count is the independent oracle. For
// non-effective groupoids only the oracle verdict is reported.
struct SimplicityReport {
    bool effective = false;
    bool minimal = false;
    bool criterion_applicable = false; // the minimality criterion needs effectiveness
    bool criterion_simple = false;     // defined only when applicable
    std::vector<int> blocks;
    bool oracle_simple = false;
    bool consistent = false; // criterion agrees with oracle (true when inapplicable)
};
SimplicityReport simplicity_report(const ContextPtr& ctx, std::uint64_t seed = 1);

} // namespace tga
