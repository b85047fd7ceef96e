#include "tga/structure.hpp"

#include <Eigen/Eigenvalues>

namespace tga {

namespace {

// restricts the ambient context to a subgroupoid, keeping element ids
ContextPtr restricted_context(const ContextPtr& ctx, const std::vector<int>& members) {
    const auto& G = ctx->groupoid();
    GroupoidSpec spec;
    for (int e : members) {
        spec.elements.push_back(G.id(e));
        spec.range[G.id(e)] = G.id(G.range(e));
        spec.source[G.id(e)] = G.id(G.source(e));
        if (G.is_unit(e)) spec.units.push_back(G.id(e));
    }
    std::vector<char> member(G.size(), 0);
    for (int e : members) member[e] = 1;
    for (int a : members)
        for (int b : members)
            if (G.composable(a, b)) {
                int c = G.compose(a, b);
                spec.compose.push_back({G.id(a), G.id(b), G.id(c)});
            }
    FiniteGroupoid sub = build_groupoid(spec);

    std::map<std::pair<std::string, std::string>, int> entries;
    for (int a : members)
        for (int b : members)
            if (G.composable(a, b))
                entries[{G.id(a), G.id(b)}] = ctx->cocycle().exponent(a, b);
    Cocycle c = build_cocycle(sub, ctx->order(), entries);
    return make_context(std::move(sub), std::move(c));
}

} // namespace

AlgElem expect_onto_units(const AlgElem& f) {
    const auto& G = f.context()->groupoid();
    AlgElem out(f.context());
    for (int u : G.units()) out[u] = f[u];
    return out;
}

AlgElem expect_onto_isotropy(const AlgElem& f) {
    const auto& G = f.context()->groupoid();
    AlgElem out(f.context());
    for (int e = 0; e < G.size(); ++e)
        if (G.range(e) == G.source(e)) out[e] = f[e];
    return out;
}

IsotropySubalgebra isotropy_subalgebra(const ContextPtr& ctx) {
    const auto& G = ctx->groupoid();
    SubGroupoid iso = interior_isotropy(G);
    IsotropySubalgebra sub;
    sub.parent = ctx;
    sub.iso = restricted_context(ctx, iso.members);
    sub.to_parent.resize(sub.iso->groupoid().size());
    sub.from_parent.assign(G.size(), -1);
    for (int i = 0; i < sub.iso->groupoid().size(); ++i) {
        int p = G.index_of(sub.iso->groupoid().id(i));
        sub.to_parent[i] = p;
        sub.from_parent[p] = i;
    }
    return sub;
}

AlgElem IsotropySubalgebra::embed(const AlgElem& f_iso) const {
    if (f_iso.context() != iso)
        throw ContextMismatch("embed expects an element of the isotropy algebra");
    AlgElem out(parent);
    for (int i = 0; i < f_iso.size(); ++i) out[to_parent[i]] = f_iso[i];
    return out;
}

AlgElem IsotropySubalgebra::to_subalgebra(const AlgElem& f_parent) const {
    if (f_parent.context() != parent)
        throw ContextMismatch("to_subalgebra expects an element of the ambient algebra");
    AlgElem out(iso);
    for (int e = 0; e < f_parent.size(); ++e) {
        if (f_parent[e] == cplx{0.0, 0.0}) continue;
        if (from_parent[e] < 0)
            throw SupportViolation("element is supported off the isotropy at '" +
                                   parent->groupoid().id(e) + "'");
        out[from_parent[e]] = f_parent[e];
    }
    return out;
}

CosetDecomposition coset_blocks(const FiniteGroupoid& g, int unit) {
    if (unit < 0 || unit >= g.size() || !g.is_unit(unit))
        throw UnknownUnit("coset_blocks: not a unit");
    SubGroupoid iso = interior_isotropy(g);
    CosetDecomposition out;
    out.unit = unit;
    out.fiber = g.source_fiber(unit);
    std::vector<int> cls(out.fiber.size(), -1);
    for (size_t i = 0; i < out.fiber.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(out.classes.size());
        out.classes.push_back({static_cast<int>(i)});
        for (size_t j = i + 1; j < out.fiber.size(); ++j) {
            if (cls[j] >= 0) continue;
            int d = g.compose(out.fiber[j], g.inverse(out.fiber[i]));
            if (iso.contains(d)) {
                cls[j] = cls[i];
                out.classes.back().push_back(static_cast<int>(j));
            }
        }
    }
    return out;
}

BlockStructureReport verify_block_structure(const IsotropySubalgebra& sub,
                                            const AlgElem& f_iso, int unit) {
    const auto& G = sub.parent->groupoid();
    AlgElem f = sub.embed(f_iso);
    RepMatrix rep = regular_rep(f, unit);
    CosetDecomposition dec = coset_blocks(G, unit);

    BlockStructureReport report;
    report.unit = unit;

    std::vector<int> cls(rep.basis.size(), -1);
    for (size_t c = 0; c < dec.classes.size(); ++c)
        for (int i : dec.classes[c]) cls[i] = static_cast<int>(c);
    for (int i = 0; i < rep.mat.rows(); ++i)
        for (int j = 0; j < rep.mat.cols(); ++j)
            if (cls[i] != cls[j])
                report.off_block_max = std::max(report.off_block_max, std::abs(rep.mat(i, j)));

    for (const auto& klass : dec.classes) {
        MatrixXcd block(klass.size(), klass.size());
        for (size_t i = 0; i < klass.size(); ++i)
            for (size_t j = 0; j < klass.size(); ++j)
                block(static_cast<long>(i), static_cast<long>(j)) = rep.mat(klass[i], klass[j]);

        int range_unit = G.range(rep.basis[klass[0]]);
        int iso_unit = sub.from_parent[range_unit];
        RepMatrix iso_rep = regular_rep(f_iso, iso_unit);

        Eigen::ComplexEigenSolver<MatrixXcd> ea(block, false);
        Eigen::ComplexEigenSolver<MatrixXcd> eb(iso_rep.mat, false);
        std::vector<cplx> sa(ea.eigenvalues().data(), ea.eigenvalues().data() + ea.eigenvalues().size());
        std::vector<cplx> sb(eb.eigenvalues().data(), eb.eigenvalues().data() + eb.eigenvalues().size());
        report.spectrum_mismatch = std::max(report.spectrum_mismatch, spectrum_distance(sa, sb));
    }
    return report;
}

IsotropyGroupAlgebra isotropy_group_algebra(const ContextPtr& ctx, int unit) {
    const auto& G = ctx->groupoid();
    if (unit < 0 || unit >= G.size() || !G.is_unit(unit))
        throw UnknownUnit("isotropy_group_algebra: not a unit");
    std::vector<int> members;
    for (int e = 0; e < G.size(); ++e)
        if (G.range(e) == unit && G.source(e) == unit) members.push_back(e);
    IsotropyGroupAlgebra q;
    q.parent = ctx;
    q.unit = unit;
    q.group = restricted_context(ctx, members);
    q.to_parent.resize(q.group->groupoid().size());
    for (int i = 0; i < q.group->groupoid().size(); ++i)
        q.to_parent[i] = G.index_of(q.group->groupoid().id(i));
    return q;
}

AlgElem quotient_to_isotropy_group(const IsotropyGroupAlgebra& q, const AlgElem& f_iso) {
    AlgElem out(q.group);
    const auto& source = f_iso.context()->groupoid();
    for (int i = 0; i < q.group->groupoid().size(); ++i)
        out[i] = f_iso[source.index_of(q.group->groupoid().id(i))];
    return out;
}

CompressionCertificate compress(const AlgElem& f, int unit) {
    const auto& G = f.context()->groupoid();
    if (unit < 0 || unit >= G.size() || !G.is_unit(unit))
        throw UnknownUnit("compress: not a unit");
    CompressionCertificate cert;
    cert.unit = unit;
    cert.compressor = delta(f.context(), unit);
    AlgElem squeezed = cert.compressor * f * cert.compressor;
    for (int e = 0; e < G.size(); ++e) {
        bool in_group = G.range(e) == unit && G.source(e) == unit;
        if (!in_group)
            cert.outside_max = std::max(cert.outside_max, std::abs(squeezed[e]));
    }
    cert.compressor_norm = reduced_norm(cert.compressor);
    return cert;
}

StarHom universal_hom(const ContextPtr& group_ctx, std::vector<MatrixXcd> unitaries,
                      double tol) {
    const auto& G = group_ctx->groupoid();
    if (G.units().size() != 1)
        throw NotAGroup("universal_hom needs a one-unit groupoid");
    if (static_cast<int>(unitaries.size()) != G.size())
        throw RelationViolation("one unitary per group element required");
    for (int e = 0; e < G.size(); ++e) {
        const MatrixXcd& u = unitaries[e];
        MatrixXcd eye = MatrixXcd::Identity(u.rows(), u.cols());
        if ((u.adjoint() * u - eye).norm() > tol || (u * u.adjoint() - eye).norm() > tol)
            throw NotUnitary("image of '" + G.id(e) + "' is not unitary");
    }
    return build_hom(group_ctx, std::move(unitaries), tol);
}

UniquenessReport uniqueness_check(const StarHom& h) {
    if (!h.validated) throw UnvalidatedHom("uniqueness_check needs a validated homomorphism");
    UniquenessReport report;
    report.injective = is_injective(h);
    report.injective_on_isotropy = is_injective_on(h, interior_isotropy(h.ctx->groupoid()).members);
    report.theorem_consistent = report.injective == report.injective_on_isotropy;
    return report;
}

SimplicityReport simplicity_report(const ContextPtr& ctx, std::uint64_t seed) {
    SimplicityReport report;
    report.effective = is_effective(ctx->groupoid());
    report.minimal = is_minimal(ctx->groupoid());
    report.blocks = wedderburn_blocks(algebra_image(ctx), seed);
    report.oracle_simple = report.blocks.size() == 1;
    report.criterion_applicable = report.effective;
    if (report.criterion_applicable) {
        report.criterion_simple = report.minimal;
        report.consistent = report.criterion_simple == report.oracle_simple;
    } else {
        report.criterion_simple = false;
        report.consistent = true;
    }
    return report;
}

} // namespace tga
