#include "doctest.h"

#include "testutil.hpp"
#include "tga/states.hpp"
#include "tga/structure.hpp"

using namespace tga;
using namespace tga::testutil;

TEST_CASE("expectation onto the units") {
    ContextPtr r2 = fixtures::r2();
    CHECK(sup_norm(expect_onto_units(delta(r2, "1.2"))) == 0.0);
    CHECK(linf_distance(expect_onto_units(unit_element(r2)), unit_element(r2)) == 0.0);

    SUBCASE("faithfulness identity, exactly") {
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            const FiniteGroupoid& G = ctx->groupoid();
            auto gen = rng(47);
            for (int trial = 0; trial < 20; ++trial) {
                AlgElem f = random_elem(ctx, gen);
                AlgElem diag = expect_onto_units(involute(f) * f);
                for (int u : G.units()) {
                    double expected = 0.0;
                    for (int e : G.source_fiber(u)) expected += std::norm(f[e]);
                    CHECK(std::abs(diag[u] - cplx(expected, 0.0)) < 1e-12 * (1.0 + expected));
                }
            }
        }
    }
}

TEST_CASE("expectation onto the isotropy") {
    ContextPtr r2 = fixtures::r2();
    const FiniteGroupoid& G = r2->groupoid();
    AlgElem f = delta(r2, "1.1") + cplx(3.0) * delta(r2, "1.2");
    AlgElem kept = expect_onto_isotropy(f);
    CHECK(kept[G.index_of("1.1")] == cplx{1.0, 0.0});
    CHECK(kept[G.index_of("1.2")] == cplx{0.0, 0.0});

    ContextPtr b2 = fixtures::b2();
    auto gen = rng(53);
    AlgElem g = random_elem(b2, gen);
    CHECK(linf_distance(expect_onto_isotropy(g), g) == 0.0); // Iso(b2) is everything

    SUBCASE("idempotent and norm-contractive") {
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            auto gen2 = rng(59);
            for (int trial = 0; trial < 15; ++trial) {
                AlgElem h = random_elem(ctx, gen2);
                AlgElem once = expect_onto_isotropy(h);
                CHECK(linf_distance(expect_onto_isotropy(once), once) == 0.0);
                CHECK(reduced_norm(once) <= reduced_norm(h) + 1e-10);
            }
        }
    }
}

TEST_CASE("the isotropy subalgebra embeds isometrically") {
    for (auto& [name, ctx] : fixtures::all()) {
        INFO("fixture ", name);
        IsotropySubalgebra sub = isotropy_subalgebra(ctx);
        auto gen = rng(61);
        for (int trial = 0; trial < 25; ++trial) {
            AlgElem x = random_elem(sub.iso, gen);
            AlgElem y = random_elem(sub.iso, gen);
            // *-homomorphism, exactly: the convolution never leaves the isotropy
            CHECK(linf_distance(sub.embed(x * y), sub.embed(x) * sub.embed(y)) < 1e-15);
            CHECK(linf_distance(sub.embed(involute(x)), involute(sub.embed(x))) == 0.0);
            // isometry for the reduced norms
            CHECK(std::abs(reduced_norm(sub.embed(x)) - reduced_norm(x)) < 1e-8);
            // the isotropy expectation fixes the embedded copy
            CHECK(linf_distance(expect_onto_isotropy(sub.embed(x)), sub.embed(x)) == 0.0);
        }
    }

    SUBCASE("unit fixtures: embed is the identity when Iso(G) = G") {
        IsotropySubalgebra sub = isotropy_subalgebra(fixtures::b2());
        CHECK(sub.iso->groupoid().size() == 4);
        auto gen = rng(67);
        AlgElem x = random_elem(sub.iso, gen);
        CHECK(sup_norm(sub.embed(x)) == sup_norm(x));
    }
    SUBCASE("support violations are rejected") {
        IsotropySubalgebra sub = isotropy_subalgebra(fixtures::r2());
        CHECK_THROWS_AS(sub.to_subalgebra(delta(sub.parent, "1.2")), SupportViolation);
        CHECK_NOTHROW(sub.to_subalgebra(delta(sub.parent, "1.1")));
    }
}

TEST_CASE("coset classes group the fibre by range") {
    SUBCASE("pair groupoid: singleton classes") {
        ContextPtr ctx = fixtures::r2();
        const FiniteGroupoid& G = ctx->groupoid();
        CosetDecomposition dec = coset_blocks(G, G.index_of("1.1"));
        CHECK(dec.classes.size() == 2);
        for (const auto& c : dec.classes) CHECK(c.size() == 1);
    }
    SUBCASE("group bundle: one class per fibre") {
        ContextPtr ctx = fixtures::b2();
        const FiniteGroupoid& G = ctx->groupoid();
        CosetDecomposition dec = coset_blocks(G, G.index_of("u1"));
        CHECK(dec.classes.size() == 1);
        CHECK(dec.classes[0].size() == 2);
    }
    SUBCASE("partition property and the isotropy criterion") {
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            const FiniteGroupoid& G = ctx->groupoid();
            SubGroupoid iso = interior_isotropy(G);
            for (int u : G.units()) {
                CosetDecomposition dec = coset_blocks(G, u);
                size_t total = 0;
                for (const auto& c : dec.classes) total += c.size();
                CHECK(total == dec.fiber.size());
                for (const auto& c : dec.classes)
                    for (int i : c)
                        for (int j : c)
                            CHECK(iso.contains(
                                G.compose(dec.fiber[i], G.inverse(dec.fiber[j]))));
            }
        }
    }
}

TEST_CASE("block structure of embedded isotropy elements") {
    for (const char* name : {"b2", "g6"}) {
        INFO("fixture ", name);
        ContextPtr ctx = fixtures::by_name(name);
        IsotropySubalgebra sub = isotropy_subalgebra(ctx);
        auto gen = rng(71);
        for (int trial = 0; trial < 15; ++trial) {
            AlgElem x = random_elem(sub.iso, gen);
            for (int u : ctx->groupoid().units()) {
                BlockStructureReport rep = verify_block_structure(sub, x, u);
                CHECK(rep.off_block_max < 1e-12);
                CHECK(rep.spectrum_mismatch < 1e-8);
            }
        }
    }
}

TEST_CASE("quotients onto isotropy groups") {
    ContextPtr b2 = fixtures::b2();
    IsotropySubalgebra sub = isotropy_subalgebra(b2);
    int u1 = b2->groupoid().index_of("u1");
    IsotropyGroupAlgebra q = isotropy_group_algebra(b2, u1);
    CHECK(q.group->groupoid().size() == 2);

    SUBCASE("point mass at the fibre maps to the group generator") {
        AlgElem image = quotient_to_isotropy_group(q, delta(sub.iso, "g1"));
        CHECK(image[q.group->groupoid().index_of("g1")] == cplx{1.0, 0.0});
        CHECK(sup_norm(image) == 1.0);
    }
    SUBCASE("unit-supported elements with value one map to the identity, exactly") {
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            IsotropySubalgebra s = isotropy_subalgebra(ctx);
            for (int u : ctx->groupoid().units()) {
                IsotropyGroupAlgebra qq = isotropy_group_algebra(ctx, u);
                auto gen = rng(73);
                AlgElem g(s.iso);
                for (int iu : s.iso->groupoid().units())
                    g[iu] = cplx(std::uniform_real_distribution<double>(-2, 2)(gen), 0.0);
                g[s.iso->groupoid().index_of(ctx->groupoid().id(u))] = 1.0;
                AlgElem image = quotient_to_isotropy_group(qq, g);
                CHECK(linf_distance(image, unit_element(qq.group)) == 0.0);
            }
        }
    }
    SUBCASE("multiplicative on the isotropy algebra") {
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            IsotropySubalgebra s = isotropy_subalgebra(ctx);
            for (int u : ctx->groupoid().units()) {
                IsotropyGroupAlgebra qq = isotropy_group_algebra(ctx, u);
                auto gen = rng(79);
                for (int trial = 0; trial < 10; ++trial) {
                    AlgElem x = random_elem(s.iso, gen);
                    AlgElem y = random_elem(s.iso, gen);
                    CHECK(linf_distance(quotient_to_isotropy_group(qq, x * y),
                                        quotient_to_isotropy_group(qq, x) *
                                            quotient_to_isotropy_group(qq, y)) < 1e-10);
                }
            }
        }
    }
    SUBCASE("the induced map on the quotient is a bijection onto the group algebra") {
        // point masses off the fibre group span the kernel exactly, and the
        // remaining point masses map onto the group algebra basis
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            IsotropySubalgebra s = isotropy_subalgebra(ctx);
            for (int u : ctx->groupoid().units()) {
                IsotropyGroupAlgebra qq = isotropy_group_algebra(ctx, u);
                const auto& iso_g = s.iso->groupoid();
                for (int e = 0; e < iso_g.size(); ++e) {
                    AlgElem image = quotient_to_isotropy_group(qq, delta(s.iso, e));
                    bool in_group = ctx->groupoid().range(s.to_parent[e]) == u &&
                                    ctx->groupoid().source(s.to_parent[e]) == u;
                    if (in_group) {
                        AlgElem expected = delta(qq.group, iso_g.id(e));
                        CHECK(linf_distance(image, expected) == 0.0);
                    } else {
                        CHECK(sup_norm(image) == 0.0);
                    }
                }
            }
        }
    }
    SUBCASE("kernel dimension equals |Iso| - |Iso_u|") {
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            IsotropySubalgebra s = isotropy_subalgebra(ctx);
            const int iso_size = s.iso->groupoid().size();
            for (int u : ctx->groupoid().units()) {
                IsotropyGroupAlgebra qq = isotropy_group_algebra(ctx, u);
                // rank of the quotient on the point-mass basis, as a matrix
                MatrixXcd cols(qq.group->groupoid().size(), iso_size);
                for (int e = 0; e < iso_size; ++e) {
                    AlgElem image = quotient_to_isotropy_group(qq, delta(s.iso, e));
                    for (int r = 0; r < qq.group->groupoid().size(); ++r) cols(r, e) = image[r];
                }
                int rank = numeric_rank(cols);
                CHECK(iso_size - rank == iso_size - qq.group->groupoid().size());
            }
        }
    }
}

TEST_CASE("compression by the unit point mass") {
    ContextPtr r2 = fixtures::r2();
    CompressionCertificate c1 = compress(delta(r2, "1.2"), r2->groupoid().index_of("1.1"));
    CHECK(c1.contained());
    CHECK(std::abs(c1.compressor_norm - 1.0) < 1e-12);
    // the compressor is a positive operator
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(full_rep(c1.compressor),
                                                Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= 0.0);

    for (auto& [name, ctx] : fixtures::all()) {
        INFO("fixture ", name);
        auto gen = rng(83);
        for (int trial = 0; trial < 10; ++trial) {
            AlgElem f = random_elem(ctx, gen);
            for (int u : ctx->groupoid().units()) {
                CompressionCertificate cert = compress(f, u);
                CHECK(cert.contained());
                CHECK(std::abs(cert.compressor_norm - 1.0) < 1e-12);
                // the compressor is a positive contraction with value 1 at u
                CHECK(cert.compressor[u] == cplx{1.0, 0.0});
            }
        }
    }
}

TEST_CASE("universal homomorphisms from twisted unitary families") {
    SUBCASE("trivial representation of Z/2") {
        StarHom h = universal_hom(fixtures::z2(), {MatrixXcd::Identity(1, 1),
                                                   MatrixXcd::Identity(1, 1)});
        CHECK(h.validated);
        CHECK_FALSE(is_injective(h));
    }
    SUBCASE("Pauli representation of the twisted Klein four-group") {
        ContextPtr k4s = fixtures::k4_sigma();
        const FiniteGroupoid& G = k4s->groupoid();
        MatrixXcd x(2, 2), z(2, 2), eye = MatrixXcd::Identity(2, 2);
        x << 0, 1, 1, 0;
        z << 1, 0, 0, -1;
        std::vector<MatrixXcd> imgs(4);
        imgs[G.index_of("e")] = eye;
        imgs[G.index_of("a")] = x;
        imgs[G.index_of("b")] = z;
        imgs[G.index_of("ab")] = x * z;
        StarHom h = universal_hom(k4s, imgs);
        CHECK(h.validated);
        CHECK(is_injective(h));
        // twist generators map to phased unitaries
        for (int e = 0; e < G.size(); ++e)
            for (int p = 0; p < k4s->order(); ++p)
                CHECK((h.apply(twist_delta(k4s, {e, p})) - k4s->phase(p) * h.images[e]).norm() <
                      1e-14);
    }
    SUBCASE("the regular generators embed identically") {
        ContextPtr z2 = fixtures::z2();
        std::vector<MatrixXcd> imgs;
        for (int e = 0; e < z2->groupoid().size(); ++e)
            imgs.push_back(full_rep(delta(z2, e)));
        StarHom h = universal_hom(z2, imgs);
        CHECK(h.validated);
        CHECK(is_injective(h));
    }
    SUBCASE("character of the projective Z/2 sends g to i") {
        ContextPtr zp = fixtures::z2_proj();
        MatrixXcd one = MatrixXcd::Identity(1, 1);
        MatrixXcd gi = cplx(0.0, 1.0) * one;
        StarHom h = universal_hom(zp, {one, gi});
        CHECK(h.validated);
        CHECK_FALSE(is_injective(h)); // one-dimensional image of a two-dimensional algebra
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(universal_hom(fixtures::r2(),
                                      std::vector<MatrixXcd>(4, MatrixXcd::Identity(1, 1))),
                        NotAGroup);
        CHECK_THROWS_AS(universal_hom(fixtures::z2(), {MatrixXcd::Identity(1, 1),
                                                       2.0 * MatrixXcd::Identity(1, 1)}),
                        NotUnitary);
        // g^2 = -e in the projective twist, so sending g to 1 breaks the relation
        CHECK_THROWS_AS(universal_hom(fixtures::z2_proj(), {MatrixXcd::Identity(1, 1),
                                                            MatrixXcd::Identity(1, 1)}),
                        RelationViolation);
    }
}

TEST_CASE("uniqueness checks") {
    SUBCASE("identity homs are consistent and injective") {
        for (auto& [name, ctx] : fixtures::all()) {
            INFO("fixture ", name);
            UniquenessReport rep = uniqueness_check(identity_hom(ctx));
            CHECK(rep.injective);
            CHECK(rep.injective_on_isotropy);
            CHECK(rep.theorem_consistent);
        }
    }
    SUBCASE("killing one fibre of b2") {
        ContextPtr b2 = fixtures::b2();
        const FiniteGroupoid& G = b2->groupoid();
        // regular block at u1 only, zero on the other fibre
        std::vector<MatrixXcd> imgs(4, MatrixXcd::Zero(2, 2));
        for (const char* id : {"u1", "g1"}) {
            RepMatrix rep = regular_rep(delta(b2, id), G.index_of("u1"));
            imgs[G.index_of(id)] = rep.mat;
        }
        StarHom h = build_hom(b2, imgs);
        UniquenessReport rep = uniqueness_check(h);
        CHECK_FALSE(rep.injective);
        CHECK_FALSE(rep.injective_on_isotropy);
        CHECK(rep.theorem_consistent);
    }
    SUBCASE("unvalidated homs are rejected") {
        StarHom h = identity_hom(fixtures::z2());
        h.validated = false;
        CHECK_THROWS_AS(uniqueness_check(h), UnvalidatedHom);
    }
}

TEST_CASE("evaluation states on the concrete image algebra extend uniquely") {
    // the evaluation-after-expectation state of the isotropy image algebra is
    // compressible and extends uniquely to the whole image algebra, where it
    // is again evaluation after expectation
    for (const char* name : {"r2", "b2", "g6"}) {
        INFO("fixture ", name);
        ContextPtr ctx = fixtures::by_name(name);
        const FiniteGroupoid& G = ctx->groupoid();
        MatrixAlgebra image = algebra_image(ctx);
        AlgebraPtr big = make_algebra(image.ambient_dim, image.spanning);

        SubGroupoid iso = interior_isotropy(G);
        std::vector<MatrixXcd> iso_images;
        for (int e : iso.members) iso_images.push_back(image.spanning[e]);
        AlgebraPtr small = make_algebra(image.ambient_dim, iso_images);

        std::vector<int> offsets = full_rep_offsets(ctx);
        for (size_t ui = 0; ui < ctx->groupoid().units().size(); ++ui) {
            int u = ctx->groupoid().units()[ui];
            // evaluation at u composed with the expectation onto the units is
            // the vector state at u's own coordinate in its source fibre
            const auto& fiber = G.source_fiber(u);
            int pos = offsets[ui];
            for (size_t i = 0; i < fiber.size(); ++i)
                if (fiber[i] == u) pos = offsets[ui] + static_cast<int>(i);
            MatrixXcd riesz = MatrixXcd::Zero(image.ambient_dim, image.ambient_dim);
            riesz(pos, pos) = 1.0;
            StateFunctional phi = make_state(small, riesz);

            for (int e : iso.members) {
                cplx expected = e == u ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
                CHECK(std::abs(phi.value(image.spanning[e]) - expected) < 1e-12);
            }

            auto analysis = analyze_state_extension(big, small, phi, 5);
            CHECK(analysis.compressibility.compressible);
            CHECK(analysis.extension.unique);
            // the unique extension evaluates the unit-space expectation at u
            for (int e = 0; e < G.size(); ++e) {
                cplx expected = e == u ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
                CHECK(std::abs(analysis.extension.extension.value(image.spanning[e]) -
                               expected) < 1e-7);
            }
            // the compressor squeezes the image algebra into the isotropy part
            const MatrixXcd& b = analysis.compressibility.witness;
            for (int e = 0; e < G.size(); ++e) {
                MatrixXcd squeezed = b * image.spanning[e] * b;
                CHECK((squeezed - small->project(squeezed)).norm() < 1e-8);
            }
        }
    }
}

TEST_CASE("simplicity reports") {
    SUBCASE("pair groupoid: simple") {
        SimplicityReport rep = simplicity_report(fixtures::r2(), 3);
        CHECK(rep.effective);
        CHECK(rep.minimal);
        CHECK(rep.criterion_applicable);
        CHECK(rep.criterion_simple);
        CHECK(rep.blocks == std::vector<int>{2});
        CHECK(rep.oracle_simple);
        CHECK(rep.consistent);
    }
    SUBCASE("two orbits: not simple") {
        SimplicityReport rep = simplicity_report(fixtures::r2_disjoint(), 3);
        CHECK(rep.effective);
        CHECK_FALSE(rep.minimal);
        CHECK(rep.blocks == std::vector<int>{2, 2});
        CHECK_FALSE(rep.oracle_simple);
        CHECK(rep.consistent);
    }
    SUBCASE("group bundle: criterion inapplicable, oracle only") {
        SimplicityReport rep = simplicity_report(fixtures::b2(), 3);
        CHECK_FALSE(rep.effective);
        CHECK_FALSE(rep.criterion_applicable);
        CHECK(rep.blocks == std::vector<int>{1, 1, 1, 1});
        CHECK(rep.consistent);
    }
}
