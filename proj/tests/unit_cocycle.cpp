#include "doctest.h"

#include <random>

#include "testutil.hpp"
#include "tga/cocycle.hpp"
#include "tga/fixtures.hpp"

using namespace tga;

namespace {

int mod(int k, int m) {
    int r = k % m;
    return r < 0 ? r + m : r;
}

// independent restatement of the cocycle identity, checked over all triples
void check_cocycle_identity_exhaustively(const FiniteGroupoid& g, const Cocycle& c) {
    int triples = 0;
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
            if (!g.composable(a, b)) continue;
            for (int d = 0; d < g.size(); ++d) {
                if (!g.composable(b, d)) continue;
                int lhs = c.exponent(a, b) + c.exponent(g.compose(a, b), d);
                int rhs = c.exponent(a, g.compose(b, d)) + c.exponent(b, d);
                CHECK(mod(lhs - rhs, c.order()) == 0);
                ++triples;
            }
        }
    CHECK(triples > 0);
}

} // namespace

TEST_CASE("trivial cocycle is valid on every fixture") {
    for (auto& [name, ctx] : fixtures::all()) {
        INFO("fixture ", name);
        Cocycle c = build_cocycle(ctx->groupoid(), 1, {});
        check_cocycle_identity_exhaustively(ctx->groupoid(), c);
    }
}

TEST_CASE("the Klein-four bicharacter is a cocycle, checked over all 64 triples") {
    ContextPtr ctx = fixtures::k4_sigma();
    check_cocycle_identity_exhaustively(ctx->groupoid(), ctx->cocycle());
    const FiniteGroupoid& g = ctx->groupoid();
    CHECK(ctx->cocycle().exponent(g.index_of("b"), g.index_of("a")) == 1);
    CHECK(ctx->cocycle().exponent(g.index_of("a"), g.index_of("b")) == 0);
}

TEST_CASE("the projective Z/2 cocycle") {
    ContextPtr ctx = fixtures::z2_proj();
    check_cocycle_identity_exhaustively(ctx->groupoid(), ctx->cocycle());
    const FiniteGroupoid& g = ctx->groupoid();
    CHECK(ctx->cocycle().exponent(g.index_of("g"), g.index_of("g")) == 1);
}

TEST_CASE("cocycle validation errors") {
    FiniteGroupoid k4 = fixtures::k4()->groupoid();
    SUBCASE("identity violation") {
        CHECK_THROWS_AS(build_cocycle(k4, 2, {{{"a", "b"}, 1}}), CocycleIdentityViolation);
    }
    SUBCASE("normalization violation") {
        FiniteGroupoid z2 = fixtures::z2()->groupoid();
        CHECK_THROWS_AS(build_cocycle(z2, 2, {{{"e", "g"}, 1}}), NormalizationViolation);
    }
    SUBCASE("non-composable pair") {
        FiniteGroupoid r2 = fixtures::r2()->groupoid();
        CHECK_THROWS_AS(build_cocycle(r2, 2, {{{"1.2", "1.2"}, 1}}), NonComposablePair);
    }
}

TEST_CASE("conjugation negates exponents") {
    FiniteGroupoid z2 = fixtures::z2()->groupoid();
    SUBCASE("trivial cocycle is self-conjugate") {
        Cocycle c = trivial_cocycle(z2, 2);
        Cocycle cc = conjugate(z2, c);
        CHECK(cc.exponent(z2.index_of("g"), z2.index_of("g")) == 0);
    }
    SUBCASE("order-two phases are self-conjugate") {
        ContextPtr ctx = fixtures::k4_sigma();
        Cocycle cc = conjugate(ctx->groupoid(), ctx->cocycle());
        for (int a = 0; a < ctx->groupoid().size(); ++a)
            for (int b = 0; b < ctx->groupoid().size(); ++b)
                if (ctx->groupoid().composable(a, b))
                    CHECK(cc.exponent(a, b) == ctx->cocycle().exponent(a, b));
    }
    SUBCASE("order four negates to m - k") {
        Cocycle c = build_cocycle(z2, 4, {{{"g", "g"}, 1}});
        Cocycle cc = conjugate(z2, c);
        CHECK(cc.exponent(z2.index_of("g"), z2.index_of("g")) == 3);
    }
}

TEST_CASE("coboundaries") {
    FiniteGroupoid z2 = fixtures::z2()->groupoid();
    SUBCASE("zero cochain gives the trivial cocycle") {
        Cocycle c = coboundary_from_cochain(z2, 4, {0, 0});
        CHECK(c.exponent(z2.index_of("g"), z2.index_of("g")) == 0);
    }
    SUBCASE("b(g) = 1 on Z/2 mod 4 gives k(g,g) = 2") {
        std::vector<int> b(z2.size(), 0);
        b[z2.index_of("g")] = 1;
        Cocycle c = coboundary_from_cochain(z2, 4, b);
        CHECK(c.exponent(z2.index_of("g"), z2.index_of("g")) == 2);
    }
    SUBCASE("formula evaluated directly on the Klein four-group") {
        FiniteGroupoid k4 = fixtures::k4()->groupoid();
        std::vector<int> b(k4.size(), 0);
        b[k4.index_of("a")] = 1;
        Cocycle c = coboundary_from_cochain(k4, 2, b);
        for (int x = 0; x < k4.size(); ++x)
            for (int y = 0; y < k4.size(); ++y)
                CHECK(c.exponent(x, y) == mod(b[x] + b[y] - b[k4.compose(x, y)], 2));
    }
    SUBCASE("random cochains always validate") {
        std::mt19937_64 gen(7);
        for (auto& [name, ctx] : fixtures::all()) {
            const FiniteGroupoid& g = ctx->groupoid();
            for (int m : {2, 3, 4}) {
                for (int trial = 0; trial < 5; ++trial) {
                    std::vector<int> b(g.size());
                    std::uniform_int_distribution<int> dist(0, m - 1);
                    for (int e = 0; e < g.size(); ++e) b[e] = g.is_unit(e) ? 0 : dist(gen);
                    CHECK_NOTHROW(coboundary_from_cochain(g, m, b));
                }
            }
        }
    }
    SUBCASE("cochain must vanish on units") {
        CHECK_THROWS_AS(coboundary_from_cochain(z2, 2, {1, 0}), BadTable);
    }
}

TEST_CASE("twist multiplication and inversion") {
    FiniteGroupoid z2 = fixtures::z2()->groupoid();
    int e = z2.index_of("e"), g = z2.index_of("g");
    SUBCASE("untwisted product") {
        Cocycle c = trivial_cocycle(z2, 2);
        TwistElement p = twist_multiply(z2, c, {g, 0}, {g, 0});
        CHECK(p == TwistElement{e, 0});
    }
    SUBCASE("projective product picks up the phase") {
        ContextPtr zp = fixtures::z2_proj();
        const Cocycle& c = zp->cocycle();
        CHECK(twist_multiply(z2, c, {g, 0}, {g, 0}) == TwistElement{e, 1});
        CHECK(twist_inverse(z2, c, {g, 0}) == TwistElement{g, 1});
        // and the inverse is two-sided
        CHECK(twist_multiply(z2, c, {g, 1}, {g, 0}) == TwistElement{e, 0});
        CHECK(twist_multiply(z2, c, {g, 0}, {g, 1}) == TwistElement{e, 0});
    }
    SUBCASE("non-composable bases reject") {
        FiniteGroupoid r2 = fixtures::r2()->groupoid();
        Cocycle c = trivial_cocycle(r2, 2);
        CHECK_THROWS_AS(twist_multiply(r2, c, {r2.index_of("1.2"), 0}, {r2.index_of("1.2"), 0}),
                        NonComposable);
    }
}

TEST_CASE("twist model is an exact groupoid: associativity and inverses, exhaustively") {
    for (auto& [name, ctx] : fixtures::all()) {
        INFO("fixture ", name);
        const FiniteGroupoid& g = ctx->groupoid();
        const Cocycle& c = ctx->cocycle();
        const int m = c.order();
        for (int a = 0; a < g.size(); ++a) {
            for (int pa = 0; pa < m; ++pa) {
                TwistElement x{a, pa};
                TwistElement xi = twist_inverse(g, c, x);
                CHECK(twist_multiply(g, c, x, xi) == TwistElement{g.range(a), 0});
                CHECK(twist_multiply(g, c, xi, x) == TwistElement{g.source(a), 0});
                for (int b = 0; b < g.size(); ++b) {
                    if (!g.composable(a, b)) continue;
                    for (int d = 0; d < g.size(); ++d) {
                        if (!g.composable(b, d)) continue;
                        TwistElement y{b, (pa + 1) % m}, z{d, 0};
                        TwistElement lhs = twist_multiply(g, c, twist_multiply(g, c, x, y), z);
                        TwistElement rhs = twist_multiply(g, c, x, twist_multiply(g, c, y, z));
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("twist axiom reports pass on the corpus") {
    for (auto& [name, ctx] : fixtures::all()) {
        INFO("fixture ", name);
        TwistAxiomReport rep = validate_twist_axioms(ctx->groupoid(), ctx->cocycle());
        CHECK(rep.maps_are_homomorphisms);
        CHECK(rep.exact);
        CHECK(rep.locally_trivial);
        CHECK(rep.central);
        CHECK(rep.all_pass());
    }
}
