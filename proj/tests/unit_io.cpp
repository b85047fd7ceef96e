#include "doctest.h"

#include "testutil.hpp"
#include "tga/io.hpp"
#include "tga/structure.hpp"

using namespace tga;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(TGA_FIXTURES_DIR) + "/" + name;
}

} // namespace

TEST_CASE("groupoid files parse to the factory fixtures") {
    for (auto& [name, ctx] : fixtures::all()) {
        INFO("fixture ", name);
        ParsedGroupoid parsed = parse_groupoid_file(fixture_path(name + ".gpd"));
        const Cocycle* factory_cocycle = ctx->order() > 1 ? &ctx->cocycle() : nullptr;
        const Cocycle* parsed_cocycle = parsed.cocycle ? &*parsed.cocycle : nullptr;
        CHECK(serialize_groupoid(parsed.groupoid, parsed_cocycle) ==
              serialize_groupoid(ctx->groupoid(), factory_cocycle));
    }
}

TEST_CASE("serialization round-trips and is idempotent") {
    for (auto& [name, ctx] : fixtures::all()) {
        INFO("fixture ", name);
        const Cocycle* c = ctx->order() > 1 ? &ctx->cocycle() : nullptr;
        std::string canonical = serialize_groupoid(ctx->groupoid(), c);
        ParsedGroupoid reparsed = parse_groupoid_text(canonical);
        const Cocycle* rc = reparsed.cocycle ? &*reparsed.cocycle : nullptr;
        CHECK(serialize_groupoid(reparsed.groupoid, rc) == canonical);
    }
}

TEST_CASE("bracketed triples are accepted") {
    std::string text =
        "elements: e g\nunits: e\nrange: e=e g=e\nsource: e=e g=e\n"
        "compose: [e,e,e] [e,g,g] [g,e,g] [g,g,e]\n";
    ParsedGroupoid parsed = parse_groupoid_text(text);
    CHECK(parsed.groupoid.size() == 2);
    CHECK_FALSE(parsed.cocycle.has_value());
}

TEST_CASE("parse errors carry positions and validation errors pass through") {
    SUBCASE("unknown section") {
        try {
            parse_groupoid_text("elements: e\nunits: e\nrange: e=e\nsource: e=e\n"
                                "compose: e e e\nnonsense: 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& err) {
            CHECK(err.line == 6);
        }
    }
    SUBCASE("missing composite surfaces verbatim") {
        CHECK_THROWS_AS(parse_groupoid_file(fixture_path("broken_missing_composite.gpd")),
                        MissingComposite);
    }
    SUBCASE("malformed range entry") {
        CHECK_THROWS_AS(parse_groupoid_text("elements: e\nunits: e\nrange: e\nsource: e=e\n"
                                            "compose: e e e\n"),
                        ParseError);
    }
    SUBCASE("compose arity") {
        CHECK_THROWS_AS(parse_groupoid_text("elements: e\nunits: e\nrange: e=e\nsource: e=e\n"
                                            "compose: e e\n"),
                        ParseError);
    }
}

TEST_CASE("hom sidecar files") {
    ParsedGroupoid parsed = parse_groupoid_file(fixture_path("b2.gpd"));
    ContextPtr ctx = parsed.context();
    StarHom h = parse_hom_file(fixture_path("b2_kill_fiber2.hom"), ctx);
    CHECK(h.validated);
    UniquenessReport rep = uniqueness_check(h);
    CHECK_FALSE(rep.injective);
    CHECK_FALSE(rep.injective_on_isotropy);
    CHECK(rep.theorem_consistent);

    SUBCASE("the Pauli file is injective") {
        ParsedGroupoid k4s = parse_groupoid_file(fixture_path("k4_sigma.gpd"));
        ContextPtr kctx = k4s.context();
        StarHom pauli = parse_hom_file(fixture_path("k4_pauli.hom"), kctx);
        CHECK(pauli.validated);
        CHECK(is_injective(pauli));
    }
    SUBCASE("missing images are rejected") {
        CHECK_THROWS_AS(parse_hom_text("dim: 2\nmap: u1\n1,0 0,0\n0,0 1,0\n", ctx), ParseError);
    }
    SUBCASE("bad complex entries are rejected") {
        CHECK_THROWS_AS(parse_hom_text("dim: 1\nmap: u1\nxyz\n", ctx), ParseError);
    }
}

TEST_CASE("state problem files") {
    StateProblem problem = parse_state_file(fixture_path("m2_diag_ev11.alg"));
    CHECK(problem.algebra->k() == 4);
    CHECK(problem.subalgebra->k() == 2);
    auto analysis = analyze_state_extension(problem.algebra, problem.subalgebra, problem.phi);
    CHECK(analysis.compressibility.compressible);
    CHECK(analysis.extension.unique);

    StateProblem scalars = parse_state_file(fixture_path("m2_scalars.alg"));
    auto open = analyze_state_extension(scalars.algebra, scalars.subalgebra, scalars.phi);
    CHECK_FALSE(open.compressibility.compressible);
    CHECK_FALSE(open.extension.unique);

    SUBCASE("explicit basis blocks") {
        std::string text =
            "dim: 2\nalgebra: full\nsubalgebra: basis\n"
            "matrix:\n1,0 0,0\n0,0 0,0\n"
            "matrix:\n0,0 0,0\n0,0 1,0\n"
            "state:\n1,0 0,0\n0,0 0,0\n";
        StateProblem p = parse_state_text(text);
        CHECK(p.subalgebra->k() == 2);
    }
}

TEST_CASE("reports are deterministic and versioned") {
    Report r;
    r.command = "blocks";
    r.inputs_digest = digest("some canonical input");
    r.seed = 7;
    r.tolerance = 1e-8;
    r.findings["blocks"] = std::vector<int>{1, 2};
    r.check("dimension count", true);

    std::string a = r.to_json();
    std::string b = r.to_json();
    CHECK(a == b);
    CHECK(a.find("\"schema\": 1") != std::string::npos);
    CHECK(a.find("\"pass\": true") != std::string::npos);
    CHECK(r.pass());

    r.check("a failing assertion", false);
    CHECK_FALSE(r.pass());
    CHECK(r.to_text().find("FAIL") != std::string::npos);

    SUBCASE("digest is stable") {
        CHECK(digest("abc") == digest("abc"));
        CHECK(digest("abc") != digest("abd"));
    }
}
