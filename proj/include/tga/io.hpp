#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tga/rep.hpp"
#include "tga/states.hpp"

#include "json.hpp"

namespace tga {

// --- groupoid files -------------------------------------------------------
// Sections: elements, units, range, source, compose, cocycle. Tokens are
// whitespace separated; '#' comments to end of line; brackets and commas are
// treated as whitespace so triples may be written [a,b,c]. The cocycle
// section starts with "order m" followed by exponent triples "a b k".

struct ParsedGroupoid {
    FiniteGroupoid groupoid;
    std::optional<Cocycle> cocycle;

    ContextPtr context() const {
        if (cocycle) return make_context(groupoid, *cocycle);
        return make_context(groupoid);
    }
};

ParsedGroupoid parse_groupoid_text(const std::string& text);
ParsedGroupoid parse_groupoid_file(const std::string& path);

// canonical serialization; parse(serialize(x)) == x and serialization of a
// parsed canonical file is byte-identical
std::string serialize_groupoid(const FiniteGroupoid& g, const Cocycle* cocycle = nullptr);

// --- homomorphism sidecar files --------------------------------------------
// "dim: d" then one "map: <element>" section per generator, each followed by
// d*d complex entries "re,im" in row-major order.
StarHom parse_hom_file(const std::string& path, const ContextPtr& ctx);
StarHom parse_hom_text(const std::string& text, const ContextPtr& ctx);

// --- state problem files ----------------------------------------------------
// "dim: n", "algebra: full|diagonal|scalars|basis", "subalgebra: ...",
// optional "matrix:" blocks feeding the most recent basis declaration, and a
// final "state:" block with the Riesz matrix of phi on the subalgebra.
struct StateProblem {
    AlgebraPtr algebra;
    AlgebraPtr subalgebra;
    StateFunctional phi;
};
StateProblem parse_state_file(const std::string& path);
StateProblem parse_state_text(const std::string& text);

// --- reports ----------------------------------------------------------------

struct Report {
    std::string command;
    std::string inputs_digest;
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    nlohmann::ordered_json findings = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, bool>> assertions;

    void check(const std::string& name, bool ok) { assertions.emplace_back(name, ok); }
    bool pass() const;
    std::string to_json() const; // stable schema, versioned
    std::string to_text() const;
};

// FNV-1a digest of the canonicalized inputs, as a hex string
std::string digest(const std::string& data);

} // namespace tga
