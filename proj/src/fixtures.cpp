#include "tga/fixtures.hpp"

namespace tga {
namespace fixtures {

namespace {

FiniteGroupoid z2_groupoid() {
    return group_as_groupoid({"e", "g"}, {{0, 1}, {1, 0}});
}

FiniteGroupoid k4_groupoid() {
    // e, a, b, ab with a^2 = b^2 = e and ab = ba
    std::vector<std::string> labels = {"e", "a", "b", "ab"};
    std::vector<std::vector<int>> table = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    return group_as_groupoid(labels, table);
}

// exponent of the bicharacter twist on K4: elements as bit pairs
// e=(0,0), a=(1,0), b=(0,1), ab=(1,1); k(x, y) = x_2 * y_1 mod 2
int k4_bits_second(const std::string& id) { return id == "b" || id == "ab" ? 1 : 0; }
int k4_bits_first(const std::string& id) { return id == "a" || id == "ab" ? 1 : 0; }

FiniteGroupoid b2_groupoid() {
    GroupoidSpec spec;
    spec.elements = {"u1", "g1", "u2", "g2"};
    spec.units = {"u1", "u2"};
    for (const auto& [e, u] : std::vector<std::pair<std::string, std::string>>{
             {"u1", "u1"}, {"g1", "u1"}, {"u2", "u2"}, {"g2", "u2"}}) {
        spec.range[e] = u;
        spec.source[e] = u;
    }
    spec.compose = {{"u1", "u1", "u1"}, {"u1", "g1", "g1"}, {"g1", "u1", "g1"}, {"g1", "g1", "u1"},
                    {"u2", "u2", "u2"}, {"u2", "g2", "g2"}, {"g2", "u2", "g2"}, {"g2", "g2", "u2"}};
    return build_groupoid(spec);
}

} // namespace

ContextPtr t1() {
    GroupoidSpec spec;
    spec.elements = {"u"};
    spec.units = {"u"};
    spec.range["u"] = "u";
    spec.source["u"] = "u";
    spec.compose = {{"u", "u", "u"}};
    return make_context(build_groupoid(spec));
}

ContextPtr z2() { return make_context(z2_groupoid()); }

ContextPtr z2_proj() {
    FiniteGroupoid g = z2_groupoid();
    Cocycle c = build_cocycle(g, 2, {{{"g", "g"}, 1}});
    return make_context(std::move(g), std::move(c));
}

ContextPtr k4() { return make_context(k4_groupoid()); }

ContextPtr k4_sigma() {
    FiniteGroupoid g = k4_groupoid();
    std::map<std::pair<std::string, std::string>, int> entries;
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            entries[{g.id(a), g.id(b)}] = (k4_bits_second(g.id(a)) * k4_bits_first(g.id(b))) % 2;
    Cocycle c = build_cocycle(g, 2, entries);
    return make_context(std::move(g), std::move(c));
}

ContextPtr r2() { return make_context(pair_groupoid(2)); }

ContextPtr r2_disjoint() { return make_context(relation_groupoid({{1, 2}, {3, 4}})); }

ContextPtr b2() { return make_context(b2_groupoid()); }

ContextPtr g6() {
    GroupoidSpec spec;
    spec.elements = {"u1", "g1", "u2", "g2", "1.1", "1.2", "2.1", "2.2"};
    spec.units = {"u1", "u2", "1.1", "2.2"};
    for (const auto& [e, u] : std::vector<std::pair<std::string, std::string>>{
             {"u1", "u1"}, {"g1", "u1"}, {"u2", "u2"}, {"g2", "u2"}}) {
        spec.range[e] = u;
        spec.source[e] = u;
    }
    spec.range["1.1"] = "1.1"; spec.source["1.1"] = "1.1";
    spec.range["1.2"] = "1.1"; spec.source["1.2"] = "2.2";
    spec.range["2.1"] = "2.2"; spec.source["2.1"] = "1.1";
    spec.range["2.2"] = "2.2"; spec.source["2.2"] = "2.2";
    spec.compose = {{"u1", "u1", "u1"}, {"u1", "g1", "g1"}, {"g1", "u1", "g1"}, {"g1", "g1", "u1"},
                    {"u2", "u2", "u2"}, {"u2", "g2", "g2"}, {"g2", "u2", "g2"}, {"g2", "g2", "u2"},
                    {"1.1", "1.1", "1.1"}, {"1.1", "1.2", "1.2"}, {"1.2", "2.2", "1.2"},
                    {"1.2", "2.1", "1.1"}, {"2.1", "1.1", "2.1"}, {"2.1", "1.2", "2.2"},
                    {"2.2", "2.1", "2.1"}, {"2.2", "2.2", "2.2"}};
    return make_context(build_groupoid(spec));
}

ContextPtr swap_action() {
    // Z/2 = {e, s} acting on {1, 2} by the swap
    return make_context(transformation_groupoid({"e", "s"}, {{0, 1}, {1, 0}}, 2,
                                                {{1, 2}, {2, 1}}));
}

std::vector<std::pair<std::string, ContextPtr>> all() {
    return {
        {"t1", t1()},
        {"z2", z2()},
        {"z2_proj", z2_proj()},
        {"k4", k4()},
        {"k4_sigma", k4_sigma()},
        {"r2", r2()},
        {"r2_disjoint", r2_disjoint()},
        {"b2", b2()},
        {"g6", g6()},
        {"swap", swap_action()},
    };
}

ContextPtr by_name(const std::string& name) {
    for (auto& [n, ctx] : all())
        if (n == name) return ctx;
    throw UnknownElement("unknown fixture '" + name + "'");
}

} // namespace fixtures
} // namespace tga
