#include "tga/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tga {

namespace {

std::string triple_str(const std::string& a, const std::string& b, const std::string& c) {
    return "(" + a + ", " + b + ", " + c + ")";
}

} // namespace

int FiniteGroupoid::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownElement("unknown element '" + id + "'");
    return it->second;
}

int FiniteGroupoid::compose(int a, int b) const {
    int c = table_[static_cast<size_t>(a) * ids_.size() + b];
    if (c < 0) throw NonComposable("elements '" + ids_[a] + "' and '" + ids_[b] + "' do not compose");
    return c;
}

const std::vector<int>& FiniteGroupoid::source_fiber(int u) const {
    auto it = fibers_.find(u);
    if (it == fibers_.end()) throw UnknownUnit("'" + ids_[u] + "' is not a unit");
    return it->second;
}

FiniteGroupoid build_groupoid(const GroupoidSpec& spec) {
    if (spec.elements.empty()) throw BadTable("groupoid has no elements");
    if (spec.units.empty()) throw BadUnit("groupoid has no units");

    FiniteGroupoid g;
    g.ids_ = spec.elements;
    std::sort(g.ids_.begin(), g.ids_.end());
    g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());
    if (g.ids_.size() != spec.elements.size())
        throw BadTable("duplicate element ids in groupoid spec");
    const int n = g.size();
    for (int i = 0; i < n; ++i) g.index_[g.ids_[i]] = i;

    g.is_unit_.assign(n, 0);
    for (const auto& u : spec.units) {
        auto it = g.index_.find(u);
        if (it == g.index_.end()) throw UnknownElement("declared unit '" + u + "' is not an element");
        g.is_unit_[it->second] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (g.is_unit_[i]) g.units_.push_back(i);

    g.range_.assign(n, -1);
    g.source_.assign(n, -1);
    for (const auto& [e, r] : spec.range) {
        auto ei = g.index_.find(e);
        if (ei == g.index_.end()) throw UnknownElement("range declared for unknown element '" + e + "'");
        auto ri = g.index_.find(r);
        if (ri == g.index_.end()) throw UnknownElement("range of '" + e + "' is unknown element '" + r + "'");
        g.range_[ei->second] = ri->second;
    }
    for (const auto& [e, s] : spec.source) {
        auto ei = g.index_.find(e);
        if (ei == g.index_.end()) throw UnknownElement("source declared for unknown element '" + e + "'");
        auto si = g.index_.find(s);
        if (si == g.index_.end()) throw UnknownElement("source of '" + e + "' is unknown element '" + s + "'");
        g.source_[ei->second] = si->second;
    }
    for (int e = 0; e < n; ++e) {
        if (g.range_[e] < 0) throw BadTable("no range declared for '" + g.ids_[e] + "'");
        if (g.source_[e] < 0) throw BadTable("no source declared for '" + g.ids_[e] + "'");
        if (!g.is_unit_[g.range_[e]])
            throw BadUnit("range of '" + g.ids_[e] + "' is '" + g.ids_[g.range_[e]] + "', which is not a unit");
        if (!g.is_unit_[g.source_[e]])
            throw BadUnit("source of '" + g.ids_[e] + "' is '" + g.ids_[g.source_[e]] + "', which is not a unit");
    }

    g.table_.assign(static_cast<size_t>(n) * n, -1);
    auto lookup = [&g](const std::string& id) {
        auto it = g.index_.find(id);
        if (it == g.index_.end()) throw UnknownElement("compose uses unknown element '" + id + "'");
        return it->second;
    };
    for (const auto& t : spec.compose) {
        int a = lookup(t[0]);
        int b = lookup(t[1]);
        int c = lookup(t[2]);
        if (g.source_[a] != g.range_[b])
            throw BadTable("composition triple " + triple_str(t[0], t[1], t[2]) +
                           " declared for a non-composable pair");
        int& slot = g.table_[static_cast<size_t>(a) * n + b];
        if (slot >= 0 && slot != c)
            throw BadTable("conflicting products declared for pair (" + t[0] + ", " + t[1] + ")");
        slot = c;
    }

    // every composable pair has a product with matching endpoints
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int c = g.table_[static_cast<size_t>(a) * n + b];
            if (g.source_[a] == g.range_[b]) {
                if (c < 0)
                    throw MissingComposite("no product declared for composable pair (" +
                                           g.ids_[a] + ", " + g.ids_[b] + ")");
                if (g.range_[c] != g.range_[a] || g.source_[c] != g.source_[b])
                    throw BadTable("product " + triple_str(g.ids_[a], g.ids_[b], g.ids_[c]) +
                                   " has inconsistent range or source");
            }
        }
    }

    // declared units behave as identities, and nothing else does
    for (int x = 0; x < n; ++x) {
        bool idempotent_unit = g.range_[x] == x && g.source_[x] == x &&
                               g.table_[static_cast<size_t>(x) * n + x] == x;
        if (g.is_unit_[x] && !idempotent_unit)
            throw BadUnit("declared unit '" + g.ids_[x] + "' does not satisfy x*x = x with range(x) = source(x) = x");
        if (!g.is_unit_[x] && idempotent_unit)
            throw BadUnit("element '" + g.ids_[x] + "' behaves as a unit but is not declared as one");
    }
    for (int e = 0; e < n; ++e) {
        if (g.table_[static_cast<size_t>(g.range_[e]) * n + e] != e)
            throw BadUnit("range unit of '" + g.ids_[e] + "' does not act as a left identity");
        if (g.table_[static_cast<size_t>(e) * n + g.source_[e]] != e)
            throw BadUnit("source unit of '" + g.ids_[e] + "' does not act as a right identity");
    }

    // associativity on every doubly composable triple
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.source_[a] != g.range_[b]) continue;
            int ab = g.table_[static_cast<size_t>(a) * n + b];
            for (int c = 0; c < n; ++c) {
                if (g.source_[b] != g.range_[c]) continue;
                int bc = g.table_[static_cast<size_t>(b) * n + c];
                if (g.table_[static_cast<size_t>(ab) * n + c] != g.table_[static_cast<size_t>(a) * n + bc])
                    throw NonAssociative("associativity fails on " +
                                         triple_str(g.ids_[a], g.ids_[b], g.ids_[c]));
            }
        }
    }

    // two-sided inverses: a unique b with a*b = range(a) and b*a = source(a)
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.source_[a] != g.range_[b] || g.source_[b] != g.range_[a]) continue;
            if (g.table_[static_cast<size_t>(a) * n + b] == g.range_[a] &&
                g.table_[static_cast<size_t>(b) * n + a] == g.source_[a]) {
                if (g.inverse_[a] >= 0 && g.inverse_[a] != b)
                    throw BadInverse("element '" + g.ids_[a] + "' has two distinct inverses");
                g.inverse_[a] = b;
            }
        }
        if (g.inverse_[a] < 0)
            throw BadInverse("element '" + g.ids_[a] + "' has no inverse");
    }

    for (int u : g.units_) g.fibers_[u] = {};
    for (int e = 0; e < n; ++e) g.fibers_[g.source_[e]].push_back(e);
    return g;
}

SubGroupoid make_subgroupoid(const FiniteGroupoid& g, const std::vector<int>& members) {
    SubGroupoid s;
    s.parent = &g;
    s.member.assign(g.size(), 0);
    for (int e : members) s.member[e] = 1;
    for (int e = 0; e < g.size(); ++e) {
        if (!s.member[e]) continue;
        if (!s.member[g.inverse(e)])
            throw NotASubgroupoid("subset not closed under inverse at '" + g.id(e) + "'");
        if (!s.member[g.range(e)] || !s.member[g.source(e)])
            throw NotASubgroupoid("subset misses a unit touched by '" + g.id(e) + "'");
        for (int f = 0; f < g.size(); ++f) {
            if (!s.member[f] || !g.composable(e, f)) continue;
            if (!s.member[g.compose(e, f)])
                throw NotASubgroupoid("subset not closed under composition at (" +
                                      g.id(e) + ", " + g.id(f) + ")");
        }
    }
    for (int e = 0; e < g.size(); ++e)
        if (s.member[e]) s.members.push_back(e);
    return s;
}

SubGroupoid isotropy(const FiniteGroupoid& g) {
    std::vector<int> members;
    for (int e = 0; e < g.size(); ++e)
        if (g.range(e) == g.source(e)) members.push_back(e);
    return make_subgroupoid(g, members);
}

SubGroupoid interior_isotropy(const FiniteGroupoid& g) {
    // discrete topology: every subset is open, so the interior is all of Iso(G)
    return isotropy(g);
}

IsotropyGroup isotropy_group(const FiniteGroupoid& g, int unit) {
    if (unit < 0 || unit >= g.size() || !g.is_unit(unit))
        throw UnknownUnit("isotropy_group: not a unit");
    IsotropyGroup out;
    GroupoidSpec spec;
    for (int e = 0; e < g.size(); ++e) {
        if (g.range(e) != unit || g.source(e) != unit) continue;
        spec.elements.push_back(g.id(e));
        spec.range[g.id(e)] = g.id(unit);
        spec.source[g.id(e)] = g.id(unit);
    }
    spec.units = {g.id(unit)};
    for (const auto& a : spec.elements)
        for (const auto& b : spec.elements)
            spec.compose.push_back({a, b, g.id(g.compose(g.index_of(a), g.index_of(b)))});
    out.group = build_groupoid(spec);
    out.to_parent.resize(out.group.size());
    for (int i = 0; i < out.group.size(); ++i)
        out.to_parent[i] = g.index_of(out.group.id(i));
    return out;
}

std::vector<std::vector<int>> orbits(const FiniteGroupoid& g) {
    // union-find over arrows
    std::vector<int> root(g.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (int e = 0; e < g.size(); ++e) {
        int a = find(g.range(e)), b = find(g.source(e));
        if (a != b) root[a] = b;
    }
    std::map<int, std::vector<int>> parts;
    for (int u : g.units()) parts[find(u)].push_back(u);
    std::vector<std::vector<int>> out;
    for (auto& [_, part] : parts) out.push_back(std::move(part));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_minimal(const FiniteGroupoid& g) { return orbits(g).size() == 1; }

bool is_effective(const FiniteGroupoid& g) {
    SubGroupoid iso = interior_isotropy(g);
    return static_cast<int>(iso.members.size()) == static_cast<int>(g.units().size());
}

FiniteGroupoid pair_groupoid(int n) {
    std::vector<int> block(n);
    std::iota(block.begin(), block.end(), 1);
    return relation_groupoid({block});
}

FiniteGroupoid relation_groupoid(const std::vector<std::vector<int>>& blocks) {
    GroupoidSpec spec;
    std::set<int> seen;
    auto id = [](int i, int j) { return std::to_string(i) + "." + std::to_string(j); };
    for (const auto& block : blocks) {
        if (block.empty()) throw BadTable("relation_groupoid: empty block");
        for (int p : block)
            if (!seen.insert(p).second) throw BadTable("relation_groupoid: point repeated across blocks");
        for (int i : block) {
            for (int j : block) {
                spec.elements.push_back(id(i, j));
                spec.range[id(i, j)] = id(i, i);
                spec.source[id(i, j)] = id(j, j);
            }
            spec.units.push_back(id(i, i));
        }
        for (int i : block)
            for (int j : block)
                for (int k : block) spec.compose.push_back({id(i, j), id(j, k), id(i, k)});
    }
    return build_groupoid(spec);
}

FiniteGroupoid group_as_groupoid(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw BadTable("empty group table");
    if (static_cast<int>(table.size()) != n)
        throw BadTable("group table has wrong number of rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw BadTable("group table row has wrong length");
        for (int v : row)
            if (v < 0 || v >= n) throw BadTable("group table entry out of range");
    }
    // locate the identity
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (table[cand][a] != a || table[a][cand] != a) ok = false;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw BadTable("group table has no identity");

    GroupoidSpec spec;
    spec.elements = labels;
    spec.units = {labels[e]};
    for (int a = 0; a < n; ++a) {
        spec.range[labels[a]] = labels[e];
        spec.source[labels[a]] = labels[e];
        for (int b = 0; b < n; ++b)
            spec.compose.push_back({labels[a], labels[b], labels[table[a][b]]});
    }
    try {
        return build_groupoid(spec);
    } catch (const Error& err) {
        throw BadTable(std::string("group table is not a group: ") + err.what());
    }
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b,
                              const std::string& prefix_a, const std::string& prefix_b) {
    GroupoidSpec spec;
    auto add = [&spec](const FiniteGroupoid& g, const std::string& p) {
        for (int e = 0; e < g.size(); ++e) {
            spec.elements.push_back(p + g.id(e));
            spec.range[p + g.id(e)] = p + g.id(g.range(e));
            spec.source[p + g.id(e)] = p + g.id(g.source(e));
        }
        for (int u : g.units()) spec.units.push_back(p + g.id(u));
        for (int x = 0; x < g.size(); ++x)
            for (int y = 0; y < g.size(); ++y)
                if (g.composable(x, y))
                    spec.compose.push_back({p + g.id(x), p + g.id(y), p + g.id(g.compose(x, y))});
    };
    add(a, prefix_a);
    add(b, prefix_b);
    return build_groupoid(spec);
}

FiniteGroupoid transformation_groupoid(const std::vector<std::string>& group_labels,
                                       const std::vector<std::vector<int>>& group_table,
                                       int num_points,
                                       const std::vector<std::vector<int>>& action) {
    FiniteGroupoid grp = group_as_groupoid(group_labels, group_table);
    const int n = static_cast<int>(group_labels.size());
    if (static_cast<int>(action.size()) != n) throw BadAction("action table has wrong number of rows");
    for (const auto& row : action) {
        if (static_cast<int>(row.size()) != num_points) throw BadAction("action row has wrong length");
        for (int v : row)
            if (v < 1 || v > num_points) throw BadAction("action moves a point out of range");
    }
    // identity acts trivially; g.(h.x) = (gh).x
    int e = -1;
    for (int i = 0; i < n; ++i)
        if (group_labels[i] == grp.id(grp.units()[0])) e = i;
    for (int x = 0; x < num_points; ++x)
        if (action[e][x] != x + 1) throw BadAction("identity does not fix point " + std::to_string(x + 1));
    for (int gi = 0; gi < n; ++gi)
        for (int hi = 0; hi < n; ++hi)
            for (int x = 0; x < num_points; ++x)
                if (action[gi][action[hi][x] - 1] != action[group_table[gi][hi]][x])
                    throw BadAction("action is not compatible with the group law at (" +
                                    group_labels[gi] + ", " + group_labels[hi] + ", " +
                                    std::to_string(x + 1) + ")");

    GroupoidSpec spec;
    auto id = [&](int gi, int x) { return group_labels[gi] + "." + std::to_string(x); };
    for (int gi = 0; gi < n; ++gi) {
        for (int x = 1; x <= num_points; ++x) {
            spec.elements.push_back(id(gi, x));
            spec.source[id(gi, x)] = id(e, x);
            spec.range[id(gi, x)] = id(e, action[gi][x - 1]);
        }
    }
    for (int x = 1; x <= num_points; ++x) spec.units.push_back(id(e, x));
    // (g, h.x) * (h, x) = (gh, x)
    for (int gi = 0; gi < n; ++gi)
        for (int hi = 0; hi < n; ++hi)
            for (int x = 1; x <= num_points; ++x)
                spec.compose.push_back({id(gi, action[hi][x - 1]), id(hi, x), id(group_table[gi][hi], x)});
    return build_groupoid(spec);
}

} // namespace tga
