#include "tga/io.hpp"

#include <fstream>
#include <sstream>

namespace tga {

namespace {

struct Token {
    std::string text;
    int line;
};

// whitespace-splitting tokenizer; '#' comments; brackets and commas read as
// whitespace when soft_punct is set (groupoid files), kept when not (hom and
// state files need "re,im" tokens)
std::vector<Token> tokenize(const std::string& text, bool soft_punct) {
    std::vector<Token> out;
    std::string cur;
    int line = 1;
    int cur_line = 1;
    auto flush = [&]() {
        if (!cur.empty()) {
            out.push_back({cur, cur_line});
            cur.clear();
        }
    };
    bool comment = false;
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            comment = false;
            ++line;
            continue;
        }
        if (comment) continue;
        if (ch == '#') {
            flush();
            comment = true;
            continue;
        }
        bool space = std::isspace(static_cast<unsigned char>(ch)) != 0;
        if (soft_punct && (ch == '[' || ch == ']' || ch == ',')) space = true;
        if (space) {
            flush();
        } else {
            if (cur.empty()) cur_line = line;
            cur += ch;
        }
    }
    flush();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_section(const std::string& t) { return t.size() > 1 && t.back() == ':'; }

cplx parse_complex(const Token& tok) {
    auto comma = tok.text.find(',');
    try {
        if (comma == std::string::npos) return cplx(std::stod(tok.text), 0.0);
        return cplx(std::stod(tok.text.substr(0, comma)), std::stod(tok.text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad complex entry '" + tok.text + "'", tok.line);
    }
}

int parse_int(const Token& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok.text + "'", tok.line);
    }
}

} // namespace

ParsedGroupoid parse_groupoid_text(const std::string& text) {
    std::vector<Token> tokens = tokenize(text, true);
    GroupoidSpec spec;
    std::map<std::pair<std::string, std::string>, int> cocycle_entries;
    int cocycle_order = 0;
    bool has_cocycle = false;

    size_t i = 0;
    while (i < tokens.size()) {
        const Token& head = tokens[i];
        if (!is_section(head.text))
            throw ParseError("expected a section header, got '" + head.text + "'", head.line);
        std::string section = head.text.substr(0, head.text.size() - 1);
        ++i;
        size_t end = i;
        while (end < tokens.size() && !is_section(tokens[end].text)) ++end;

        auto body = [&](size_t j) -> const Token& { return tokens[j]; };
        if (section == "elements") {
            for (size_t j = i; j < end; ++j) spec.elements.push_back(body(j).text);
        } else if (section == "units") {
            for (size_t j = i; j < end; ++j) spec.units.push_back(body(j).text);
        } else if (section == "range" || section == "source") {
            for (size_t j = i; j < end; ++j) {
                auto eq = body(j).text.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected 'element=unit', got '" + body(j).text + "'",
                                     body(j).line);
                auto& dst = section == "range" ? spec.range : spec.source;
                dst[body(j).text.substr(0, eq)] = body(j).text.substr(eq + 1);
            }
        } else if (section == "compose") {
            if ((end - i) % 3 != 0)
                throw ParseError("compose section must hold triples", head.line);
            for (size_t j = i; j < end; j += 3)
                spec.compose.push_back({body(j).text, body(j + 1).text, body(j + 2).text});
        } else if (section == "cocycle") {
            has_cocycle = true;
            size_t j = i;
            if (j >= end || body(j).text != "order")
                throw ParseError("cocycle section must start with 'order m'", head.line);
            ++j;
            if (j >= end) throw ParseError("missing cocycle order", head.line);
            cocycle_order = parse_int(body(j));
            ++j;
            if ((end - j) % 3 != 0)
                throw ParseError("cocycle entries must be triples 'a b k'", head.line);
            for (; j < end; j += 3)
                cocycle_entries[{body(j).text, body(j + 1).text}] = parse_int(body(j + 2));
        } else {
            throw ParseError("unknown section '" + section + "'", head.line);
        }
        i = end;
    }

    ParsedGroupoid out{build_groupoid(spec), std::nullopt};
    if (has_cocycle)
        out.cocycle = build_cocycle(out.groupoid, cocycle_order, cocycle_entries);
    return out;
}

ParsedGroupoid parse_groupoid_file(const std::string& path) {
    return parse_groupoid_text(read_file(path));
}

std::string serialize_groupoid(const FiniteGroupoid& g, const Cocycle* cocycle) {
    std::ostringstream out;
    out << "elements:";
    for (int e = 0; e < g.size(); ++e) out << ' ' << g.id(e);
    out << "\nunits:";
    for (int u : g.units()) out << ' ' << g.id(u);
    out << "\nrange:";
    for (int e = 0; e < g.size(); ++e) out << ' ' << g.id(e) << '=' << g.id(g.range(e));
    out << "\nsource:";
    for (int e = 0; e < g.size(); ++e) out << ' ' << g.id(e) << '=' << g.id(g.source(e));
    out << "\ncompose:\n";
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (g.composable(a, b))
                out << "  " << g.id(a) << ' ' << g.id(b) << ' ' << g.id(g.compose(a, b)) << '\n';
    if (cocycle) {
        out << "cocycle:\n  order " << cocycle->order() << '\n';
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b)
                if (g.composable(a, b) && cocycle->exponent(a, b) != 0)
                    out << "  " << g.id(a) << ' ' << g.id(b) << ' ' << cocycle->exponent(a, b)
                        << '\n';
    }
    return out.str();
}

StarHom parse_hom_text(const std::string& text, const ContextPtr& ctx) {
    std::vector<Token> tokens = tokenize(text, false);
    int dim = 0;
    std::map<std::string, MatrixXcd> images;
    size_t i = 0;
    while (i < tokens.size()) {
        const Token& head = tokens[i];
        if (head.text == "dim:") {
            if (i + 1 >= tokens.size()) throw ParseError("missing dimension", head.line);
            dim = parse_int(tokens[i + 1]);
            if (dim <= 0) throw ParseError("dimension must be positive", head.line);
            i += 2;
        } else if (head.text == "map:") {
            if (dim == 0) throw ParseError("dim must come before map sections", head.line);
            if (i + 1 >= tokens.size()) throw ParseError("missing element after map:", head.line);
            std::string elem = tokens[i + 1].text;
            i += 2;
            if (i + static_cast<size_t>(dim) * dim > tokens.size())
                throw ParseError("matrix for '" + elem + "' is truncated", head.line);
            MatrixXcd m(dim, dim);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) m(r, c) = parse_complex(tokens[i++]);
            if (!images.emplace(elem, std::move(m)).second)
                throw ParseError("duplicate map for '" + elem + "'", head.line);
        } else {
            throw ParseError("unexpected token '" + head.text + "'", head.line);
        }
    }
    const auto& G = ctx->groupoid();
    std::vector<MatrixXcd> ordered(G.size());
    for (int e = 0; e < G.size(); ++e) {
        auto it = images.find(G.id(e));
        if (it == images.end())
            throw ParseError("no image given for element '" + G.id(e) + "'", 0);
        ordered[e] = it->second;
    }
    if (static_cast<int>(images.size()) != G.size())
        throw ParseError("hom file names elements outside the groupoid", 0);
    return build_hom(ctx, std::move(ordered));
}

StarHom parse_hom_file(const std::string& path, const ContextPtr& ctx) {
    return parse_hom_text(read_file(path), ctx);
}

StateProblem parse_state_text(const std::string& text) {
    std::vector<Token> tokens = tokenize(text, false);
    int dim = 0;
    std::string algebra_kind, subalgebra_kind;
    std::vector<MatrixXcd> algebra_basis, subalgebra_basis;
    MatrixXcd riesz;
    bool have_state = false;
    std::string* pending_kind = nullptr;
    std::vector<MatrixXcd>* pending_basis = nullptr;

    auto read_matrix = [&](size_t& i, int line) {
        if (dim == 0) throw ParseError("dim must come first", line);
        if (i + static_cast<size_t>(dim) * dim > tokens.size())
            throw ParseError("matrix block is truncated", line);
        MatrixXcd m(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) m(r, c) = parse_complex(tokens[i++]);
        return m;
    };

    size_t i = 0;
    while (i < tokens.size()) {
        const Token& head = tokens[i];
        if (head.text == "dim:") {
            if (i + 1 >= tokens.size()) throw ParseError("missing dimension", head.line);
            dim = parse_int(tokens[i + 1]);
            i += 2;
        } else if (head.text == "algebra:" || head.text == "subalgebra:") {
            bool is_sub = head.text == "subalgebra:";
            if (i + 1 >= tokens.size()) throw ParseError("missing algebra kind", head.line);
            std::string kind = tokens[i + 1].text;
            if (kind != "full" && kind != "diagonal" && kind != "scalars" && kind != "basis")
                throw ParseError("unknown algebra kind '" + kind + "'", tokens[i + 1].line);
            (is_sub ? subalgebra_kind : algebra_kind) = kind;
            pending_kind = is_sub ? &subalgebra_kind : &algebra_kind;
            pending_basis = is_sub ? &subalgebra_basis : &algebra_basis;
            i += 2;
        } else if (head.text == "matrix:") {
            if (pending_basis == nullptr || *pending_kind != "basis")
                throw ParseError("matrix block without a preceding 'basis' declaration",
                                 head.line);
            ++i;
            pending_basis->push_back(read_matrix(i, head.line));
        } else if (head.text == "state:") {
            ++i;
            riesz = read_matrix(i, head.line);
            have_state = true;
        } else {
            throw ParseError("unexpected token '" + head.text + "'", head.line);
        }
    }
    if (dim == 0) throw ParseError("missing dim", 0);
    if (algebra_kind.empty() || subalgebra_kind.empty())
        throw ParseError("both algebra and subalgebra must be declared", 0);
    if (!have_state) throw ParseError("missing state block", 0);

    auto build = [&](const std::string& kind, std::vector<MatrixXcd>& basis) -> AlgebraPtr {
        if (kind == "full") return full_matrix_algebra(dim);
        if (kind == "diagonal") return diagonal_algebra(dim);
        if (kind == "scalars") return scalar_algebra(dim);
        return make_algebra(dim, std::move(basis));
    };
    StateProblem out{build(algebra_kind, algebra_basis), build(subalgebra_kind, subalgebra_basis),
                     StateFunctional{}};
    out.phi = make_state(out.subalgebra, std::move(riesz));
    return out;
}

StateProblem parse_state_file(const std::string& path) {
    return parse_state_text(read_file(path));
}

bool Report::pass() const {
    for (const auto& [_, ok] : assertions)
        if (!ok) return false;
    return true;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest;
    j["seed"] = seed;
    j["tolerance"] = tolerance;
    j["findings"] = findings;
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& [name, ok] : assertions) checks[name] = ok;
    j["assertions"] = checks;
    j["pass"] = pass();
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (auto it = findings.begin(); it != findings.end(); ++it) {
        out << it.key() << ": ";
        if (it.value().is_string())
            out << it.value().get<std::string>();
        else
            out << it.value().dump();
        out << '\n';
    }
    for (const auto& [name, ok] : assertions)
        out << (ok ? "ok" : "FAIL") << " - " << name << '\n';
    out << (pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

} // namespace tga
