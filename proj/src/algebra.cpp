#include "tga/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tga {

Context::Context(FiniteGroupoid g, Cocycle c)
    : groupoid_(std::move(g)), cocycle_(std::move(c)) {
    if (cocycle_.size() != groupoid_.size())
        throw ContextMismatch("cocycle was built on a groupoid of different size");
    const int m = cocycle_.order();
    roots_.resize(m);
    for (int k = 0; k < m; ++k) {
        if ((4 * k) % m == 0) {
            switch ((4 * k / m) % 4) {
                case 0: roots_[k] = {1.0, 0.0}; break;
                case 1: roots_[k] = {0.0, -1.0}; break;
                case 2: roots_[k] = {-1.0, 0.0}; break;
                case 3: roots_[k] = {0.0, 1.0}; break;
            }
        } else {
            double angle = -2.0 * std::numbers::pi * k / m;
            roots_[k] = {std::cos(angle), std::sin(angle)};
        }
    }
}

cplx Context::phase(int k) const {
    const int m = cocycle_.order();
    int r = k % m;
    if (r < 0) r += m;
    return roots_[r];
}

cplx Context::involution_phase(int g) const {
    return phase(-cocycle_.exponent(g, groupoid_.inverse(g)));
}

ContextPtr make_context(FiniteGroupoid g, Cocycle c) {
    return std::make_shared<const Context>(std::move(g), std::move(c));
}

ContextPtr make_context(FiniteGroupoid g) {
    Cocycle c = trivial_cocycle(g);
    return std::make_shared<const Context>(std::move(g), std::move(c));
}

AlgElem::AlgElem(ContextPtr ctx) : ctx_(std::move(ctx)) {
    coeffs_.assign(ctx_->groupoid().size(), cplx{0.0, 0.0});
}

namespace {

void require_same_context(const AlgElem& a, const AlgElem& b) {
    if (a.context() != b.context())
        throw ContextMismatch("operands live in different algebra contexts");
}

} // namespace

AlgElem& AlgElem::operator+=(const AlgElem& other) {
    require_same_context(*this, other);
    for (int i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& other) {
    require_same_context(*this, other);
    for (int i = 0; i < size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

AlgElem& AlgElem::operator*=(cplx scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
AlgElem operator*(cplx scalar, AlgElem a) { return a *= scalar; }

AlgElem delta(const ContextPtr& ctx, int element) {
    if (element < 0 || element >= ctx->groupoid().size())
        throw UnknownElement("delta: element index out of range");
    AlgElem f(ctx);
    f[element] = 1.0;
    return f;
}

AlgElem delta(const ContextPtr& ctx, const std::string& id) {
    return delta(ctx, ctx->groupoid().index_of(id));
}

AlgElem unit_element(const ContextPtr& ctx) {
    AlgElem f(ctx);
    for (int u : ctx->groupoid().units()) f[u] = 1.0;
    return f;
}

AlgElem convolve(const AlgElem& f, const AlgElem& g) {
    require_same_context(f, g);
    const auto& ctx = *f.context();
    const auto& G = ctx.groupoid();
    AlgElem out(f.context());
    // (fg)(c) = sum over eta in the source fibre of c of
    //           twist(c eta^{-1}, eta) f(c eta^{-1}) g(eta)
    for (int c = 0; c < G.size(); ++c) {
        cplx acc{0.0, 0.0};
        for (int eta : G.source_fiber(G.source(c))) {
            if (g[eta] == cplx{0.0, 0.0}) continue;
            int a = G.compose(c, G.inverse(eta));
            if (f[a] == cplx{0.0, 0.0}) continue;
            acc += ctx.twist(a, eta) * f[a] * g[eta];
        }
        out[c] = acc;
    }
    return out;
}

AlgElem involute(const AlgElem& f) {
    const auto& ctx = *f.context();
    const auto& G = ctx.groupoid();
    AlgElem out(f.context());
    for (int c = 0; c < G.size(); ++c)
        out[c] = ctx.involution_phase(c) * std::conj(f[G.inverse(c)]);
    return out;
}

AlgElem twist_delta(const ContextPtr& ctx, TwistElement e) {
    AlgElem f = delta(ctx, e.base);
    f *= ctx->phase(e.phase);
    return f;
}

AlgElem restrict_to(const AlgElem& f, const SubGroupoid& s) {
    if (s.parent != &f.context()->groupoid())
        throw NotASubgroupoid("restriction target is not a subgroupoid of this context");
    AlgElem out(f.context());
    for (int e : s.members) out[e] = f[e];
    return out;
}

double sup_norm(const AlgElem& f) {
    double best = 0.0;
    for (int i = 0; i < f.size(); ++i) best = std::max(best, std::abs(f[i]));
    return best;
}

std::vector<std::pair<int, cplx>> generator_decomposition(const AlgElem& f) {
    std::vector<std::pair<int, cplx>> out;
    for (int i = 0; i < f.size(); ++i)
        if (f[i] != cplx{0.0, 0.0}) out.emplace_back(i, f[i]);
    return out;
}

} // namespace tga
