#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/groupoid.hpp"

namespace tga {

using cplx = std::complex<double>;

// A groupoid together with a choice of twist. The convolution algebra built
// on top is the function picture of the twist G x_sigma mu_m: products are
// twisted by the conjugate cocycle, which is exactly the algebra the twist's
// equivariant functions form. A fixed table of the m-th roots of unity is the
// single source of all complex phase values.
class Context {
public:
    Context(FiniteGroupoid g, Cocycle c);

    const FiniteGroupoid& groupoid() const { return groupoid_; }
    const Cocycle& cocycle() const { return cocycle_; }
    int order() const { return cocycle_.order(); }

    // exp(-2*pi*i*k/order); exact for quarter turns
    cplx phase(int k) const;

    // convolution twist of the pair (a,b): the conjugated cocycle value
    cplx twist(int a, int b) const { return phase(cocycle_.exponent(a, b)); }

    // value multiplying conj(f(g^{-1})) in the involution
    cplx involution_phase(int g) const;

private:
    FiniteGroupoid groupoid_;
    Cocycle cocycle_;
    std::vector<cplx> roots_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(FiniteGroupoid g, Cocycle c);
ContextPtr make_context(FiniteGroupoid g); // trivial twist

// An element of the twisted convolution algebra: a finitely supported complex
// coefficient map on the groupoid, stored densely in canonical element order.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    int size() const { return static_cast<int>(coeffs_.size()); }
    cplx operator[](int e) const { return coeffs_[e]; }
    cplx& operator[](int e) { return coeffs_[e]; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    AlgElem& operator+=(const AlgElem& other);
    AlgElem& operator-=(const AlgElem& other);
    AlgElem& operator*=(cplx scalar);

private:
    ContextPtr ctx_;
    std::vector<cplx> coeffs_;
};

AlgElem operator+(AlgElem a, const AlgElem& b);
AlgElem operator-(AlgElem a, const AlgElem& b);
AlgElem operator*(cplx scalar, AlgElem a);

// point mass at an element
AlgElem delta(const ContextPtr& ctx, int element);
AlgElem delta(const ContextPtr& ctx, const std::string& id);

// sum of point masses over the units: the multiplicative identity
AlgElem unit_element(const ContextPtr& ctx);

// twisted convolution product; throws ContextMismatch on different contexts
AlgElem convolve(const AlgElem& f, const AlgElem& g);
inline AlgElem operator*(const AlgElem& f, const AlgElem& g) { return convolve(f, g); }

// f^*(g) = conj(twist(g, g^{-1})) * conj(f(g^{-1}))
AlgElem involute(const AlgElem& f);

// image of a twist element (g, k): phase(k) * delta(g). These generators
// satisfy twist_delta(z.e) = conj(z) twist_delta(e) and
// twist_delta(e) * twist_delta(z) = twist_delta(e z).
AlgElem twist_delta(const ContextPtr& ctx, TwistElement e);

// coefficients zeroed off the subgroupoid; throws NotASubgroupoid when the
// subset was built against a different groupoid
AlgElem restrict_to(const AlgElem& f, const SubGroupoid& s);

double sup_norm(const AlgElem& f);

// the nonzero coefficients (g, f(g)) in canonical element order
std::vector<std::pair<int, cplx>> generator_decomposition(const AlgElem& f);

} // namespace tga
