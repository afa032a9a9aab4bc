#include "qtrans/hopf/element.hpp"

#include "qtrans/num/linalg.hpp"

namespace qtrans {

namespace {

void same_algebra(const HopfPtr& a, const HopfPtr& b) {
    if (!a || !b || a != b) throw AlgebraMismatch("operands belong to different algebras");
}

}  // namespace

Element make_element(const HopfPtr& h, Tensor coeffs) {
    if (coeffs.rank() != 1 || coeffs.size() != h->dim()) throw ShapeMismatch("element: length must equal dim");
    return {h, std::move(coeffs)};
}

Element basis_element(const HopfPtr& h, std::size_t i) { return {h, h->basis_vector(i)}; }

Element one(const HopfPtr& h) { return {h, h->unit()}; }

Functional make_functional(const HopfPtr& h, Tensor values) {
    if (values.rank() != 1 || values.size() != h->dim()) throw ShapeMismatch("functional: length must equal dim");
    return {h, std::move(values)};
}

Functional counit_functional(const HopfPtr& h) { return {h, h->counit()}; }

Element multiply(const Element& x, const Element& y) {
    same_algebra(x.algebra, y.algebra);
    return {x.algebra, x.algebra->product(x.coeffs, y.coeffs)};
}

TwoTensor comultiply(const Element& x) { return {x.algebra, x.algebra->coproduct(x.coeffs)}; }

Element apply_antipode(const Element& x) { return {x.algebra, x.algebra->antipode_of(x.coeffs)}; }

Element apply_star(const Element& x) { return {x.algebra, x.algebra->star_of(x.coeffs)}; }

Scalar apply(const Functional& f, const Element& x) {
    same_algebra(f.algebra, x.algebra);
    return dot(f.values, x.coeffs);
}

Element operator+(const Element& x, const Element& y) {
    same_algebra(x.algebra, y.algebra);
    return {x.algebra, x.coeffs + y.coeffs};
}

Element operator-(const Element& x, const Element& y) {
    same_algebra(x.algebra, y.algebra);
    return {x.algebra, x.coeffs - y.coeffs};
}

Element operator*(const Scalar& s, const Element& x) { return {x.algebra, s * x.coeffs}; }

Functional compose_antipode(const Functional& f) {
    // (f o S)(e_i) = sum_k S(k,i) f(e_k)
    return {f.algebra, matmul(transpose(f.algebra->antipode()), f.values)};
}

Functional convolution(const Functional& f, const Functional& g) {
    same_algebra(f.algebra, g.algebra);
    const auto& h = *f.algebra;
    const std::size_t n = h.dim();
    Tensor v = Tensor::vector(n, h.mode());
    for (std::size_t i = 0; i < n; ++i) {
        const Tensor d = h.coproduct(h.basis_vector(i));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = d[a * n + b];
                if (c.is_exact() && c.is_zero()) continue;
                v[i] += c * f.values[a] * g.values[b];
            }
    }
    return {f.algebra, std::move(v)};
}

}  // namespace qtrans
