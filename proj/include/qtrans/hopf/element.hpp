#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"

namespace qtrans {

/// x = sum_i coeffs[i] e_i in a specific algebra.
struct Element {
    HopfPtr algebra;
    Tensor coeffs;
};

/// An element of H (x) H; coeffs has length n^2.
struct TwoTensor {
    HopfPtr algebra;
    Tensor coeffs;
};

/// A linear functional, stored as its values on the basis.
struct Functional {
    HopfPtr algebra;
    Tensor values;
};

Element make_element(const HopfPtr& h, Tensor coeffs);
Element basis_element(const HopfPtr& h, std::size_t i);
Element one(const HopfPtr& h);
Functional make_functional(const HopfPtr& h, Tensor values);
Functional counit_functional(const HopfPtr& h);

Element multiply(const Element& x, const Element& y);
TwoTensor comultiply(const Element& x);
Element apply_antipode(const Element& x);
Element apply_star(const Element& x);
Scalar apply(const Functional& f, const Element& x);

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator*(const Scalar& s, const Element& x);

/// f o S.
Functional compose_antipode(const Functional& f);
/// (f (x) g) o Delta.
Functional convolution(const Functional& f, const Functional& g);

}  // namespace qtrans
