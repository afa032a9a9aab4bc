#pragma once

#include "qtrans/num/tensor.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qtrans {

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class AxiomFailure : public Error {
public:
    using Error::Error;
};

/// A finite-dimensional Hopf *-algebra given by structure constants in a
/// fixed basis e_0..e_{n-1}.
///
/// Conventions (all coefficient vectors are columns):
///   e_i e_j   = sum_k mult(i,j,k) e_k
///   1         = sum_k unit[k] e_k
///   Delta e_i = sum_{j,k} comult(i,j,k) e_j (x) e_k
///   eps(e_i)  = counit[i]
///   S(e_j)    = sum_i antipode(i,j) e_i
///   e_j^*     = sum_i star(i,j) e_i, extended antilinearly:
///               (sum_j c_j e_j)^* = sum_j conj(c_j) e_j^*
///
/// Elements of H (x) H are flat vectors of length n^2 with e_j (x) e_k at
/// index j*n + k.
///
/// Instances are immutable; the constructor only checks shapes. Use
/// verify_axioms() to certify the Hopf *-algebra laws.
class FiniteHopfStar {
public:
    FiniteHopfStar(std::vector<std::string> basis_names, Tensor mult, Tensor unit, Tensor comult,
                   Tensor counit, Tensor antipode, Tensor star);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Tensor& mult() const { return mult_; }
    const Tensor& unit() const { return unit_; }
    const Tensor& comult() const { return comult_; }
    const Tensor& counit() const { return counit_; }
    const Tensor& antipode() const { return antipode_; }
    const Tensor& star() const { return star_; }

    /// Exact iff every structure constant is exact.
    Mode mode() const { return mode_; }
    FiniteHopfStar to_mode(Mode m) const;

    Tensor basis_vector(std::size_t i) const;
    Tensor product(const Tensor& x, const Tensor& y) const;
    Tensor coproduct(const Tensor& x) const;
    /// Product in the algebra H (x) H.
    Tensor tensor_product(const Tensor& X, const Tensor& Y) const;
    /// (f (x) g) for elements f, g of H, as an element of H (x) H.
    Tensor outer(const Tensor& x, const Tensor& y) const;
    Tensor antipode_of(const Tensor& x) const;
    Tensor star_of(const Tensor& x) const;
    /// (* (x) *) on H (x) H.
    Tensor star2_of(const Tensor& X) const;
    Scalar counit_of(const Tensor& x) const;

    /// Matrix of y -> x y.
    Tensor left_multiplication(const Tensor& x) const;
    /// Matrix of y -> y x.
    Tensor right_multiplication(const Tensor& x) const;

private:
    struct Term {
        std::size_t a;
        std::size_t b;
        Scalar c;
    };

    std::vector<std::string> names_;
    Tensor mult_, unit_, comult_, counit_, antipode_, star_;
    Mode mode_;
    // mult_terms_[i*n+j] lists (k, -, M[i,j,k]); comult_terms_[i] lists (j, k, D[i,j,k]).
    std::vector<std::vector<Term>> mult_terms_;
    std::vector<std::vector<Term>> comult_terms_;
};

using HopfPtr = std::shared_ptr<const FiniteHopfStar>;

inline HopfPtr share(FiniteHopfStar h) { return std::make_shared<const FiniteHopfStar>(std::move(h)); }

}  // namespace qtrans
