#pragma once

#include "qtrans/num/tensor.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qtrans {

class CommutationFailure : public Error {
public:
    using Error::Error;
};

/// Axis a_axis of the first operand is summed against b_axis of the second.
struct AxisPair {
    std::size_t a_axis;
    std::size_t b_axis;
};

/// General tensor contraction. The result's axes are a's free axes in order,
/// followed by b's free axes in order.
Tensor contract(const Tensor& a, const Tensor& b, std::span<const AxisPair> pairs);
Tensor contract(const Tensor& a, const Tensor& b, std::initializer_list<AxisPair> pairs);

/// Matrix-matrix or matrix-vector product.
Tensor matmul(const Tensor& a, const Tensor& b);
/// sum_i x_i y_i (no conjugation).
Scalar dot(const Tensor& x, const Tensor& y);
/// sum_i conj(x_i) y_i.
Scalar inner(const Tensor& x, const Tensor& y);

struct SolveResult {
    std::optional<Tensor> solution;
    /// ||A x - b||_2 of the returned (or best least-squares) solution.
    double residual = 0.0;
    explicit operator bool() const { return solution.has_value(); }
};

/// Least-residual solution of A x = b. Exact inputs are solved exactly and
/// fail only on inconsistency; float inputs fail when the residual exceeds
/// tol * (1 + ||b||).
SolveResult solve_linear(const Tensor& A, const Tensor& b, double tol = kDefaultTolerance);

struct EchelonForm {
    Tensor reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Exact inputs are reduced exactly; float inputs
/// use partial pivoting and treat |x| <= tol * max(1, max|A|) as zero.
EchelonForm rref(const Tensor& A, double tol = kDefaultTolerance);
std::size_t matrix_rank(const Tensor& A, double tol = kDefaultTolerance);

/// Basis of {x : A x = 0}: orthonormal (float) or echelon (exact).
std::vector<Tensor> nullspace(const Tensor& A, double tol = kDefaultTolerance);

std::optional<Tensor> inverse(const Tensor& A, double tol = kDefaultTolerance);

/// A subspace of C^n grown one vector at a time, kept in reduced row
/// echelon form so membership tests are a single reduction pass.
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t n, double tol = kDefaultTolerance) : n_(n), tol_(tol) {}

    /// Adds v; returns false if v already lies in the span.
    bool add(const Tensor& v);
    bool contains(const Tensor& v) const;
    std::size_t dim() const { return rows_.size(); }
    /// The span's basis as the rows of a dim x n matrix.
    Tensor basis_matrix() const;

private:
    Tensor reduce(const Tensor& v) const;

    std::size_t n_;
    double tol_;
    std::vector<Tensor> rows_;
    std::vector<std::size_t> pivots_;
};

/// Common eigenbasis of pairwise-commuting diagonalizable matrices. A seeded
/// random real combination is diagonalized and each degenerate eigenspace is
/// split again by a fresh combination of the restricted operators. Vectors
/// are unit-norm, phase-fixed so the first maximal-modulus component is real
/// positive, and ordered lexicographically by their eigenvalue tuples.
std::vector<Tensor> simultaneous_eigenbasis(std::span<const Tensor> ms, std::uint64_t seed = 0,
                                            double tol = kDefaultTolerance);

/// The eigenvalue of each m in ms on the (assumed common) eigenvector v.
std::vector<Scalar> joint_eigenvalues(std::span<const Tensor> ms, const Tensor& v);

/// Ascending eigenvalues of a Hermitian matrix (float).
std::vector<double> hermitian_eigenvalues(const Tensor& A);

/// Hermitian positive-definiteness: exact inputs by exact LDL* pivots,
/// float inputs by lambda_min > rel_tol * lambda_max.
bool is_positive_definite(const Tensor& A, double rel_tol = kDefaultTolerance);

/// A^p for a Hermitian positive-definite matrix (float).
Tensor hermitian_power(const Tensor& A, double p);

}  // namespace qtrans
