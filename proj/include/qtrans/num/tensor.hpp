#pragma once

#include "qtrans/num/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace qtrans {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

using Shape = std::vector<std::size_t>;

/// Dense row-major tensor of scalars. The entry count always equals the
/// product of the extents (a rank-0 tensor holds one entry).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, Mode mode = Mode::Exact);
    Tensor(Shape shape, std::vector<Scalar> entries);

    static Tensor vector(std::size_t n, Mode mode = Mode::Exact) { return Tensor({n}, mode); }
    static Tensor matrix(std::size_t rows, std::size_t cols, Mode mode = Mode::Exact) {
        return Tensor({rows, cols}, mode);
    }
    static Tensor identity(std::size_t n, Mode mode = Mode::Exact);
    static Tensor from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
    static Tensor from_values(std::initializer_list<Scalar> values);
    /// e_i of length n.
    static Tensor unit_vector(std::size_t n, std::size_t i, Mode mode = Mode::Exact);

    std::size_t rank() const { return shape_.size(); }
    const Shape& shape() const { return shape_; }
    std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
    std::size_t size() const { return entries_.size(); }
    std::size_t rows() const { return shape_.at(0); }
    std::size_t cols() const { return shape_.at(1); }

    Scalar& operator[](std::size_t flat) { return entries_[flat]; }
    const Scalar& operator[](std::size_t flat) const { return entries_[flat]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * shape_[1] + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * shape_[1] + j]; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return entries_[(i * shape_[1] + j) * shape_[2] + k];
    }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return entries_[(i * shape_[1] + j) * shape_[2] + k];
    }
    const Scalar& at(std::span<const std::size_t> index) const;

    std::span<const Scalar> entries() const { return entries_; }
    std::span<Scalar> entries() { return entries_; }

    /// Float if any entry is float.
    Mode mode() const;
    Tensor to_mode(Mode m) const;

    /// Column j of a rank-2 tensor as a rank-1 tensor.
    Tensor column(std::size_t j) const;
    Tensor row(std::size_t i) const;
    void set_column(std::size_t j, const Tensor& v);

    Tensor reshaped(Shape shape) const;

private:
    Shape shape_;
    std::vector<Scalar> entries_;
};

std::size_t shape_volume(const Shape& shape);

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(const Scalar& s, const Tensor& a);

Tensor conj(const Tensor& a);
Tensor transpose(const Tensor& a);
/// Conjugate transpose of a rank-2 tensor.
Tensor adjoint(const Tensor& a);

double max_abs(const Tensor& a);
double frobenius_norm(const Tensor& a);
/// Exact tensors compare exactly; otherwise entrywise within tol.
bool approx_equal(const Tensor& a, const Tensor& b, double tol = kDefaultTolerance);

}  // namespace qtrans
