#include "qtrans/num/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace qtrans {

std::size_t shape_volume(const Shape& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

Tensor::Tensor(Shape shape, Mode mode) : shape_(std::move(shape)) {
    entries_.assign(shape_volume(shape_), mode == Mode::Float ? Scalar(0.0) : Scalar());
}

Tensor::Tensor(Shape shape, std::vector<Scalar> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != shape_volume(shape_))
        throw ShapeMismatch("Tensor: entry count does not match shape");
}

Tensor Tensor::identity(std::size_t n, Mode mode) {
    Tensor t = matrix(n, n, mode);
    for (std::size_t i = 0; i < n; ++i) t(i, i) = mode == Mode::Float ? Scalar(1.0) : Scalar(1);
    return t;
}

Tensor Tensor::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Scalar> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeMismatch("Tensor::from_rows: ragged rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Tensor({r, c}, std::move(entries));
}

Tensor Tensor::from_values(std::initializer_list<Scalar> values) {
    return Tensor({values.size()}, std::vector<Scalar>(values));
}

Tensor Tensor::unit_vector(std::size_t n, std::size_t i, Mode mode) {
    Tensor t = vector(n, mode);
    t[i] = mode == Mode::Float ? Scalar(1.0) : Scalar(1);
    return t;
}

const Scalar& Tensor::at(std::span<const std::size_t> index) const {
    if (index.size() != shape_.size()) throw ShapeMismatch("Tensor::at: wrong index rank");
    std::size_t flat = 0;
    for (std::size_t a = 0; a < index.size(); ++a) {
        if (index[a] >= shape_[a]) throw ShapeMismatch("Tensor::at: index out of range");
        flat = flat * shape_[a] + index[a];
    }
    return entries_[flat];
}

Mode Tensor::mode() const {
    for (const auto& e : entries_)
        if (!e.is_exact()) return Mode::Float;
    return Mode::Exact;
}

Tensor Tensor::to_mode(Mode m) const {
    Tensor t = *this;
    for (auto& e : t.entries_) e = e.to_mode(m);
    return t;
}

Tensor Tensor::column(std::size_t j) const {
    Tensor v = vector(rows());
    for (std::size_t i = 0; i < rows(); ++i) v[i] = (*this)(i, j);
    return v;
}

Tensor Tensor::row(std::size_t i) const {
    Tensor v = vector(cols());
    for (std::size_t j = 0; j < cols(); ++j) v[j] = (*this)(i, j);
    return v;
}

void Tensor::set_column(std::size_t j, const Tensor& v) {
    if (v.size() != rows()) throw ShapeMismatch("Tensor::set_column: length mismatch");
    for (std::size_t i = 0; i < rows(); ++i) (*this)(i, j) = v[i];
}

Tensor Tensor::reshaped(Shape shape) const {
    return Tensor(std::move(shape), entries_);
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    if (a.shape() != b.shape()) throw ShapeMismatch("Tensor +: shape mismatch");
    Tensor r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    if (a.shape() != b.shape()) throw ShapeMismatch("Tensor -: shape mismatch");
    Tensor r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Tensor operator*(const Scalar& s, const Tensor& a) {
    Tensor r = a;
    for (auto& e : r.entries()) e *= s;
    return r;
}

Tensor conj(const Tensor& a) {
    Tensor r = a;
    for (auto& e : r.entries()) e = e.conj();
    return r;
}

Tensor transpose(const Tensor& a) {
    if (a.rank() != 2) throw ShapeMismatch("transpose: rank-2 tensor expected");
    Tensor r = Tensor::matrix(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

Tensor adjoint(const Tensor& a) { return conj(transpose(a)); }

double max_abs(const Tensor& a) {
    double m = 0;
    for (const auto& e : a.entries()) m = std::max(m, e.abs());
    return m;
}

double frobenius_norm(const Tensor& a) {
    double s = 0;
    for (const auto& e : a.entries()) s += std::norm(e.to_complex());
    return std::sqrt(s);
}

bool approx_equal(const Tensor& a, const Tensor& b, double tol) {
    if (a.shape() != b.shape()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!approx_equal(a[i], b[i], tol)) return false;
    return true;
}

}  // namespace qtrans
