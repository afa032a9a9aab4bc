#pragma once

#include "qtrans/num/tensor.hpp"

#include <Eigen/Dense>

namespace qtrans {

inline Eigen::MatrixXcd to_eigen(const Tensor& t) {
    if (t.rank() == 1) {
        Eigen::MatrixXcd m(t.size(), 1);
        for (std::size_t i = 0; i < t.size(); ++i) m(i, 0) = t[i].to_complex();
        return m;
    }
    if (t.rank() != 2) throw ShapeMismatch("to_eigen: rank-1 or rank-2 tensor expected");
    Eigen::MatrixXcd m(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) m(i, j) = t(i, j).to_complex();
    return m;
}

inline Tensor matrix_from_eigen(const Eigen::MatrixXcd& m) {
    Tensor t = Tensor::matrix(m.rows(), m.cols(), Mode::Float);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) t(i, j) = Scalar(m(i, j));
    return t;
}

inline Tensor vector_from_eigen(const Eigen::VectorXcd& v) {
    Tensor t = Tensor::vector(v.size(), Mode::Float);
    for (Eigen::Index i = 0; i < v.size(); ++i) t[i] = Scalar(v(i));
    return t;
}

}  // namespace qtrans
