#include "qtrans/num/linalg.hpp"

#include "qtrans/num/eigen_bridge.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace qtrans {

namespace {

bool exact_zero(const Scalar& s) { return s.is_exact() && s.is_zero(); }

Shape strides_of(const Shape& shape) {
    Shape s(shape.size(), 1);
    for (std::size_t a = shape.size(); a-- > 1;) s[a - 1] = s[a] * shape[a];
    return s;
}

// Advance a mixed-radix counter; false once it wraps around.
bool advance(std::vector<std::size_t>& idx, const Shape& extents) {
    for (std::size_t a = idx.size(); a-- > 0;) {
        if (++idx[a] < extents[a]) return true;
        idx[a] = 0;
    }
    return false;
}

}  // namespace

Tensor contract(const Tensor& a, const Tensor& b, std::span<const AxisPair> pairs) {
    std::vector<bool> a_used(a.rank(), false), b_used(b.rank(), false);
    Shape summed;
    for (const auto& p : pairs) {
        if (p.a_axis >= a.rank() || p.b_axis >= b.rank())
            throw ShapeMismatch("contract: axis out of range");
        if (a_used[p.a_axis] || b_used[p.b_axis]) throw ShapeMismatch("contract: axis paired twice");
        if (a.extent(p.a_axis) != b.extent(p.b_axis))
            throw ShapeMismatch("contract: paired axes have different extents");
        a_used[p.a_axis] = b_used[p.b_axis] = true;
        summed.push_back(a.extent(p.a_axis));
    }
    std::vector<std::size_t> a_free, b_free;
    Shape out_shape;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!a_used[i]) {
            a_free.push_back(i);
            out_shape.push_back(a.extent(i));
        }
    for (std::size_t i = 0; i < b.rank(); ++i)
        if (!b_used[i]) {
            b_free.push_back(i);
            out_shape.push_back(b.extent(i));
        }

    const Shape as = strides_of(a.shape()), bs = strides_of(b.shape());
    const bool promote = a.mode() == Mode::Float || b.mode() == Mode::Float;
    Tensor out(out_shape, promote ? Mode::Float : Mode::Exact);
    if (out.size() == 0) return out;

    std::vector<std::size_t> oi(out_shape.size(), 0);
    std::size_t flat = 0;
    do {
        std::size_t a_base = 0, b_base = 0;
        for (std::size_t k = 0; k < a_free.size(); ++k) a_base += oi[k] * as[a_free[k]];
        for (std::size_t k = 0; k < b_free.size(); ++k) b_base += oi[a_free.size() + k] * bs[b_free[k]];
        Scalar acc = promote ? Scalar(0.0) : Scalar();
        std::vector<std::size_t> si(summed.size(), 0);
        bool any_sum = std::all_of(summed.begin(), summed.end(), [](std::size_t e) { return e > 0; });
        if (any_sum) do {
                std::size_t ai = a_base, bi = b_base;
                for (std::size_t k = 0; k < pairs.size(); ++k) {
                    ai += si[k] * as[pairs[k].a_axis];
                    bi += si[k] * bs[pairs[k].b_axis];
                }
                if (!exact_zero(a[ai]) && !exact_zero(b[bi])) acc += a[ai] * b[bi];
            } while (advance(si, summed));
        out[flat++] = acc;
    } while (advance(oi, out_shape));
    return out;
}

Tensor contract(const Tensor& a, const Tensor& b, std::initializer_list<AxisPair> pairs) {
    return contract(a, b, std::span<const AxisPair>(pairs.begin(), pairs.size()));
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || (b.rank() != 1 && b.rank() != 2)) throw ShapeMismatch("matmul: bad ranks");
    if (a.cols() != b.extent(0)) throw ShapeMismatch("matmul: inner dimensions differ");
    const bool promote = a.mode() == Mode::Float || b.mode() == Mode::Float;
    const Mode m = promote ? Mode::Float : Mode::Exact;
    const std::size_t bc = b.rank() == 1 ? 1 : b.cols();
    Tensor out = b.rank() == 1 ? Tensor::vector(a.rows(), m) : Tensor::matrix(a.rows(), bc, m);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (exact_zero(aik)) continue;
            for (std::size_t j = 0; j < bc; ++j) {
                const Scalar& bkj = b[k * bc + j];
                if (exact_zero(bkj)) continue;
                out[i * bc + j] += aik * bkj;
            }
        }
    return out;
}

Scalar dot(const Tensor& x, const Tensor& y) {
    if (x.size() != y.size()) throw ShapeMismatch("dot: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!exact_zero(x[i]) && !exact_zero(y[i])) s += x[i] * y[i];
    return s;
}

Scalar inner(const Tensor& x, const Tensor& y) {
    if (x.size() != y.size()) throw ShapeMismatch("inner: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!exact_zero(x[i]) && !exact_zero(y[i])) s += x[i].conj() * y[i];
    return s;
}

EchelonForm rref(const Tensor& A, double tol) {
    if (A.rank() != 2) throw ShapeMismatch("rref: rank-2 tensor expected");
    EchelonForm ef{A, {}};
    Tensor& R = ef.reduced;
    const bool exact = A.mode() == Mode::Exact;
    const double thr = tol * std::max(1.0, max_abs(A));
    const std::size_t m = R.rows(), n = R.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = m;
        if (exact) {
            for (std::size_t i = row; i < m; ++i)
                if (!R(i, col).is_zero()) {
                    piv = i;
                    break;
                }
        } else {
            double best = thr;
            for (std::size_t i = row; i < m; ++i) {
                double v = R(i, col).abs();
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
        }
        if (piv == m) {
            if (!exact)
                for (std::size_t i = row; i < m; ++i) R(i, col) = Scalar(0.0);
            continue;
        }
        if (piv != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(R(piv, j), R(row, j));
        const Scalar inv = (exact ? Scalar(1) : Scalar(1.0)) / R(row, col);
        for (std::size_t j = col; j < n; ++j)
            if (!exact_zero(R(row, j))) R(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            const Scalar f = R(i, col);
            if (exact_zero(f) || (!exact && f.abs() == 0.0)) continue;
            for (std::size_t j = col; j < n; ++j)
                if (!exact_zero(R(row, j))) R(i, j) -= f * R(row, j);
            if (!exact) R(i, col) = Scalar(0.0);
        }
        ef.pivots.push_back(col);
        ++row;
    }
    return ef;
}

std::size_t matrix_rank(const Tensor& A, double tol) {
    if (A.mode() == Mode::Exact) return rref(A, tol).pivots.size();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(A));
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * (1.0 + smax)) ++r;
    return r;
}

std::vector<Tensor> nullspace(const Tensor& A, double tol) {
    if (A.rank() != 2) throw ShapeMismatch("nullspace: rank-2 tensor expected");
    const std::size_t n = A.cols();
    std::vector<Tensor> basis;
    if (A.mode() == Mode::Exact) {
        const auto ef = rref(A, tol);
        std::vector<bool> is_pivot(n, false);
        for (auto p : ef.pivots) is_pivot[p] = true;
        for (std::size_t f = 0; f < n; ++f) {
            if (is_pivot[f]) continue;
            Tensor x = Tensor::vector(n);
            x[f] = Scalar(1);
            for (std::size_t t = 0; t < ef.pivots.size(); ++t) x[ef.pivots[t]] = -ef.reduced(t, f);
            basis.push_back(std::move(x));
        }
        return basis;
    }
    if (A.rows() == 0) {
        for (std::size_t i = 0; i < n; ++i) basis.push_back(Tensor::unit_vector(n, i, Mode::Float));
        return basis;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(A), Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    const Eigen::MatrixXcd& V = svd.matrixV();
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
        const double sj = j < s.size() ? s(j) : 0.0;
        if (sj <= tol * (1.0 + smax)) basis.push_back(vector_from_eigen(V.col(j)));
    }
    return basis;
}

SolveResult solve_linear(const Tensor& A, const Tensor& b, double tol) {
    if (A.rank() != 2 || b.rank() != 1) throw ShapeMismatch("solve_linear: expected matrix and vector");
    if (A.rows() != b.size()) throw ShapeMismatch("solve_linear: row count differs from rhs length");
    const std::size_t m = A.rows(), n = A.cols();
    if (A.mode() == Mode::Exact && b.mode() == Mode::Exact) {
        Tensor aug = Tensor::matrix(m, n + 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
            aug(i, n) = b[i];
        }
        const auto ef = rref(aug, tol);
        if (!ef.pivots.empty() && ef.pivots.back() == n) {
            // Inconsistent; report the float least-squares residual.
            return {std::nullopt, solve_linear(A.to_mode(Mode::Float), b.to_mode(Mode::Float), tol).residual};
        }
        Tensor x = Tensor::vector(n);
        for (std::size_t t = 0; t < ef.pivots.size(); ++t) x[ef.pivots[t]] = ef.reduced(t, n);
        return {std::move(x), 0.0};
    }
    const Eigen::MatrixXcd Ae = to_eigen(A);
    const Eigen::VectorXcd be = to_eigen(b).col(0);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(Ae);
    cod.setThreshold(tol);
    const Eigen::VectorXcd x = n ? Eigen::VectorXcd(cod.solve(be)) : Eigen::VectorXcd(0);
    const double residual = n ? (Ae * x - be).norm() : be.norm();
    if (residual > tol * (1.0 + be.norm())) return {std::nullopt, residual};
    return {vector_from_eigen(x), residual};
}

std::optional<Tensor> inverse(const Tensor& A, double tol) {
    if (A.rank() != 2 || A.rows() != A.cols()) throw ShapeMismatch("inverse: square matrix expected");
    const std::size_t n = A.rows();
    if (A.mode() == Mode::Exact) {
        Tensor aug = Tensor::matrix(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
            aug(i, n + i) = Scalar(1);
        }
        const auto ef = rref(aug, tol);
        if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
        Tensor inv = Tensor::matrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
        return inv;
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(to_eigen(A));
    lu.setThreshold(tol);
    if (!lu.isInvertible()) return std::nullopt;
    return matrix_from_eigen(lu.inverse());
}

Tensor IncrementalSpan::reduce(const Tensor& v) const {
    if (v.size() != n_) throw ShapeMismatch("IncrementalSpan: length mismatch");
    Tensor r = v;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const Scalar f = r[pivots_[t]];
        if (exact_zero(f)) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!exact_zero(rows_[t][j])) r[j] -= f * rows_[t][j];
    }
    return r;
}

bool IncrementalSpan::contains(const Tensor& v) const {
    const Tensor r = reduce(v);
    if (r.mode() == Mode::Exact) {
        for (const auto& e : r.entries())
            if (!e.is_zero()) return false;
        return true;
    }
    return max_abs(r) <= tol_ * std::max(1.0, max_abs(v));
}

bool IncrementalSpan::add(const Tensor& v) {
    Tensor r = reduce(v);
    const bool exact = r.mode() == Mode::Exact;
    std::size_t piv = n_;
    if (exact) {
        for (std::size_t j = 0; j < n_; ++j)
            if (!r[j].is_zero()) {
                piv = j;
                break;
            }
    } else {
        double best = tol_ * std::max(1.0, max_abs(v));
        for (std::size_t j = 0; j < n_; ++j)
            if (r[j].abs() > best) {
                best = r[j].abs();
                piv = j;
            }
    }
    if (piv == n_) return false;
    const Scalar inv = (exact ? Scalar(1) : Scalar(1.0)) / r[piv];
    for (auto& e : r.entries()) e *= inv;
    for (auto& row : rows_) {
        const Scalar f = row[piv];
        if (exact_zero(f)) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!exact_zero(r[j])) row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

Tensor IncrementalSpan::basis_matrix() const {
    Tensor m = Tensor::matrix(rows_.size(), n_);
    for (std::size_t t = 0; t < rows_.size(); ++t)
        for (std::size_t j = 0; j < n_; ++j) m(t, j) = rows_[t][j];
    return m;
}

namespace {

using Cmat = Eigen::MatrixXcd;

Eigen::VectorXcd fix_phase(Eigen::VectorXcd v) {
    v.normalize();
    const double mx = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) >= mx * (1.0 - 1e-8)) {
            v *= std::conj(v(i)) / std::abs(v(i));
            v(i) = std::abs(v(i));
            break;
        }
    return v;
}

bool is_scalar_on(const Cmat& R, double tol) {
    const std::complex<double> c = R.trace() / static_cast<double>(R.rows());
    return (R - c * Cmat::Identity(R.rows(), R.cols())).norm() <= tol * (1.0 + R.norm());
}

// Columns of V span a subspace invariant under every matrix in ms.
void split_common(const std::vector<Cmat>& ms, const Cmat& V, std::mt19937_64& rng, double tol,
                  std::vector<Eigen::VectorXcd>& out, int depth) {
    const Eigen::Index k = V.cols();
    if (k == 1) {
        out.push_back(V.col(0));
        return;
    }
    std::vector<Cmat> restricted;
    bool all_scalar = true;
    for (const auto& m : ms) {
        restricted.push_back(V.adjoint() * m * V);
        all_scalar = all_scalar && is_scalar_on(restricted.back(), 1e-7);
    }
    if (all_scalar || depth > 32) {
        for (Eigen::Index j = 0; j < k; ++j) out.push_back(V.col(j));
        return;
    }
    std::uniform_real_distribution<double> coef(1.0, 2.0);
    Cmat C = Cmat::Zero(k, k);
    for (const auto& r : restricted) C += coef(rng) * r;

    Eigen::ComplexEigenSolver<Cmat> es(C, false);
    std::vector<std::complex<double>> evs(es.eigenvalues().data(), es.eigenvalues().data() + k);
    std::sort(evs.begin(), evs.end(), [](auto a, auto b) {
        return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag());
    });
    const double cluster_tol = 1e-6 * (1.0 + C.norm());
    std::vector<std::pair<std::complex<double>, int>> clusters;
    std::vector<bool> used(k, false);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (used[i]) continue;
        std::complex<double> sum = 0;
        int count = 0;
        for (Eigen::Index j = i; j < k; ++j)
            if (!used[j] && std::abs(evs[j] - evs[i]) <= cluster_tol) {
                used[j] = true;
                sum += evs[j];
                ++count;
            }
        clusters.emplace_back(sum / static_cast<double>(count), count);
    }
    if (clusters.size() == 1) {
        // Unlucky combination; draw another.
        split_common(ms, V, rng, tol, out, depth + 1);
        return;
    }
    for (const auto& [mu, count] : clusters) {
        Eigen::JacobiSVD<Cmat> svd(C - mu * Cmat::Identity(k, k), Eigen::ComputeFullV);
        const Cmat W = V * svd.matrixV().rightCols(count);
        Eigen::HouseholderQR<Cmat> qr(W);
        const Cmat Q = qr.householderQ() * Cmat::Identity(W.rows(), count);
        split_common(ms, Q, rng, tol, out, depth + 1);
    }
}

}  // namespace

std::vector<Tensor> simultaneous_eigenbasis(std::span<const Tensor> ms, std::uint64_t seed, double tol) {
    if (ms.empty()) throw ShapeMismatch("simultaneous_eigenbasis: no matrices given");
    const std::size_t n = ms[0].rows();
    std::vector<Cmat> em;
    for (const auto& m : ms) {
        if (m.rank() != 2 || m.rows() != n || m.cols() != n)
            throw ShapeMismatch("simultaneous_eigenbasis: square matrices of equal size expected");
        em.push_back(to_eigen(m));
    }
    for (std::size_t i = 0; i < em.size(); ++i)
        for (std::size_t j = i + 1; j < em.size(); ++j) {
            const double c = (em[i] * em[j] - em[j] * em[i]).norm();
            if (c > tol * (1.0 + em[i].norm() * em[j].norm()))
                throw CommutationFailure("simultaneous_eigenbasis: matrices " + std::to_string(i) + " and " +
                                         std::to_string(j) + " do not commute (residual " +
                                         std::to_string(c) + ")");
        }
    if (n == 0) return {};
    std::mt19937_64 rng(seed);
    std::vector<Eigen::VectorXcd> raw;
    split_common(em, Cmat::Identity(n, n), rng, tol, raw, 0);

    struct Keyed {
        std::vector<std::pair<long long, long long>> key;
        Tensor v;
    };
    std::vector<Keyed> keyed;
    for (auto& v : raw) {
        Keyed kv{{}, vector_from_eigen(fix_phase(v))};
        const Eigen::VectorXcd u = to_eigen(kv.v).col(0);
        for (const auto& m : em) {
            const std::complex<double> lam = u.dot(m * u);  // u^* M u
            kv.key.emplace_back(std::llround(lam.real() * 1e8), std::llround(lam.imag() * 1e8));
        }
        keyed.push_back(std::move(kv));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    std::vector<Tensor> basis;
    for (auto& k : keyed) basis.push_back(std::move(k.v));
    return basis;
}

std::vector<Scalar> joint_eigenvalues(std::span<const Tensor> ms, const Tensor& v) {
    std::vector<Scalar> out;
    const Eigen::VectorXcd u = to_eigen(v).col(0);
    for (const auto& m : ms) {
        const Eigen::VectorXcd mu = to_eigen(m) * u;
        out.emplace_back(u.dot(mu) / u.squaredNorm());
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const Tensor& A) {
    Eigen::SelfAdjointEigenSolver<Cmat> es(to_eigen(A), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

bool is_positive_definite(const Tensor& A, double rel_tol) {
    if (A.rank() != 2 || A.rows() != A.cols()) throw ShapeMismatch("is_positive_definite: square matrix expected");
    const std::size_t n = A.rows();
    if (n == 0) return true;
    if (!approx_equal(A, adjoint(A), rel_tol * (1.0 + max_abs(A)))) return false;
    if (A.mode() == Mode::Exact) {
        // Exact LDL*: positive definite iff every pivot is positive.
        Tensor L = A;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& p = L(k, k).exact_value();
            if (sgn(p.im) != 0 || sgn(p.re) <= 0) return false;
            const Scalar piv = L(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                if (L(i, k).is_zero()) continue;
                const Scalar f = L(i, k) / piv;
                for (std::size_t j = k; j < n; ++j) L(i, j) -= f * L(k, j);
            }
        }
        return true;
    }
    const auto ev = hermitian_eigenvalues(A);
    return ev.back() > 0.0 && ev.front() > rel_tol * ev.back();
}

Tensor hermitian_power(const Tensor& A, double p) {
    Eigen::SelfAdjointEigenSolver<Cmat> es(to_eigen(A));
    Eigen::VectorXd d = es.eigenvalues();
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::pow(d(i), p);
    const Cmat& U = es.eigenvectors();
    return matrix_from_eigen(U * d.cast<std::complex<double>>().asDiagonal() * U.adjoint());
}

}  // namespace qtrans
