#include "qtrans/num/newton.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace qtrans {

namespace {

Eigen::MatrixXcd jacobian(const QuadraticResidual& f, const Eigen::VectorXcd& x, Eigen::Index m, double h) {
    const Eigen::Index n = x.size();
    Eigen::MatrixXcd J(m, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::VectorXcd xp = x, xm = x;
        xp(k) += h;
        xm(k) -= h;
        J.col(k) = (f(xp) - f(xm)) / (2.0 * h);
    }
    return J;
}

double sup_norm(const Eigen::VectorXcd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

std::vector<std::pair<long long, long long>> key_of(const Eigen::VectorXcd& v) {
    std::vector<std::pair<long long, long long>> key;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        key.emplace_back(std::llround(v(i).real() * 1e8), std::llround(v(i).imag() * 1e8));
    return key;
}

}  // namespace

std::vector<Eigen::VectorXcd> quadratic_system_roots(const QuadraticResidual& f, std::size_t unknowns,
                                                     std::uint64_t seed, const MultistartOptions& opt) {
    const Eigen::Index n = static_cast<Eigen::Index>(unknowns);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-opt.radius, opt.radius);
    std::vector<Eigen::VectorXcd> roots;

    for (std::size_t s = 0; s < opt.starts; ++s) {
        Eigen::VectorXcd x(n);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = {box(rng), box(rng)};
        Eigen::VectorXcd fx = f(x);
        const Eigen::Index m = fx.size();
        double norm = fx.norm();
        for (std::size_t it = 0; it < opt.max_iterations && sup_norm(fx) > opt.root_tol; ++it) {
            const Eigen::MatrixXcd J = jacobian(f, x, m, opt.difference_step);
            const Eigen::VectorXcd step = J.completeOrthogonalDecomposition().solve(-fx);
            double t = 1.0;
            bool moved = false;
            for (int ls = 0; ls < 30; ++ls, t *= 0.5) {
                Eigen::VectorXcd xn = x + t * step;
                Eigen::VectorXcd fn = f(xn);
                if (fn.norm() < norm) {
                    x = std::move(xn);
                    fx = std::move(fn);
                    norm = fx.norm();
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        if (sup_norm(fx) > opt.root_tol) continue;
        const bool seen = std::any_of(roots.begin(), roots.end(), [&](const Eigen::VectorXcd& r) {
            return sup_norm(r - x) <= opt.dedupe_tol;
        });
        if (!seen) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end(),
              [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return key_of(a) < key_of(b); });
    return roots;
}

}  // namespace qtrans
