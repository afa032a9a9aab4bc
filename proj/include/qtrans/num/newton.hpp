#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace qtrans {

/// Residual map of a polynomial system of degree <= 2 in complex unknowns.
using QuadraticResidual = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

struct MultistartOptions {
    std::size_t starts = 128;
    std::size_t max_iterations = 80;
    /// Start points are drawn uniformly from the box [-radius, radius]^2 per unknown.
    double radius = 1.5;
    /// A point is accepted as a root when max |F| <= root_tol.
    double root_tol = 1e-11;
    /// Roots closer than this (max-norm) are merged.
    double dedupe_tol = 1e-6;
    /// Central-difference step for the Jacobian. The default 1 is exact for
    /// quadratic maps; use a small step for general smooth maps.
    double difference_step = 1.0;
};

/// Finds isolated roots of F by damped Gauss-Newton from seeded random
/// starts. F must be holomorphic in the unknowns. The Jacobian is taken by
/// central differences; the default unit step is exact for maps of degree
/// <= 2. Roots are returned in
/// lexicographic order of their rounded coordinates.
std::vector<Eigen::VectorXcd> quadratic_system_roots(const QuadraticResidual& f, std::size_t unknowns,
                                                     std::uint64_t seed, const MultistartOptions& opt = {});

}  // namespace qtrans
