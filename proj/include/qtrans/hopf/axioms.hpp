#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"
#include "qtrans/num/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtrans {

struct AxiomCheck {
    /// One of: algebra, coalgebra, bialgebra, antipode, star.
    std::string family;
    std::string name;
    Residual residual;
    Verdict verdict = Verdict::Pass;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    Verdict verdict = Verdict::Pass;
    /// True when every residual was computed in exact arithmetic.
    bool exact = true;

    bool passed() const { return verdict == Verdict::Pass; }
    std::optional<AxiomCheck> first_failure() const;
    double max_residual() const;
};

/// Residual check of every Hopf *-algebra law:
///   algebra    associativity, unit
///   coalgebra  coassociativity, counit
///   bialgebra  Delta and eps multiplicative and unital
///   antipode   m(S (x) id)Delta = eps 1 = m(id (x) S)Delta
///   star       involution, antimultiplicative, Delta and eps compatibility,
///              S * S * = id
/// Gram positivity of the Haar state is checked separately by is_cstar().
AxiomReport verify_axioms(const FiniteHopfStar& h, double tol = kDefaultTolerance);

}  // namespace qtrans
