#pragma once

#include "qtrans/haar/haar.hpp"
#include "qtrans/translations/translations.hpp"

#include <string>
#include <vector>

namespace qtrans {

/// One clause of the classification theorem with its evidence.
struct ClauseResult {
    /// "a".."e".
    std::string id;
    std::string statement;
    Residual residual;
    Verdict verdict = Verdict::Pass;
    /// Empty unless the clause failed.
    std::string counterexample;
};

struct TheoremReport {
    Side side = Side::Right;
    std::size_t characters = 0;
    std::size_t translations = 0;
    std::size_t endomorphism_space_dim = 0;
    std::size_t brute_force_count = 0;
    std::vector<ClauseResult> clauses;
    Verdict verdict = Verdict::Pass;

    const ClauseResult& clause(const std::string& id) const;
    /// Throws TheoremViolation naming the first failed clause.
    void throw_if_violated() const;
};

class TheoremViolation : public Error {
public:
    using Error::Error;
};

/// Checks, for the translations of the given side:
///   (a) chi -> alpha_chi is a bijection pt(G) -> T(G), confirmed by the
///       comodule-endomorphism space and the brute-force search;
///   (b) alpha_{chi1 * chi2} = alpha_chi2 o alpha_chi1 (right side; the
///       left side composes in the same order as the characters);
///   (c) every translation is invertible with inverse alpha_{chi o S};
///   (d) h o alpha = h;
///   (e) the table under opposite composition is associative and
///       cancellative, hence a group.
TheoremReport verify_classification(const HopfPtr& h, std::uint64_t seed = 0, Side side = Side::Right,
                                    double tol = kDefaultTolerance);

}  // namespace qtrans
