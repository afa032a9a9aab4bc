#pragma once

#include "qtrans/hopf/element.hpp"
#include "qtrans/num/cayley.hpp"
#include "qtrans/num/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qtrans {

class NotCharacter : public Error {
public:
    using Error::Error;
};

class ClosureFailure : public Error {
public:
    using Error::Error;
};

struct CharacterCertificate {
    /// max |chi(e_i e_j) - chi(e_i) chi(e_j)|.
    Residual multiplicativity;
    /// |chi(1) - 1|.
    Residual unitality;
    /// max |chi(e_i^*) - conj(chi(e_i))|.
    Residual star;
    Verdict verdict = Verdict::Fail;
};

/// A unital multiplicative *-preserving functional.
struct Character {
    Functional functional;
    CharacterCertificate certificate;

    const Tensor& values() const { return functional.values; }
};

CharacterCertificate certify_character(const FiniteHopfStar& h, const Tensor& values, double tol = kDefaultTolerance);

/// Wraps values as a Character; throws NotCharacter unless the certificate passes.
Character make_character(const HopfPtr& h, Tensor values, double tol = kDefaultTolerance);

enum class CharacterMethod {
    /// Common eigenvectors of the transposed multiplication operators of the
    /// abelianization, pulled back along the quotient map.
    Abelianization,
    /// Multistart Gauss-Newton on chi(e_i) chi(e_j) = chi(e_i e_j), chi(1) = 1.
    DirectSolve,
};

/// All *-characters of h in lexicographic order of their values rounded to
/// 12 decimal places (real part before imaginary part, basis order). In
/// exact mode each float candidate is snapped to Gaussian rationals and
/// certified exactly; candidates that do not snap stay float.
std::vector<Character> enumerate_characters(const HopfPtr& h, std::uint64_t seed = 0,
                                            CharacterMethod method = CharacterMethod::Abelianization,
                                            double tol = kDefaultTolerance);

/// (chi1 (x) chi2) o Delta, certified. Throws NotCharacter on failure.
Character convolve(const Character& a, const Character& b, double tol = kDefaultTolerance);
/// chi o S, certified.
Character character_inverse(const Character& a, double tol = kDefaultTolerance);
/// The dual star x -> conj(chi(S(x)^*)), the unitary inverse of chi.
Tensor star_conjugate(const Character& a);

/// Index of the character whose values match within tol, if any.
std::optional<std::size_t> find_character(const std::vector<Character>& chars, const Tensor& values,
                                          double tol = kDefaultTolerance);

/// The maximal classical subgroup: characters under convolution.
struct ClassicalSubgroup {
    std::vector<Character> characters;
    /// cayley[a][b] = index of characters[a] * characters[b].
    CayleyTable cayley;
    std::size_t identity_index = 0;
    std::vector<std::size_t> inverse_table;
    /// max |chi o S - conj(chi o *)| over all characters.
    Residual inverse_star_agreement;
};

/// Throws ClosureFailure if a convolution or inverse leaves the enumerated
/// set or the table is not a group table.
ClassicalSubgroup classical_subgroup(const HopfPtr& h, std::uint64_t seed = 0, double tol = kDefaultTolerance);
ClassicalSubgroup classical_subgroup(std::vector<Character> chars, double tol = kDefaultTolerance);

}  // namespace qtrans
