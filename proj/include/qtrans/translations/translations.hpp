#pragma once

#include "qtrans/characters/characters.hpp"
#include "qtrans/num/cayley.hpp"
#include "qtrans/num/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qtrans {

class CertificationFailure : public Error {
public:
    using Error::Error;
};

/// Right: Delta o alpha = (alpha (x) id) o Delta, alpha_chi = (chi (x) id) o Delta.
/// Left:  Delta o alpha = (id (x) alpha) o Delta, alpha_chi = (id (x) chi) o Delta.
enum class Side { Right, Left };

std::string to_string(Side s);

struct TranslationCertificate {
    Residual intertwining;
    Residual unitality;
    Residual multiplicativity;
    Residual star;
    bool invertible = false;
    Verdict verdict = Verdict::Fail;
};

/// A linear endomorphism x -> matrix * x of the coefficient space.
struct Translation {
    HopfPtr algebra;
    Tensor matrix;
    std::optional<Character> inducing;
    TranslationCertificate certificate;
    Side side = Side::Right;
};

/// Matrix of (f (x) id) o Delta (Right) or (id (x) f) o Delta (Left).
Tensor alpha_matrix(const FiniteHopfStar& h, const Tensor& f, Side side = Side::Right);

TranslationCertificate certify_translation(const FiniteHopfStar& h, const Tensor& matrix, Side side = Side::Right,
                                           double tol = kDefaultTolerance);

/// Throws CertificationFailure unless the resulting map certifies.
Translation alpha_from_char(const Character& chi, Side side = Side::Right, double tol = kDefaultTolerance);
Translation alpha_from_functional(const Functional& f, Side side = Side::Right, double tol = kDefaultTolerance);

/// eps o alpha, certified. Throws NotCharacter if it is not a *-character.
Character char_from_alpha(const Translation& alpha, double tol = kDefaultTolerance);

/// Basis of every linear map alpha with the intertwining property of the
/// given side, as the nullspace of the linearized equation in the n^2
/// matrix entries. Exact when h is exact.
std::vector<Tensor> comodule_endomorphism_space(const FiniteHopfStar& h, Side side = Side::Right,
                                                double tol = kDefaultTolerance);

struct BruteForceTranslations {
    /// Dimension of the comodule endomorphism space searched.
    std::size_t space_dim = 0;
    /// Certified unital *-endomorphisms found, in deterministic order.
    std::vector<Tensor> matrices;
    /// Candidates whose certificate landed in the suspicious band.
    std::size_t suspicious = 0;
};

/// Independent search for translations: alpha = sum_k t_k B_k over a basis
/// of the comodule endomorphism space, with unitality and multiplicativity
/// solved by multistart Gauss-Newton and the star condition checked on
/// each root.
BruteForceTranslations brute_force_translations(const HopfPtr& h, std::uint64_t seed = 0, Side side = Side::Right,
                                                double tol = kDefaultTolerance);

/// Right translations under opposite composition: table[a][b] is the index
/// of alpha_b o alpha_a, so that chi -> alpha_chi is a homomorphism. Left
/// translations already compose like their characters and use
/// table[a][b] = index of alpha_a o alpha_b.
struct TranslationMonoid {
    std::vector<Translation> elements;
    CayleyTable table;
    std::size_t identity_index = 0;
};

/// alpha_chi for every character of the classical subgroup, in the order of
/// the characters. Throws CertificationFailure if some composition leaves
/// the set.
TranslationMonoid enumerate_translations(const HopfPtr& h, std::uint64_t seed = 0, Side side = Side::Right,
                                         double tol = kDefaultTolerance);
TranslationMonoid translation_monoid(const std::vector<Character>& chars, Side side = Side::Right,
                                     double tol = kDefaultTolerance);

std::optional<std::size_t> find_translation(const std::vector<Translation>& ts, const Tensor& matrix,
                                            double tol = kDefaultTolerance);

}  // namespace qtrans
