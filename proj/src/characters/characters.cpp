#include "qtrans/characters/characters.hpp"

#include "qtrans/hopf/abelianization.hpp"
#include "qtrans/num/eigen_bridge.hpp"
#include "qtrans/num/linalg.hpp"
#include "qtrans/num/newton.hpp"

#include <algorithm>
#include <cmath>

namespace qtrans {

namespace {

using ValueKey = std::vector<std::pair<long long, long long>>;

ValueKey key_of(const Tensor& v) {
    ValueKey key;
    for (const auto& c : v.entries()) {
        key.emplace_back(std::llround(c.real() * 1e12), std::llround(c.imag() * 1e12));
    }
    return key;
}

// Exact certification when the candidate snaps to Gaussian rationals.
std::optional<Character> finalize(const HopfPtr& h, const Tensor& candidate, double tol) {
    if (h->mode() == Mode::Exact) {
        Tensor snapped = Tensor::vector(candidate.size());
        bool ok = true;
        for (std::size_t i = 0; i < candidate.size() && ok; ++i) {
            const auto s = snap_to_gaussian_rational(candidate[i]);
            if (s) snapped[i] = *s;
            ok = s.has_value();
        }
        if (ok) {
            const auto cert = certify_character(*h, snapped, tol);
            if (cert.verdict == Verdict::Pass) return Character{make_functional(h, snapped), cert};
        }
    }
    const auto cert = certify_character(*h, candidate, tol);
    if (cert.verdict == Verdict::Fail) return std::nullopt;
    return Character{make_functional(h, candidate), cert};
}

std::vector<Tensor> abelianization_candidates(const HopfPtr& h, std::uint64_t seed, double tol) {
    const Abelianization ab = abelianization(*h, tol);
    const FiniteHopfStar& q = *ab.quotient;
    const std::size_t r = q.dim();
    if (r == 0) return {};
    std::vector<Tensor> ops;
    for (std::size_t a = 0; a < r; ++a)
        ops.push_back(transpose(q.left_multiplication(q.basis_vector(a))).to_mode(Mode::Float));
    const Tensor unit = q.unit().to_mode(Mode::Float);
    const Tensor Pt = transpose(ab.projection).to_mode(Mode::Float);

    std::vector<Tensor> out;
    for (const auto& v : simultaneous_eigenbasis(ops, seed, tol)) {
        const Scalar norm = dot(unit, v);
        if (norm.abs() <= 1e-12) continue;
        out.push_back(matmul(Pt, (Scalar(1.0) / norm) * v));
    }
    return out;
}

std::vector<Tensor> direct_candidates(const HopfPtr& h, std::uint64_t seed) {
    const FiniteHopfStar& H = *h;
    const std::size_t n = H.dim();
    const Eigen::MatrixXcd unit = to_eigen(H.unit());
    std::vector<Eigen::MatrixXcd> structure;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) structure.push_back(to_eigen(H.product(H.basis_vector(i), H.basis_vector(j))));

    auto f = [&](const Eigen::VectorXcd& c) {
        Eigen::VectorXcd out(structure.size() + 1);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j, ++row)
                out(row) = c(i) * c(j) - (structure[row].transpose() * c)(0, 0);
        out(row) = (unit.transpose() * c)(0, 0) - 1.0;
        return out;
    };
    MultistartOptions opt;
    opt.starts = 256;
    std::vector<Tensor> out;
    for (const auto& root : quadratic_system_roots(f, n, seed, opt)) out.push_back(vector_from_eigen(root));
    return out;
}

}  // namespace

CharacterCertificate certify_character(const FiniteHopfStar& h, const Tensor& v, double tol) {
    const std::size_t n = h.dim();
    if (v.rank() != 1 || v.size() != n) throw ShapeMismatch("certify_character: value vector has wrong length");
    CharacterCertificate c;
    const Tensor& M = h.mult();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s;
            for (std::size_t k = 0; k < n; ++k)
                if (!M(i, j, k).is_zero(0.0)) s += M(i, j, k) * v[k];
            c.multiplicativity.observe(s - v[i] * v[j]);
        }
        c.star.observe(dot(v, h.star_of(h.basis_vector(i))) - v[i].conj());
    }
    c.unitality.observe(dot(v, h.unit()) - Scalar(1));
    c.verdict = combine(combine(c.multiplicativity.verdict(tol), c.unitality.verdict(tol)), c.star.verdict(tol));
    return c;
}

Character make_character(const HopfPtr& h, Tensor values, double tol) {
    auto cert = certify_character(*h, values, tol);
    if (cert.verdict == Verdict::Fail)
        throw NotCharacter("functional is not a *-character (multiplicativity residual " +
                           std::to_string(cert.multiplicativity.value) + ")");
    return Character{make_functional(h, std::move(values)), cert};
}

std::vector<Character> enumerate_characters(const HopfPtr& h, std::uint64_t seed, CharacterMethod method,
                                            double tol) {
    const auto candidates =
        method == CharacterMethod::Abelianization ? abelianization_candidates(h, seed, tol) : direct_candidates(h, seed);
    std::vector<Character> out;
    for (const auto& cand : candidates) {
        auto chi = finalize(h, cand, tol);
        if (!chi) continue;
        if (find_character(out, chi->values(), 1e-7)) continue;
        out.push_back(std::move(*chi));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Character& a, const Character& b) { return key_of(a.values()) < key_of(b.values()); });
    return out;
}

Character convolve(const Character& a, const Character& b, double tol) {
    return make_character(a.functional.algebra, convolution(a.functional, b.functional).values, tol);
}

Character character_inverse(const Character& a, double tol) {
    return make_character(a.functional.algebra, compose_antipode(a.functional).values, tol);
}

Tensor star_conjugate(const Character& a) {
    const FiniteHopfStar& h = *a.functional.algebra;
    Tensor out = Tensor::vector(h.dim(), a.values().mode());
    for (std::size_t i = 0; i < h.dim(); ++i) out[i] = dot(a.values(), h.star_of(h.antipode_of(h.basis_vector(i)))).conj();
    return out;
}

std::optional<std::size_t> find_character(const std::vector<Character>& chars, const Tensor& values, double tol) {
    for (std::size_t i = 0; i < chars.size(); ++i)
        if (approx_equal(chars[i].values(), values, tol)) return i;
    return std::nullopt;
}

ClassicalSubgroup classical_subgroup(const HopfPtr& h, std::uint64_t seed, double tol) {
    return classical_subgroup(enumerate_characters(h, seed, CharacterMethod::Abelianization, tol), tol);
}

ClassicalSubgroup classical_subgroup(std::vector<Character> chars, double tol) {
    if (chars.empty()) throw ClosureFailure("classical_subgroup: no characters");
    const HopfPtr& h = chars.front().functional.algebra;
    const double match_tol = std::max(tol, 1e-7);
    ClassicalSubgroup g;
    const auto id = find_character(chars, h->counit(), match_tol);
    if (!id) throw ClosureFailure("classical_subgroup: the counit is not among the characters");
    g.identity_index = *id;

    const std::size_t m = chars.size();
    g.cayley.assign(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto c = find_character(chars, convolution(chars[a].functional, chars[b].functional).values, match_tol);
            if (!c)
                throw ClosureFailure("classical_subgroup: convolution of characters " + std::to_string(a) + " and " +
                                     std::to_string(b) + " is not enumerated");
            g.cayley[a][b] = *c;
        }
    for (std::size_t a = 0; a < m; ++a) {
        const Tensor inv = compose_antipode(chars[a].functional).values;
        const auto c = find_character(chars, inv, match_tol);
        if (!c) throw ClosureFailure("classical_subgroup: chi o S is not enumerated for character " + std::to_string(a));
        g.inverse_table.push_back(*c);
        const Tensor alt = star_conjugate(chars[a]);
        for (std::size_t i = 0; i < inv.size(); ++i) g.inverse_star_agreement.observe(inv[i] - alt[i]);
    }
    if (!is_group_table(g.cayley)) throw ClosureFailure("classical_subgroup: convolution table is not a group table");
    for (std::size_t a = 0; a < m; ++a)
        if (g.cayley[a][g.inverse_table[a]] != g.identity_index)
            throw ClosureFailure("classical_subgroup: chi o S is not the convolution inverse");
    g.characters = std::move(chars);
    return g;
}

}  // namespace qtrans
