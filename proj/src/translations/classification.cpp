#include "qtrans/translations/classification.hpp"

#include "qtrans/num/linalg.hpp"

#include <algorithm>
#include <limits>

namespace qtrans {

namespace {

void observe_difference(Residual& r, const Tensor& a, const Tensor& b) {
    const Tensor d = a - b;
    for (const auto& c : d.entries()) r.observe(c);
}

ClauseResult make_clause(std::string id, std::string statement) {
    ClauseResult c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    return c;
}

void fail(ClauseResult& c, const std::string& why) {
    c.verdict = Verdict::Fail;
    if (c.counterexample.empty()) c.counterexample = why;
}

void settle(ClauseResult& c, double tol) {
    c.verdict = combine(c.verdict, c.residual.verdict(tol));
    if (c.verdict != Verdict::Pass && c.counterexample.empty())
        c.counterexample = "residual " + std::to_string(c.residual.value) + " exceeds tolerance";
}

}  // namespace

const ClauseResult& TheoremReport::clause(const std::string& id) const {
    for (const auto& c : clauses)
        if (c.id == id) return c;
    throw Error("TheoremReport: no clause " + id);
}

void TheoremReport::throw_if_violated() const {
    for (const auto& c : clauses)
        if (c.verdict == Verdict::Fail)
            throw TheoremViolation("clause (" + c.id + ") violated: " + c.counterexample);
}

TheoremReport verify_classification(const HopfPtr& hp, std::uint64_t seed, Side side, double tol) {
    const FiniteHopfStar& h = *hp;
    const std::size_t n = h.dim();
    const ClassicalSubgroup cs = classical_subgroup(hp, seed, tol);
    const TranslationMonoid mon = translation_monoid(cs.characters, side, tol);
    const auto& chars = cs.characters;
    const auto& ts = mon.elements;
    const std::size_t m = chars.size();

    TheoremReport rep;
    rep.side = side;
    rep.characters = m;
    rep.translations = ts.size();

    // (a) bijection pt(G) -> T(G).
    ClauseResult a = make_clause("a", "chi -> alpha_chi is a bijection from the characters onto the translations");
    if (ts.size() != m) fail(a, "translation count differs from character count");
    for (std::size_t i = 0; i < m; ++i) {
        const auto hit = find_translation(ts, ts[i].matrix, std::max(tol, 1e-7));
        if (!hit || *hit != i) fail(a, "characters " + std::to_string(i) + " and " + std::to_string(hit.value_or(i)) +
                                           " induce the same translation");
        try {
            observe_difference(a.residual, char_from_alpha(ts[i], tol).values(), chars[i].values());
        } catch (const NotCharacter&) {
            fail(a, "eps o alpha is not a character for translation " + std::to_string(i));
        }
    }
    const auto space = comodule_endomorphism_space(h, side, tol);
    rep.endomorphism_space_dim = space.size();
    if (space.size() != n)
        fail(a, "comodule endomorphism space has dimension " + std::to_string(space.size()) + " instead of " +
                    std::to_string(n));
    for (const auto& B : space) observe_difference(a.residual, alpha_matrix(h, matmul(transpose(B), h.counit()), side), B);
    const auto brute = brute_force_translations(hp, seed, side, tol);
    rep.brute_force_count = brute.matrices.size();
    if (brute.matrices.size() != m)
        fail(a, "brute-force search found " + std::to_string(brute.matrices.size()) + " translations, expected " +
                    std::to_string(m));
    for (const auto& B : brute.matrices) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& t : ts) best = std::min(best, max_abs(t.matrix - B));
        a.residual.observe_float(best);
    }
    settle(a, tol);

    // (b) anti-homomorphism for right translations, homomorphism for left ones.
    ClauseResult b = make_clause("b", side == Side::Right
                                          ? "alpha_{chi1 * chi2} = alpha_chi2 o alpha_chi1; under opposite composition "
                                            "chi -> alpha_chi is a group isomorphism"
                                          : "alpha_{chi1 * chi2} = alpha_chi1 o alpha_chi2; chi -> alpha_chi is a group "
                                            "isomorphism");
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const Tensor& A = ts[x].matrix;
            const Tensor& B = ts[y].matrix;
            const Tensor composed = side == Side::Right ? matmul(B, A) : matmul(A, B);
            observe_difference(b.residual, ts[cs.cayley[x][y]].matrix, composed);
            if (mon.table[x][y] != cs.cayley[x][y])
                fail(b, "translation table differs from the convolution table at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
        }
    settle(b, tol);

    // (c) automorphisms with translation inverses.
    ClauseResult c = make_clause("c", "every translation is invertible and its inverse is alpha_{chi o S}");
    const Tensor I = Tensor::identity(n, h.mode());
    for (std::size_t x = 0; x < m; ++x) {
        if (!ts[x].certificate.invertible) fail(c, "translation " + std::to_string(x) + " is singular");
        const Tensor& inv = ts[cs.inverse_table[x]].matrix;
        observe_difference(c.residual, matmul(ts[x].matrix, inv), I);
        observe_difference(c.residual, matmul(inv, ts[x].matrix), I);
    }
    settle(c, tol);

    // (d) Haar invariance.
    ClauseResult d = make_clause("d", "h o alpha = h for every translation");
    try {
        const HaarState hs = haar_state(hp, tol);
        for (const auto& t : ts) observe_difference(d.residual, matmul(transpose(t.matrix), hs.h.values), hs.h.values);
    } catch (const NoHaar& e) {
        fail(d, e.what());
    }
    settle(d, tol);

    // (e) the finite table is a cancellative monoid, hence a group.
    ClauseResult e = make_clause("e", "the translation table is associative and cancellative with identity alpha_eps");
    if (!is_associative(mon.table)) fail(e, "translation table is not associative");
    if (!is_cancellative(mon.table)) fail(e, "translation table is not cancellative");
    if (mon.identity_index != cs.identity_index) fail(e, "identity translation is not alpha_eps");
    if (!is_group_table(mon.table)) fail(e, "translation table is not a group table");
    settle(e, tol);

    rep.clauses = {a, b, c, d, e};
    for (const auto& cl : rep.clauses) rep.verdict = combine(rep.verdict, cl.verdict);
    return rep;
}

}  // namespace qtrans
