#include "qtrans/translations/translations.hpp"

#include "qtrans/num/eigen_bridge.hpp"
#include "qtrans/num/linalg.hpp"
#include "qtrans/num/newton.hpp"

namespace qtrans {

std::string to_string(Side s) { return s == Side::Right ? "right" : "left"; }

Tensor alpha_matrix(const FiniteHopfStar& h, const Tensor& f, Side side) {
    const std::size_t n = h.dim();
    if (f.rank() != 1 || f.size() != n) throw ShapeMismatch("alpha_matrix: functional has wrong length");
    const Tensor& D = h.comult();
    Tensor A = Tensor::matrix(n, n, h.mode() == Mode::Exact && f.mode() == Mode::Exact ? Mode::Exact : Mode::Float);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& d = D(i, j, k);
                if (d.is_zero(0.0)) continue;
                if (side == Side::Right)
                    A(k, i) += d * f[j];
                else
                    A(j, i) += d * f[k];
            }
    return A;
}

TranslationCertificate certify_translation(const FiniteHopfStar& h, const Tensor& A, Side side, double tol) {
    const std::size_t n = h.dim();
    if (A.rank() != 2 || A.rows() != n || A.cols() != n) throw ShapeMismatch("certify_translation: n x n matrix expected");
    TranslationCertificate c;
    std::vector<Tensor> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(A.column(i));

    for (std::size_t i = 0; i < n; ++i) {
        const Tensor lhs = h.coproduct(images[i]);
        Tensor rhs = Tensor::vector(n * n, lhs.mode());
        const Tensor& D = h.comult();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& d = D(i, j, k);
                if (d.is_zero(0.0)) continue;
                const Tensor term = side == Side::Right ? h.outer(images[j], h.basis_vector(k))
                                                       : h.outer(h.basis_vector(j), images[k]);
                rhs = rhs + d * term;
            }
        for (std::size_t t = 0; t < n * n; ++t) c.intertwining.observe(lhs[t] - rhs[t]);

        const Tensor star_lhs = matmul(A, h.star_of(h.basis_vector(i)));
        const Tensor star_rhs = h.star_of(images[i]);
        for (std::size_t t = 0; t < n; ++t) c.star.observe(star_lhs[t] - star_rhs[t]);

        for (std::size_t j = 0; j < n; ++j) {
            const Tensor l = matmul(A, h.product(h.basis_vector(i), h.basis_vector(j)));
            const Tensor r = h.product(images[i], images[j]);
            for (std::size_t t = 0; t < n; ++t) c.multiplicativity.observe(l[t] - r[t]);
        }
    }
    const Tensor u = matmul(A, h.unit());
    for (std::size_t t = 0; t < n; ++t) c.unitality.observe(u[t] - h.unit()[t]);
    c.invertible = inverse(A, tol).has_value();
    c.verdict = combine(combine(c.intertwining.verdict(tol), c.unitality.verdict(tol)),
                        combine(c.multiplicativity.verdict(tol), c.star.verdict(tol)));
    if (!c.invertible) c.verdict = Verdict::Fail;
    return c;
}

Translation alpha_from_functional(const Functional& f, Side side, double tol) {
    Translation t;
    t.algebra = f.algebra;
    t.side = side;
    t.matrix = alpha_matrix(*f.algebra, f.values, side);
    t.certificate = certify_translation(*f.algebra, t.matrix, side, tol);
    if (t.certificate.verdict == Verdict::Fail)
        throw CertificationFailure("alpha_from_functional: the induced map is not a translation");
    return t;
}

Translation alpha_from_char(const Character& chi, Side side, double tol) {
    Translation t = alpha_from_functional(chi.functional, side, tol);
    t.inducing = chi;
    return t;
}

Character char_from_alpha(const Translation& alpha, double tol) {
    return make_character(alpha.algebra, matmul(transpose(alpha.matrix), alpha.algebra->counit()), tol);
}

std::vector<Tensor> comodule_endomorphism_space(const FiniteHopfStar& h, Side side, double tol) {
    const std::size_t n = h.dim();
    const Tensor& D = h.comult();
    // Unknown A[r,c] sits at r*n + c. Row (i,p,q) compares the (p,q)
    // coefficient of both sides of the intertwining equation applied to e_i.
    Tensor system = Tensor::matrix(n * n * n, n * n, h.mode());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const std::size_t row = (i * n + p) * n + q;
                for (std::size_t k = 0; k < n; ++k) {
                    system(row, k * n + i) += D(k, p, q);
                    if (side == Side::Right)
                        system(row, p * n + k) -= D(i, k, q);
                    else
                        system(row, q * n + k) -= D(i, p, k);
                }
            }
    std::vector<Tensor> out;
    for (const auto& v : nullspace(system, tol)) out.push_back(v.reshaped({n, n}));
    return out;
}

BruteForceTranslations brute_force_translations(const HopfPtr& hp, std::uint64_t seed, Side side, double tol) {
    const FiniteHopfStar& h = *hp;
    const FiniteHopfStar hf = h.to_mode(Mode::Float);
    const std::size_t n = h.dim();
    BruteForceTranslations out;
    const auto space = comodule_endomorphism_space(h, side, tol);
    out.space_dim = space.size();
    if (space.empty()) return out;

    std::vector<Eigen::MatrixXcd> basis;
    for (const auto& b : space) basis.push_back(to_eigen(b));
    const Eigen::VectorXcd unit = to_eigen(hf.unit()).col(0);
    std::vector<Eigen::VectorXcd> products;  // e_i e_j at i*n + j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            products.push_back(to_eigen(hf.product(hf.basis_vector(i), hf.basis_vector(j))).col(0));
    std::vector<Eigen::MatrixXcd> left_mult;
    for (std::size_t i = 0; i < n; ++i) left_mult.push_back(to_eigen(hf.left_multiplication(hf.basis_vector(i))));

    auto assemble = [&](const Eigen::VectorXcd& t) {
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
        for (std::size_t k = 0; k < basis.size(); ++k) A += t(k) * basis[k];
        return A;
    };
    auto f = [&](const Eigen::VectorXcd& t) {
        const Eigen::MatrixXcd A = assemble(t);
        Eigen::VectorXcd res(n * n * n + n);
        Eigen::Index row = 0;
        // alpha(e_i) alpha(e_j) = L(alpha(e_i)) alpha(e_j), with L linear in alpha(e_i).
        for (std::size_t i = 0; i < n; ++i) {
            Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n, n);
            for (std::size_t k = 0; k < n; ++k) L += A(k, i) * left_mult[k];
            for (std::size_t j = 0; j < n; ++j) {
                res.segment(row, n) = A * products[i * n + j] - L * A.col(j);
                row += n;
            }
        }
        res.segment(row, n) = A * unit - unit;
        return res;
    };
    MultistartOptions opt;
    opt.starts = 192;
    for (const auto& root : quadratic_system_roots(f, space.size(), seed, opt)) {
        const Tensor A = matrix_from_eigen(assemble(root));
        const auto cert = certify_translation(hf, A, side, tol);
        if (cert.verdict == Verdict::Fail) continue;
        if (cert.verdict == Verdict::Suspicious) ++out.suspicious;
        out.matrices.push_back(A);
    }
    return out;
}

std::optional<std::size_t> find_translation(const std::vector<Translation>& ts, const Tensor& matrix, double tol) {
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (approx_equal(ts[i].matrix, matrix, tol)) return i;
    return std::nullopt;
}

TranslationMonoid translation_monoid(const std::vector<Character>& chars, Side side, double tol) {
    TranslationMonoid m;
    for (const auto& chi : chars) m.elements.push_back(alpha_from_char(chi, side, tol));
    const std::size_t k = m.elements.size();
    const double match_tol = std::max(tol, 1e-7);
    m.table.assign(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const Tensor& A = m.elements[a].matrix;
            const Tensor& B = m.elements[b].matrix;
            const auto c = find_translation(m.elements, side == Side::Right ? matmul(B, A) : matmul(A, B), match_tol);
            if (!c) throw CertificationFailure("translation_monoid: composition leaves the set of translations");
            m.table[a][b] = *c;
        }
    const HopfPtr& h = chars.front().functional.algebra;
    const auto id = find_translation(m.elements, Tensor::identity(h->dim(), h->mode()), match_tol);
    if (!id) throw CertificationFailure("translation_monoid: identity is not a translation of the set");
    m.identity_index = *id;
    return m;
}

TranslationMonoid enumerate_translations(const HopfPtr& h, std::uint64_t seed, Side side, double tol) {
    return translation_monoid(classical_subgroup(h, seed, tol).characters, side, tol);
}

}  // namespace qtrans
