#include "qtrans/translations/isomorphism.hpp"

#include "qtrans/characters/characters.hpp"
#include "qtrans/hopf/dual.hpp"
#include "qtrans/hopf/wedderburn.hpp"
#include "qtrans/num/eigen_bridge.hpp"
#include "qtrans/num/linalg.hpp"
#include "qtrans/num/newton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace qtrans {

namespace {

using Cmat = Eigen::MatrixXcd;

void observe(Residual& r, const Tensor& a, const Tensor& b) {
    const Tensor d = a - b;
    for (const auto& c : d.entries()) r.observe(c);
}

struct BlockFrame {
    std::vector<AlgebraBlock> blocks;
    std::vector<std::size_t> offset;
    Cmat W, Winv;
};

BlockFrame frame_of(const FiniteHopfStar& h, std::uint64_t seed, double tol) {
    BlockFrame f;
    f.blocks = algebra_blocks(h, seed, tol);
    std::size_t off = 0;
    for (const auto& b : f.blocks) {
        f.offset.push_back(off);
        off += b.dim * b.dim;
    }
    f.W = to_eigen(matrix_unit_basis(f.blocks));
    f.Winv = f.W.inverse();
    return f;
}

// Group-likes together with their multiplication table.
struct GroupLikes {
    std::vector<Eigen::VectorXcd> coords;  // in the matrix-unit basis
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;
};

std::optional<GroupLikes> group_likes_in_frame(const FiniteHopfStar& h, const BlockFrame& f, std::uint64_t seed,
                                               double tol) {
    const FiniteHopfStar hf = h.to_mode(Mode::Float);
    std::vector<Tensor> gs;
    for (const auto& g : group_likes(h, seed, tol)) gs.push_back(g.to_mode(Mode::Float));
    GroupLikes out;
    const std::size_t k = gs.size();
    auto index_of = [&](const Tensor& x) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < k; ++i)
            if (max_abs(gs[i] - x) < 1e-6) return i;
        return std::nullopt;
    };
    const auto id = index_of(hf.unit());
    if (!id) return std::nullopt;
    out.identity = *id;
    out.table.assign(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const auto c = index_of(hf.product(gs[a], gs[b]));
            if (!c) return std::nullopt;
            out.table[a][b] = *c;
        }
    for (const auto& g : gs) out.coords.push_back(f.Winv * to_eigen(g).col(0));
    return out;
}

Cmat block_part(const BlockFrame& f, const Eigen::VectorXcd& c, std::size_t b) {
    const std::size_t d = f.blocks[b].dim;
    Cmat m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = c(f.offset[b] + i * d + j);
    return m;
}

// Calls visit(perm) for every bijection of group-likes respecting products.
void for_each_group_iso(const GroupLikes& g1, const GroupLikes& g2,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    const std::size_t k = g1.coords.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[g1.identity] != g2.identity) continue;
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t b = 0; b < k && ok; ++b) ok = perm[g1.table[a][b]] == g2.table[perm[a]][perm[b]];
        if (ok && visit(perm)) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Calls visit(sigma) for every dimension-preserving bijection of blocks.
void for_each_block_matching(const BlockFrame& f1, const BlockFrame& f2,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> classes;
    for (std::size_t b = 0; b < f1.blocks.size(); ++b) classes[f1.blocks[b].dim].first.push_back(b);
    for (std::size_t b = 0; b < f2.blocks.size(); ++b) classes[f2.blocks[b].dim].second.push_back(b);
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cls;
    for (auto& [d, c] : classes) {
        if (c.first.size() != c.second.size()) return;
        cls.push_back(c);
    }
    std::vector<std::size_t> sigma(f1.blocks.size());
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
        if (stop) return;
        if (ci == cls.size()) {
            stop = visit(sigma);
            return;
        }
        auto targets = cls[ci].second;
        do {
            for (std::size_t t = 0; t < targets.size(); ++t) sigma[cls[ci].first[t]] = targets[t];
            rec(ci + 1);
        } while (!stop && std::next_permutation(targets.begin(), targets.end()));
    };
    rec(0);
}

}  // namespace

IsomorphismCertificate certify_hopf_isomorphism(const FiniteHopfStar& from, const FiniteHopfStar& to,
                                                const Tensor& phi, double tol) {
    const std::size_t n = from.dim();
    if (to.dim() != n || phi.rank() != 2 || phi.rows() != n || phi.cols() != n)
        throw ShapeMismatch("certify_hopf_isomorphism: dimensions differ");
    IsomorphismCertificate c;
    std::vector<Tensor> img;
    for (std::size_t i = 0; i < n; ++i) img.push_back(phi.column(i));
    for (std::size_t i = 0; i < n; ++i) {
        const Tensor ei = from.basis_vector(i);
        for (std::size_t j = 0; j < n; ++j)
            observe(c.algebra, matmul(phi, from.product(ei, from.basis_vector(j))), to.product(img[i], img[j]));
        Tensor rhs = Tensor::vector(n * n, Mode::Float);
        const Tensor& D = from.comult();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!D(i, j, k).is_zero(0.0)) rhs = rhs + D(i, j, k) * to.outer(img[j], img[k]);
        observe(c.coalgebra, to.coproduct(img[i]), rhs);
        observe(c.antipode, to.antipode_of(img[i]), matmul(phi, from.antipode_of(ei)));
        observe(c.star, to.star_of(img[i]), matmul(phi, from.star_of(ei)));
        c.counit.observe(to.counit_of(img[i]) - from.counit()[i]);
    }
    observe(c.unit, matmul(phi, from.unit()), to.unit());
    c.invertible = inverse(phi, tol).has_value();
    c.verdict = Verdict::Pass;
    for (const Residual* r : {&c.algebra, &c.unit, &c.coalgebra, &c.counit, &c.antipode, &c.star})
        c.verdict = combine(c.verdict, r->verdict(tol));
    if (!c.invertible) c.verdict = Verdict::Fail;
    return c;
}

std::vector<Tensor> group_likes(const FiniteHopfStar& h, std::uint64_t seed, double tol) {
    std::vector<Tensor> out;
    for (const auto& chi : enumerate_characters(dual_hopf(h, tol), seed, CharacterMethod::Abelianization, tol))
        out.push_back(chi.values());
    return out;
}

std::optional<Tensor> find_hopf_isomorphism(const FiniteHopfStar& from, const FiniteHopfStar& to, std::uint64_t seed,
                                            double tol) {
    const std::size_t n = from.dim();
    if (to.dim() != n) return std::nullopt;
    const FiniteHopfStar h1 = from.to_mode(Mode::Float), h2 = to.to_mode(Mode::Float);
    const BlockFrame f1 = frame_of(h1, seed, tol), f2 = frame_of(h2, seed, tol);
    if (f1.blocks.size() != f2.blocks.size()) return std::nullopt;
    const auto g1 = group_likes_in_frame(from, f1, seed, tol);
    const auto g2 = group_likes_in_frame(to, f2, seed, tol);
    if (!g1 || !g2 || g1->coords.size() != g2->coords.size()) return std::nullopt;

    // Coalgebra data as Eigen matrices for the Newton residual.
    std::vector<Cmat> comult1(n);
    Cmat comult2(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        comult1[i] = Cmat::Zero(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                comult1[i](j, k) = h1.comult()(i, j, k).to_complex();
                comult2(j * n + k, i) = h2.comult()(i, j, k).to_complex();
            }
    }
    const Cmat eps1 = to_eigen(h1.counit()).transpose(), eps2 = to_eigen(h2.counit()).transpose();
    const Cmat S1 = to_eigen(h1.antipode()), S2 = to_eigen(h2.antipode());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.5, 1.5);
    std::optional<Tensor> found;

    for_each_group_iso(*g1, *g2, [&](const std::vector<std::size_t>& psi) {
        for_each_block_matching(f1, f2, [&](const std::vector<std::size_t>& sigma) {
            // One-dimensional blocks must carry equal group-like values.
            std::vector<std::vector<Cmat>> null_bases(f1.blocks.size());
            for (std::size_t b = 0; b < f1.blocks.size(); ++b) {
                const std::size_t d = f1.blocks[b].dim;
                if (d == 1) {
                    for (std::size_t g = 0; g < psi.size(); ++g)
                        if (std::abs(g1->coords[g](f1.offset[b]) - g2->coords[psi[g]](f2.offset[sigma[b]])) > 1e-6)
                            return false;
                    continue;
                }
                Cmat sys = Cmat::Zero(psi.size() * d * d, d * d);
                for (std::size_t g = 0; g < psi.size(); ++g) {
                    const Cmat G = block_part(f1, g1->coords[g], b);
                    const Cmat H = block_part(f2, g2->coords[psi[g]], sigma[b]);
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t s = 0; s < d; ++s)
                            for (std::size_t t = 0; t < d; ++t) {
                                sys(g * d * d + r * d + s, r * d + t) += G(t, s);
                                sys(g * d * d + r * d + s, t * d + s) -= H(r, t);
                            }
                }
                for (const auto& v : nullspace(matrix_from_eigen(sys), 1e-8)) {
                    Cmat U(d, d);
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t s = 0; s < d; ++s) U(r, s) = v[r * d + s].to_complex();
                    null_bases[b].push_back(U);
                }
                if (null_bases[b].empty()) return false;
            }

            std::vector<std::size_t> free_blocks;
            std::size_t unknowns = 0;
            for (std::size_t b = 0; b < null_bases.size(); ++b)
                if (null_bases[b].size() > 1) {
                    free_blocks.push_back(b);
                    unknowns += null_bases[b].size();
                }
            std::vector<Eigen::VectorXcd> gauge;
            for (std::size_t b : free_blocks) {
                Eigen::VectorXcd r(null_bases[b].size());
                for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = unif(rng);
                gauge.push_back(r);
            }

            auto build = [&](const Eigen::VectorXcd& z) {
                Cmat C = Cmat::Zero(n, n);
                std::size_t pos = 0;
                for (std::size_t b = 0; b < f1.blocks.size(); ++b) {
                    const std::size_t d = f1.blocks[b].dim;
                    const std::size_t o1 = f1.offset[b], o2 = f2.offset[sigma[b]];
                    if (d == 1) {
                        C(o2, o1) = 1.0;
                        continue;
                    }
                    Cmat U = null_bases[b][0];
                    if (null_bases[b].size() > 1) {
                        U = Cmat::Zero(d, d);
                        for (const auto& N : null_bases[b]) U += z(pos++) * N;
                    }
                    const Cmat Uinv = U.inverse();
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j)
                            for (std::size_t k = 0; k < d; ++k)
                                for (std::size_t l = 0; l < d; ++l) C(o2 + k * d + l, o1 + i * d + j) = U(k, i) * Uinv(j, l);
                }
                return Cmat(f2.W * C * f1.Winv);
            };
            auto try_candidate = [&](const Cmat& phi) {
                if (!phi.allFinite()) return false;
                const Tensor t = matrix_from_eigen(phi);
                if (certify_hopf_isomorphism(from, to, t, tol).verdict != Verdict::Pass) return false;
                found = t;
                return true;
            };

            if (unknowns == 0) return try_candidate(build(Eigen::VectorXcd()));

            auto residual = [&](const Eigen::VectorXcd& z) {
                const Cmat phi = build(z);
                Eigen::VectorXcd out(n * n * n + n + n * n + free_blocks.size());
                const Cmat lhs = comult2 * phi;
                Eigen::Index row = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    const Cmat rhs = phi * comult1[i] * phi.transpose();
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) out(row++) = lhs(p * n + q, i) - rhs(p, q);
                }
                const Cmat ce = eps2 * phi - eps1;
                for (std::size_t i = 0; i < n; ++i) out(row++) = ce(0, i);
                const Cmat cs = S2 * phi - phi * S1;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) out(row++) = cs(i, j);
                std::size_t pos = 0;
                for (std::size_t f = 0; f < free_blocks.size(); ++f) {
                    const auto m = static_cast<Eigen::Index>(null_bases[free_blocks[f]].size());
                    out(row++) = gauge[f].dot(z.segment(pos, m)) - 1.0;
                    pos += m;
                }
                return out;
            };
            MultistartOptions opt;
            opt.starts = 48;
            opt.difference_step = 1e-6;
            opt.root_tol = 1e-9;
            for (const auto& z : quadratic_system_roots(residual, unknowns, rng(), opt))
                if (try_candidate(build(z))) return true;
            return false;
        });
        return found.has_value();
    });
    return found;
}

}  // namespace qtrans
