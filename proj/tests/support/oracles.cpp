#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

namespace {

cplx entry(const qtrans::Tensor& t, std::size_t i, std::size_t j, std::size_t k) { return t(i, j, k).to_complex(); }

bool near(cplx a, cplx b) { return std::abs(a - b) < 1e-9; }

}  // namespace

std::vector<std::array<int, 3>> s3_permutations() {
    return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
}

qtrans::CayleyTable s3_table() {
    const auto p = s3_permutations();
    qtrans::CayleyTable t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = p[a][p[b][x]];
            t[a][b] = std::find(p.begin(), p.end(), c) - p.begin();
        }
    return t;
}

std::vector<std::vector<double>> s3_character_table() {
    std::vector<std::vector<double>> rows(3, std::vector<double>(6));
    const auto p = s3_permutations();
    for (std::size_t g = 0; g < 6; ++g) {
        int inversions = 0, fixed = 0;
        for (int i = 0; i < 3; ++i) {
            fixed += p[g][i] == i;
            for (int j = i + 1; j < 3; ++j) inversions += p[g][i] > p[g][j];
        }
        rows[0][g] = 1;
        rows[1][g] = inversions % 2 ? -1 : 1;
        rows[2][g] = fixed - 1;
    }
    return rows;
}

std::size_t function_algebra_translation_count(const qtrans::FiniteHopfStar& h) {
    const std::size_t n = h.dim();
    const auto& D = h.comult();
    std::vector<std::size_t> f(n, 0);
    std::size_t count = 0;
    while (true) {
        // alpha(d_x) = sum_{f(y) = x} d_y, so A[y][x] = [f(y) = x].
        // Delta(alpha d_x)[p][q] = sum_y [f(y)=x] D[y][p][q]
        // (alpha (x) id)(Delta d_x)[p][q] = sum_k D[x][k][q] [f(p)=k] = D[x][f(p)][q]
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t p = 0; p < n && ok; ++p)
                for (std::size_t q = 0; q < n && ok; ++q) {
                    cplx lhs = 0;
                    for (std::size_t y = 0; y < n; ++y)
                        if (f[y] == x) lhs += entry(D, y, p, q);
                    ok = near(lhs, entry(D, x, f[p], q));
                }
        count += ok;
        std::size_t i = 0;
        while (i < n && ++f[i] == n) f[i++] = 0;
        if (i == n) break;
    }
    return count;
}

std::size_t group_algebra_character_count(const qtrans::FiniteHopfStar& h) {
    const std::size_t n = h.dim();
    const auto& M = h.mult();
    std::vector<cplx> roots(n);
    for (std::size_t r = 0; r < n; ++r) roots[r] = std::polar(1.0, 2 * M_PI * double(r) / double(n));
    std::vector<std::size_t> a(n, 0);
    std::size_t count = 0;
    while (true) {
        bool ok = true;
        cplx one = 0;
        for (std::size_t i = 0; i < n; ++i) one += h.unit()[i].to_complex() * roots[a[i]];
        ok = near(one, 1);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                cplx prod = 0;
                for (std::size_t k = 0; k < n; ++k) prod += entry(M, i, j, k) * roots[a[k]];
                ok = near(prod, roots[a[i]] * roots[a[j]]);
            }
        count += ok;
        std::size_t i = 0;
        while (i < n && ++a[i] == n) a[i++] = 0;
        if (i == n) break;
    }
    return count;
}

std::size_t matrix_unit_character_count(const qtrans::FiniteHopfStar& h) {
    const std::size_t n = h.dim();
    const auto& M = h.mult();
    std::vector<std::size_t> diagonal;
    for (std::size_t i = 0; i < n; ++i)
        if (near(entry(M, i, i, i), 1)) diagonal.push_back(i);
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << diagonal.size()); ++mask) {
        std::vector<cplx> chi(n, 0);
        for (std::size_t b = 0; b < diagonal.size(); ++b) chi[diagonal[b]] = (mask >> b) & 1;
        bool ok = true;
        cplx one = 0;
        for (std::size_t i = 0; i < n; ++i) one += h.unit()[i].to_complex() * chi[i];
        ok = near(one, 1);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                cplx prod = 0;
                for (std::size_t k = 0; k < n; ++k) prod += entry(M, i, j, k) * chi[k];
                ok = near(prod, chi[i] * chi[j]);
            }
        count += ok;
    }
    return count;
}

bool tables_isomorphic(const qtrans::CayleyTable& a, const qtrans::CayleyTable& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t x = 0; x < a.size() && ok; ++x)
            for (std::size_t y = 0; y < a.size() && ok; ++y) ok = p[a[x][y]] == b[p[x]][p[y]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

qtrans::Tensor z2_fourier_matrix() {
    const qtrans::Scalar half = qtrans::Scalar::ratio(1, 2);
    return qtrans::Tensor::from_rows({{half, half}, {half, -half}});
}

double max_difference(const qtrans::Tensor& a, const qtrans::Tensor& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i].to_complex() - b[i].to_complex()));
    return m;
}

}  // namespace oracle
