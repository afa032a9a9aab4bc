#include "qtrans/hopf/hopf_algebra.hpp"

#include "qtrans/num/linalg.hpp"

namespace qtrans {

namespace {

bool exact_zero(const Scalar& s) { return s.is_exact() && s.is_zero(); }

void expect_shape(const Tensor& t, const Shape& shape, const char* what) {
    if (t.shape() != shape) throw ShapeMismatch(std::string("FiniteHopfStar: ") + what + " has the wrong shape");
}

}  // namespace

FiniteHopfStar::FiniteHopfStar(std::vector<std::string> basis_names, Tensor mult, Tensor unit, Tensor comult,
                               Tensor counit, Tensor antipode, Tensor star)
    : names_(std::move(basis_names)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      star_(std::move(star)) {
    const std::size_t n = names_.size();
    if (n == 0) throw ShapeMismatch("FiniteHopfStar: dimension must be positive");
    expect_shape(mult_, {n, n, n}, "mult");
    expect_shape(unit_, {n}, "unit");
    expect_shape(comult_, {n, n, n}, "comult");
    expect_shape(counit_, {n}, "counit");
    expect_shape(antipode_, {n, n}, "antipode");
    expect_shape(star_, {n, n}, "star");

    const bool all_exact = mult_.mode() == Mode::Exact && unit_.mode() == Mode::Exact &&
                           comult_.mode() == Mode::Exact && counit_.mode() == Mode::Exact &&
                           antipode_.mode() == Mode::Exact && star_.mode() == Mode::Exact;
    mode_ = all_exact ? Mode::Exact : Mode::Float;

    mult_terms_.resize(n * n);
    comult_terms_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (!exact_zero(mult_(i, j, k)) && !mult_(i, j, k).is_zero(0.0))
                    mult_terms_[i * n + j].push_back({k, 0, mult_(i, j, k)});
                if (!exact_zero(comult_(i, j, k)) && !comult_(i, j, k).is_zero(0.0))
                    comult_terms_[i].push_back({j, k, comult_(i, j, k)});
            }
}

FiniteHopfStar FiniteHopfStar::to_mode(Mode m) const {
    if (m == Mode::Exact && mode_ == Mode::Float)
        throw std::logic_error("FiniteHopfStar::to_mode: cannot convert float constants to exact");
    return FiniteHopfStar(names_, mult_.to_mode(m), unit_.to_mode(m), comult_.to_mode(m), counit_.to_mode(m),
                          antipode_.to_mode(m), star_.to_mode(m));
}

Tensor FiniteHopfStar::basis_vector(std::size_t i) const { return Tensor::unit_vector(dim(), i, mode_); }

Tensor FiniteHopfStar::product(const Tensor& x, const Tensor& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw ShapeMismatch("product: wrong length");
    Tensor out = Tensor::vector(n, mode_);
    for (std::size_t i = 0; i < n; ++i) {
        if (exact_zero(x[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (exact_zero(y[j])) continue;
            const auto& terms = mult_terms_[i * n + j];
            if (terms.empty()) continue;
            const Scalar xy = x[i] * y[j];
            for (const auto& t : terms) out[t.a] += xy * t.c;
        }
    }
    return out;
}

Tensor FiniteHopfStar::coproduct(const Tensor& x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw ShapeMismatch("coproduct: wrong length");
    Tensor out = Tensor::vector(n * n, mode_);
    for (std::size_t i = 0; i < n; ++i) {
        if (exact_zero(x[i])) continue;
        for (const auto& t : comult_terms_[i]) out[t.a * n + t.b] += x[i] * t.c;
    }
    return out;
}

Tensor FiniteHopfStar::tensor_product(const Tensor& X, const Tensor& Y) const {
    const std::size_t n = dim();
    if (X.size() != n * n || Y.size() != n * n) throw ShapeMismatch("tensor_product: wrong length");
    Tensor out = Tensor::vector(n * n, mode_);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
        if (exact_zero(X[ab])) continue;
        const std::size_t a = ab / n, b = ab % n;
        for (std::size_t cd = 0; cd < n * n; ++cd) {
            if (exact_zero(Y[cd])) continue;
            const std::size_t c = cd / n, d = cd % n;
            const auto& left = mult_terms_[a * n + c];
            const auto& right = mult_terms_[b * n + d];
            if (left.empty() || right.empty()) continue;
            const Scalar xy = X[ab] * Y[cd];
            for (const auto& l : left)
                for (const auto& r : right) out[l.a * n + r.a] += xy * l.c * r.c;
        }
    }
    return out;
}

Tensor FiniteHopfStar::outer(const Tensor& x, const Tensor& y) const {
    const std::size_t n = dim();
    Tensor out = Tensor::vector(n * n, mode_);
    for (std::size_t a = 0; a < n; ++a) {
        if (exact_zero(x[a])) continue;
        for (std::size_t b = 0; b < n; ++b)
            if (!exact_zero(y[b])) out[a * n + b] = x[a] * y[b];
    }
    return out;
}

Tensor FiniteHopfStar::antipode_of(const Tensor& x) const { return matmul(antipode_, x); }

Tensor FiniteHopfStar::star_of(const Tensor& x) const { return matmul(star_, conj(x)); }

Tensor FiniteHopfStar::star2_of(const Tensor& X) const {
    const std::size_t n = dim();
    Tensor out = Tensor::vector(n * n, mode_);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
        if (exact_zero(X[ab])) continue;
        const std::size_t a = ab / n, b = ab % n;
        const Scalar c = X[ab].conj();
        for (std::size_t p = 0; p < n; ++p) {
            if (exact_zero(star_(p, a))) continue;
            for (std::size_t q = 0; q < n; ++q)
                if (!exact_zero(star_(q, b))) out[p * n + q] += c * star_(p, a) * star_(q, b);
        }
    }
    return out;
}

Scalar FiniteHopfStar::counit_of(const Tensor& x) const { return dot(counit_, x); }

Tensor FiniteHopfStar::left_multiplication(const Tensor& x) const {
    const std::size_t n = dim();
    Tensor m = Tensor::matrix(n, n, mode_);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, product(x, basis_vector(j)));
    return m;
}

Tensor FiniteHopfStar::right_multiplication(const Tensor& x) const {
    const std::size_t n = dim();
    Tensor m = Tensor::matrix(n, n, mode_);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, product(basis_vector(j), x));
    return m;
}

}  // namespace qtrans
