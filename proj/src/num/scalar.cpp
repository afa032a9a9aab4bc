#include "qtrans/num/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qtrans {

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

namespace {

std::complex<double> as_complex(const GaussianRational& q) {
    return {q.re.get_d(), q.im.get_d()};
}

}  // namespace

Scalar::Scalar(GaussianRational q) : value_(std::move(q)) {
    auto& g = std::get<GaussianRational>(value_);
    g.re.canonicalize();
    g.im.canonicalize();
}

Scalar Scalar::exact(const mpq_class& re, const mpq_class& im) {
    return Scalar(GaussianRational{re, im});
}

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar::ratio: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(GaussianRational{q, 0});
}

Scalar Scalar::imaginary_unit(Mode m) {
    if (m == Mode::Float) return Scalar(std::complex<double>(0.0, 1.0));
    return Scalar(GaussianRational{0, 1});
}

std::complex<double> Scalar::to_complex() const {
    if (auto* q = std::get_if<GaussianRational>(&value_)) return as_complex(*q);
    return std::get<std::complex<double>>(value_);
}

const GaussianRational& Scalar::exact_value() const {
    if (auto* q = std::get_if<GaussianRational>(&value_)) return *q;
    throw std::logic_error("Scalar::exact_value on a float scalar");
}

Scalar Scalar::to_mode(Mode m) const {
    if (m == mode()) return *this;
    if (m == Mode::Float) return Scalar(to_complex());
    throw std::logic_error("Scalar::to_mode: cannot convert a float scalar to exact");
}

Scalar Scalar::conj() const {
    if (auto* q = std::get_if<GaussianRational>(&value_)) return Scalar(GaussianRational{q->re, -q->im});
    return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

double Scalar::abs() const { return std::abs(to_complex()); }

bool Scalar::is_zero(double tol) const {
    if (auto* q = std::get_if<GaussianRational>(&value_)) return sgn(q->re) == 0 && sgn(q->im) == 0;
    return std::abs(std::get<std::complex<double>>(value_)) <= tol;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_exact() && o.is_exact()) {
        auto& a = std::get<GaussianRational>(value_);
        const auto& b = std::get<GaussianRational>(o.value_);
        a.re += b.re;
        a.im += b.im;
    } else {
        value_ = to_complex() + o.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_exact() && o.is_exact()) {
        auto& a = std::get<GaussianRational>(value_);
        const auto& b = std::get<GaussianRational>(o.value_);
        a.re -= b.re;
        a.im -= b.im;
    } else {
        value_ = to_complex() - o.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_exact() && o.is_exact()) {
        auto& a = std::get<GaussianRational>(value_);
        const auto& b = std::get<GaussianRational>(o.value_);
        if (sgn(a.im) == 0 && sgn(b.im) == 0) {
            a.re *= b.re;
        } else {
            mpq_class re = a.re * b.re - a.im * b.im;
            mpq_class im = a.re * b.im + a.im * b.re;
            a.re = std::move(re);
            a.im = std::move(im);
        }
    } else {
        value_ = to_complex() * o.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_exact() && o.is_zero()) throw std::domain_error("Scalar: division by exact zero");
    if (is_exact() && o.is_exact()) {
        auto& a = std::get<GaussianRational>(value_);
        const auto& b = std::get<GaussianRational>(o.value_);
        if (sgn(b.im) == 0) {
            a.re /= b.re;
            a.im /= b.re;
        } else {
            mpq_class den = b.re * b.re + b.im * b.im;
            mpq_class re = (a.re * b.re + a.im * b.im) / den;
            mpq_class im = (a.im * b.re - a.re * b.im) / den;
            a.re = std::move(re);
            a.im = std::move(im);
        }
    } else {
        value_ = to_complex() / o.to_complex();
    }
    return *this;
}

Scalar Scalar::operator-() const {
    if (auto* q = std::get_if<GaussianRational>(&value_)) return Scalar(GaussianRational{-q->re, -q->im});
    return Scalar(-std::get<std::complex<double>>(value_));
}

std::string Scalar::to_string() const {
    std::ostringstream os;
    if (auto* q = std::get_if<GaussianRational>(&value_)) {
        os << rational_to_string(q->re);
        if (sgn(q->im) != 0) os << (sgn(q->im) > 0 ? "+" : "") << rational_to_string(q->im) << "i";
    } else {
        auto z = std::get<std::complex<double>>(value_);
        os << z.real();
        if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    }
    return os.str();
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact() && b.is_exact()) return (a - b).is_zero();
    return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

std::string rational_to_string(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_str();
}

std::optional<mpq_class> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') pos = 1;
    bool seen_slash = false;
    std::size_t digits = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash || digits == 0) return std::nullopt;
            seen_slash = true;
            digits = 0;
        } else if (c >= '0' && c <= '9') {
            ++digits;
        } else {
            return std::nullopt;
        }
    }
    if (digits == 0) return std::nullopt;
    std::string body = s[0] == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(body, 10) != 0) return std::nullopt;
    if (sgn(q.get_den()) == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

namespace {

std::optional<mpq_class> snap_real(double x, long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // Continued-fraction convergents h/k.
    long double h_prev = 1, h = std::floor(static_cast<long double>(x));
    long double k_prev = 0, k = 1;
    long double rem = static_cast<long double>(x) - h;
    for (int iter = 0; iter < 64; ++iter) {
        if (std::fabs(static_cast<double>(h / k) - x) <= tol) {
            mpq_class q(static_cast<long>(h), static_cast<long>(k));
            q.canonicalize();
            return q;
        }
        if (rem == 0) break;
        long double inv = 1 / rem;
        long double a = std::floor(inv);
        rem = inv - a;
        long double h_next = a * h + h_prev;
        long double k_next = a * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Scalar> snap_to_gaussian_rational(const Scalar& z, long max_den, double tol) {
    if (z.is_exact()) return z;
    auto c = z.to_complex();
    auto re = snap_real(c.real(), max_den, tol);
    auto im = snap_real(c.imag(), max_den, tol);
    if (!re || !im) return std::nullopt;
    return Scalar::exact(*re, *im);
}

}  // namespace qtrans
