#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <optional>
#include <string>
#include <variant>

namespace qtrans {

/// Arithmetic mode of a scalar. Exact values are Gaussian rationals.
enum class Mode { Float, Exact };

std::string to_string(Mode m);

/// Default absolute / scale-relative tolerance for float-mode comparisons.
inline constexpr double kDefaultTolerance = 1e-9;
/// Residuals in (tolerance, kSuspiciousThreshold] are reported as suspicious.
inline constexpr double kSuspiciousThreshold = 1e-6;

/// a + b i with a, b in Q.
struct GaussianRational {
    mpq_class re{0};
    mpq_class im{0};
};

/// A complex number that is either a double-precision float or an exact
/// Gaussian rational. Binary operations on two exact values stay exact;
/// anything touching a float value is promoted to float.
///
/// The default-constructed value is the exact zero, which acts as a neutral
/// element in both modes.
class Scalar {
public:
    Scalar() : value_(GaussianRational{}) {}

    template <std::integral I>
    Scalar(I n) : value_(GaussianRational{mpq_class(static_cast<long>(n)), mpq_class(0)}) {}

    template <std::floating_point F>
    Scalar(F re) : value_(std::complex<double>(static_cast<double>(re), 0.0)) {}

    Scalar(std::complex<double> z) : value_(z) {}
    Scalar(double re, double im) : value_(std::complex<double>(re, im)) {}
    Scalar(GaussianRational q);

    static Scalar exact(const mpq_class& re, const mpq_class& im = 0);
    /// num/den + 0 i, exact.
    static Scalar ratio(long num, long den);
    static Scalar imaginary_unit(Mode m = Mode::Exact);

    Mode mode() const { return is_exact() ? Mode::Exact : Mode::Float; }
    bool is_exact() const { return std::holds_alternative<GaussianRational>(value_); }

    std::complex<double> to_complex() const;
    double real() const { return to_complex().real(); }
    double imag() const { return to_complex().imag(); }
    /// Throws std::logic_error on a float scalar.
    const GaussianRational& exact_value() const;

    /// Exact -> float is lossy-by-rounding; float -> exact throws.
    Scalar to_mode(Mode m) const;

    Scalar conj() const;
    double abs() const;

    /// Exact values compare with zero exactly; float values with |z| <= tol.
    bool is_zero(double tol = kDefaultTolerance) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    /// "re+imi" for humans; exact parts printed as p/q.
    std::string to_string() const;

private:
    std::variant<std::complex<double>, GaussianRational> value_;
};

/// Exact-exact pairs compare exactly; otherwise |a - b| <= tol.
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance);

/// Canonical string for a rational: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const mpq_class& q);
/// Parses "p" or "p/q" (optionally signed). Returns nullopt on malformed input.
std::optional<mpq_class> parse_rational(const std::string& s);

/// Recovers a Gaussian rational with denominators <= max_den lying within
/// tol of z (continued fractions on each part). nullopt if none exists.
std::optional<Scalar> snap_to_gaussian_rational(const Scalar& z, long max_den = 4096,
                                                double tol = 1e-10);

}  // namespace qtrans
