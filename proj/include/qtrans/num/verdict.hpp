#pragma once

#include "qtrans/num/scalar.hpp"

#include <algorithm>
#include <string>

namespace qtrans {

/// Outcome of a residual check. Suspicious means the residual lies above the
/// working tolerance but below kSuspiciousThreshold.
enum class Verdict { Pass, Suspicious, Fail };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Suspicious: return "suspicious";
        case Verdict::Fail: return "fail";
    }
    return "fail";
}

/// Worst of two verdicts.
inline Verdict combine(Verdict a, Verdict b) { return std::max(a, b); }

/// Running maximum of |difference| over a family of identities. Stays exact
/// only while every observed difference is an exact scalar.
struct Residual {
    double value = 0.0;
    bool exact = true;
    bool exact_nonzero = false;

    void observe(const Scalar& diff) {
        if (diff.is_exact()) {
            if (!diff.is_zero()) exact_nonzero = true;
        } else {
            exact = false;
        }
        value = std::max(value, diff.abs());
    }
    void observe_float(double v) {
        exact = false;
        value = std::max(value, v);
    }
    void merge(const Residual& o) {
        value = std::max(value, o.value);
        exact = exact && o.exact;
        exact_nonzero = exact_nonzero || o.exact_nonzero;
    }
    Verdict verdict(double tol = kDefaultTolerance) const {
        if (exact_nonzero) return Verdict::Fail;
        if (exact) return Verdict::Pass;
        if (value <= tol) return Verdict::Pass;
        if (value <= kSuspiciousThreshold) return Verdict::Suspicious;
        return Verdict::Fail;
    }
};

}  // namespace qtrans
