#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"

#include <string>

namespace qtrans {

/// Malformed or inconsistent algebra document.
class DocumentError : public Error {
public:
    using Error::Error;
};

/// JSON algebra document:
///   "mode"     "exact" | "float" (optional, default float)
///   "dim"      n
///   "basis"    n names
///   "unit", "counit"      n scalars
///   "mult", "comult"      sparse [i, j, k, re, im] entries, 0-based
///   "antipode", "star"    n rows of n scalars
/// A scalar is [re, im]; exact documents write each part as a "p/q"
/// string, float documents as JSON numbers.
///
/// serialize_document() is canonical (fixed key order, sparse entries in
/// index order, zeros omitted), so exact documents round-trip byte for byte.
FiniteHopfStar parse_document(const std::string& text);
std::string serialize_document(const FiniteHopfStar& h);

FiniteHopfStar load_document(const std::string& path);
void save_document(const std::string& path, const FiniteHopfStar& h);

}  // namespace qtrans
