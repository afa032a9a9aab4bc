#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qtrans {

/// table[a][b] is the index of the product a*b.
using CayleyTable = std::vector<std::vector<std::size_t>>;

bool is_closed_table(const CayleyTable& t);
bool is_associative(const CayleyTable& t);
/// ab = ab' => b = b' and ba = b'a => b = b'.
bool is_cancellative(const CayleyTable& t);
std::optional<std::size_t> find_identity(const CayleyTable& t);
/// Inverse table for a group table, or nullopt if some element has none.
std::optional<std::vector<std::size_t>> inverse_table(const CayleyTable& t, std::size_t identity);
bool is_group_table(const CayleyTable& t);

}  // namespace qtrans
