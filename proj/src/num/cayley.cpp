#include "qtrans/num/cayley.hpp"

namespace qtrans {

bool is_closed_table(const CayleyTable& t) {
    const std::size_t m = t.size();
    for (const auto& row : t) {
        if (row.size() != m) return false;
        for (auto v : row)
            if (v >= m) return false;
    }
    return true;
}

bool is_associative(const CayleyTable& t) {
    const std::size_t m = t.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
}

bool is_cancellative(const CayleyTable& t) {
    const std::size_t m = t.size();
    for (std::size_t a = 0; a < m; ++a) {
        std::vector<bool> left(m, false), right(m, false);
        for (std::size_t b = 0; b < m; ++b) {
            if (left[t[a][b]] || right[t[b][a]]) return false;
            left[t[a][b]] = right[t[b][a]] = true;
        }
    }
    return true;
}

std::optional<std::size_t> find_identity(const CayleyTable& t) {
    const std::size_t m = t.size();
    for (std::size_t e = 0; e < m; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
        if (ok) return e;
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> inverse_table(const CayleyTable& t, std::size_t identity) {
    const std::size_t m = t.size();
    std::vector<std::size_t> inv(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            if (t[a][b] == identity && t[b][a] == identity) {
                inv[a] = b;
                break;
            }
        if (inv[a] == m) return std::nullopt;
    }
    return inv;
}

bool is_group_table(const CayleyTable& t) {
    if (t.empty() || !is_closed_table(t) || !is_associative(t)) return false;
    auto e = find_identity(t);
    return e && inverse_table(t, *e).has_value();
}

}  // namespace qtrans
