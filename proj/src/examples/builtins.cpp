#include "qtrans/examples/builtins.hpp"

#include <array>
#include <tuple>

namespace qtrans {

GroupTable make_group_table(std::string name, std::vector<std::string> elements, CayleyTable table) {
    if (table.empty() || elements.size() != table.size()) throw InvalidTable("group table: size mismatch");
    if (!is_group_table(table)) throw InvalidTable("group table: not a group");
    GroupTable g;
    g.name = std::move(name);
    g.elements = std::move(elements);
    g.identity = *find_identity(table);
    g.inverse = *inverse_table(table, g.identity);
    g.table = std::move(table);
    return g;
}

GroupTable cyclic_group(std::size_t m) {
    if (m == 0) throw InvalidTable("cyclic group of order 0");
    std::vector<std::string> names;
    CayleyTable t(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = 0; b < m; ++b) t[a][b] = (a + b) % m;
    }
    return make_group_table("Z" + std::to_string(m), std::move(names), std::move(t));
}

GroupTable klein_four_group() {
    CayleyTable t(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return make_group_table("Z2xZ2", {"00", "01", "10", "11"}, std::move(t));
}

GroupTable symmetric_group_3() {
    const std::vector<std::array<std::size_t, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    CayleyTable t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> c{};
            for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            for (std::size_t k = 0; k < 6; ++k)
                if (perms[k] == c) t[a][b] = k;
        }
    return make_group_table("S3", {"e", "(01)", "(02)", "(12)", "(012)", "(021)"}, std::move(t));
}

FiniteHopfStar function_algebra(const GroupTable& g) {
    const std::size_t m = g.order();
    std::vector<std::string> names;
    Tensor mult({m, m, m}), comult({m, m, m});
    Tensor unit = Tensor::vector(m), counit = Tensor::vector(m);
    Tensor antipode = Tensor::matrix(m, m), star = Tensor::identity(m);
    for (std::size_t a = 0; a < m; ++a) {
        names.push_back("d_" + g.elements[a]);
        mult(a, a, a) = 1;
        unit[a] = 1;
        antipode(g.inverse[a], a) = 1;
        for (std::size_t b = 0; b < m; ++b) comult(g.table[a][b], a, b) = 1;
    }
    counit[g.identity] = 1;
    return FiniteHopfStar(std::move(names), std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                          std::move(antipode), std::move(star));
}

FiniteHopfStar group_algebra(const GroupTable& g) {
    const std::size_t m = g.order();
    std::vector<std::string> names;
    Tensor mult({m, m, m}), comult({m, m, m});
    Tensor unit = Tensor::vector(m), counit = Tensor::vector(m);
    Tensor antipode = Tensor::matrix(m, m), star = Tensor::matrix(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        names.push_back("u_" + g.elements[a]);
        for (std::size_t b = 0; b < m; ++b) mult(a, b, g.table[a][b]) = 1;
        comult(a, a, a) = 1;
        counit[a] = 1;
        antipode(g.inverse[a], a) = 1;
        star(g.inverse[a], a) = 1;
    }
    unit[g.identity] = 1;
    return FiniteHopfStar(std::move(names), std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                          std::move(antipode), std::move(star));
}

FiniteHopfStar trivial_algebra() {
    Tensor one({1, 1, 1});
    one[0] = 1;
    return FiniteHopfStar({"1"}, one, Tensor::from_values({1}), one, Tensor::from_values({1}), Tensor::identity(1),
                          Tensor::identity(1));
}

FiniteHopfStar kac_paljutkin() {
    enum : std::size_t { e1, e2, e3, e4, a11, a12, a21, a22 };
    const std::size_t n = 8;
    const Scalar half = Scalar::ratio(1, 2);
    const Scalar i = Scalar::imaginary_unit();
    const Scalar ih = half * i;

    Tensor mult({n, n, n});
    for (std::size_t k : {e1, e2, e3, e4}) mult(k, k, k) = 1;
    const std::size_t a[2][2] = {{a11, a12}, {a21, a22}};
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q)
            for (std::size_t r = 0; r < 2; ++r) mult(a[p][q], a[q][r], a[p][r]) = 1;

    Tensor unit = Tensor::vector(n);
    for (std::size_t k : {e1, e2, e3, e4, a11, a22}) unit[k] = 1;

    Tensor comult({n, n, n});
    auto add = [&](std::size_t x, std::size_t l, std::size_t r, const Scalar& c) { comult(x, l, r) += c; };
    auto sym = [&](std::size_t x, std::size_t l, std::size_t r, const Scalar& c) {
        add(x, l, r, c);
        add(x, r, l, c);
    };
    // Group-like part of the commutative block.
    add(e1, e1, e1, 1);
    add(e1, e2, e2, 1);
    add(e1, e3, e3, 1);
    add(e1, e4, e4, 1);
    for (std::size_t x : {a11, a12, a21, a22}) add(e1, x, x, half);

    sym(e2, e1, e2, 1);
    sym(e2, e3, e4, 1);
    sym(e2, a11, a22, half);
    add(e2, a21, a12, ih);
    add(e2, a12, a21, -ih);

    sym(e3, e1, e3, 1);
    sym(e3, e2, e4, 1);
    sym(e3, a11, a22, half);
    add(e3, a21, a12, -ih);
    add(e3, a12, a21, ih);

    sym(e4, e1, e4, 1);
    sym(e4, e2, e3, 1);
    add(e4, a11, a11, half);
    add(e4, a22, a22, half);
    add(e4, a12, a12, -half);
    add(e4, a21, a21, -half);

    sym(a11, e1, a11, 1);
    sym(a11, e2, a22, 1);
    sym(a11, e3, a22, 1);
    sym(a11, e4, a11, 1);

    sym(a22, e1, a22, 1);
    sym(a22, e2, a11, 1);
    sym(a22, e3, a11, 1);
    sym(a22, e4, a22, 1);

    sym(a12, e1, a12, 1);
    add(a12, e2, a21, i);
    add(a12, a21, e2, -i);
    add(a12, e3, a21, -i);
    add(a12, a21, e3, i);
    sym(a12, e4, a12, -1);

    sym(a21, e1, a21, 1);
    add(a21, e2, a12, -i);
    add(a21, a12, e2, i);
    add(a21, e3, a12, i);
    add(a21, a12, e3, -i);
    sym(a21, e4, a21, -1);

    Tensor counit = Tensor::vector(n);
    counit[e1] = 1;

    Tensor antipode = Tensor::matrix(n, n), star = Tensor::matrix(n, n);
    for (std::size_t k : {e1, e2, e3, e4}) {
        antipode(k, k) = 1;
        star(k, k) = 1;
    }
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            antipode(a[q][p], a[p][q]) = 1;
            star(a[q][p], a[p][q]) = 1;
        }
    return FiniteHopfStar({"e1", "e2", "e3", "e4", "a11", "a12", "a21", "a22"}, std::move(mult), std::move(unit),
                          std::move(comult), std::move(counit), std::move(antipode), std::move(star));
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out = {"trivial"};
    for (const char* prefix : {"fn:", "grp:"})
        for (const char* g : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3"}) out.push_back(std::string(prefix) + g);
    out.push_back("kac_paljutkin");
    return out;
}

std::vector<std::string> core_builtins() { return {"trivial", "fn:Z2", "fn:S3", "grp:S3", "kac_paljutkin"}; }

FiniteHopfStar builtin(const std::string& name) {
    if (name == "trivial") return trivial_algebra();
    if (name == "kac_paljutkin") return kac_paljutkin();
    auto group = [&](const std::string& g) -> GroupTable {
        if (g == "Z2xZ2") return klein_four_group();
        if (g == "S3") return symmetric_group_3();
        if (g.size() == 2 && g[0] == 'Z' && g[1] >= '1' && g[1] <= '4') return cyclic_group(g[1] - '0');
        throw Error("unknown group: " + g);
    };
    if (name.rfind("fn:", 0) == 0) return function_algebra(group(name.substr(3)));
    if (name.rfind("grp:", 0) == 0) return group_algebra(group(name.substr(4)));
    throw Error("unknown builtin algebra: " + name);
}

}  // namespace qtrans
