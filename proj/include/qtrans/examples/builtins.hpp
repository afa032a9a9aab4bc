#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"
#include "qtrans/num/cayley.hpp"

#include <string>
#include <vector>

namespace qtrans {

class InvalidTable : public Error {
public:
    using Error::Error;
};

/// A finite group by its multiplication table.
struct GroupTable {
    std::string name;
    std::vector<std::string> elements;
    CayleyTable table;
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;

    std::size_t order() const { return table.size(); }
};

/// Validates the table and fills identity and inverse. Throws InvalidTable.
GroupTable make_group_table(std::string name, std::vector<std::string> elements, CayleyTable table);

GroupTable cyclic_group(std::size_t m);
GroupTable klein_four_group();
/// S3 on {0,1,2}; elements e, (01), (02), (12), (012), (021) with
/// (s t)(x) = s(t(x)).
GroupTable symmetric_group_3();

/// C(G): delta basis, pointwise product, Delta(d_g) = sum_{ab=g} d_a (x) d_b.
FiniteHopfStar function_algebra(const GroupTable& g);
/// C[G]: basis u_g, Delta(u_g) = u_g (x) u_g, u_g^* = u_{g^-1}.
FiniteHopfStar group_algebra(const GroupTable& g);
/// The one-dimensional Hopf algebra C.
FiniteHopfStar trivial_algebra();
/// The eight-dimensional Kac-Paljutkin quantum group on C^4 (+) M_2(C),
/// basis e1..e4, a11, a12, a21, a22.
FiniteHopfStar kac_paljutkin();

/// Names accepted by builtin(): trivial, fn:Z1..fn:Z4, fn:Z2xZ2, fn:S3,
/// grp:Z1..grp:Z4, grp:Z2xZ2, grp:S3, kac_paljutkin.
std::vector<std::string> builtin_names();
/// Throws Error on an unknown name.
FiniteHopfStar builtin(const std::string& name);

/// The five algebras of the acceptance suite, in order: trivial, fn:Z2,
/// fn:S3, grp:S3, kac_paljutkin.
std::vector<std::string> core_builtins();

}  // namespace qtrans
