#pragma once

#include <compare>
#include <string>
#include <vector>

namespace twistspec {

// The curve family lives on a surface with an order-(g-1) rotational
// symmetry: four ring-indexed families a, b, c, d of g-1 curves each.
enum class Family : int { A = 0, B = 1, C = 2, D = 3 };

char family_letter(Family f);

struct CurveId {
    Family family;
    int index;  // always stored reduced mod g-1

    auto operator<=>(const CurveId&) const = default;
};

// short name as used in serialized output and edge lists: "a0", "d7", ...
std::string curve_name(CurveId c);

// Genus-g curve system: the 4(g-1) basis curves, their geometric
// intersection pairing, and the rotation that shifts every ring index.
class CurveSystem {
public:
    // The construction needs at least four handles; smaller genus has no
    // room for the d-curve chain.
    explicit CurveSystem(int genus);

    int genus() const { return genus_; }
    // order of the rotational symmetry (= number of curves per family)
    int period() const { return genus_ - 1; }
    // dimension of the weight space spanned by the basis
    int dim() const { return 4 * (genus_ - 1); }

    // canonical order: a-block, b-block, c-block, d-block, ascending index;
    // fixes matrix row/column indexing everywhere downstream
    std::vector<CurveId> basis() const;

    bool valid(CurveId c) const;

    // position of a curve in the canonical basis order, and its inverse
    int index_of(CurveId c) const;
    CurveId curve_at(int position) const;

    // geometric intersection number; symmetric, zero on the diagonal.
    // The only nonzero pairs: each d_j meets a_j, a_(j+1), b_j, b_(j+1)
    // once and c_j twice, ring indices mod g-1.
    int intersection(CurveId u, CurveId v) const;

    // rotate a curve by `steps` ring positions (index += steps mod g-1)
    CurveId rotate(CurveId c, int steps) const;

private:
    int genus_;
};

}  // namespace twistspec
