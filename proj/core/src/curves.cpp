#include "twistspec/curves.hpp"

#include <stdexcept>

namespace twistspec {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'a';
        case Family::B: return 'b';
        case Family::C: return 'c';
        case Family::D: return 'd';
    }
    return '?';
}

std::string curve_name(CurveId c) {
    return family_letter(c.family) + std::to_string(c.index);
}

CurveSystem::CurveSystem(int genus) : genus_(genus) {
    if (genus < 4)
        throw std::invalid_argument("construction requires g >= 4");
}

std::vector<CurveId> CurveSystem::basis() const {
    std::vector<CurveId> out;
    out.reserve(dim());
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int j = 0; j < period(); ++j)
            out.push_back({f, j});
    return out;
}

bool CurveSystem::valid(CurveId c) const {
    return c.index >= 0 && c.index < period();
}

int CurveSystem::index_of(CurveId c) const {
    if (!valid(c))
        throw std::out_of_range("curve index out of range for genus");
    return static_cast<int>(c.family) * period() + c.index;
}

CurveId CurveSystem::curve_at(int position) const {
    if (position < 0 || position >= dim())
        throw std::out_of_range("basis position out of range");
    return {static_cast<Family>(position / period()), position % period()};
}

int CurveSystem::intersection(CurveId u, CurveId v) const {
    if (!valid(u) || !valid(v))
        throw std::out_of_range("curve index out of range for genus");
    if (u.family == v.family) return 0;
    // normalize so that u is the d-curve; everything else is disjoint
    if (v.family == Family::D) std::swap(u, v);
    if (u.family != Family::D) return 0;
    const int p = period();
    const int j = u.index;
    switch (v.family) {
        case Family::A:
        case Family::B:
            return (v.index == j || v.index == (j + 1) % p) ? 1 : 0;
        case Family::C:
            return v.index == j ? 2 : 0;
        default:
            return 0;
    }
}

CurveId CurveSystem::rotate(CurveId c, int steps) const {
    if (!valid(c))
        throw std::out_of_range("curve index out of range for genus");
    const int p = period();
    int idx = (c.index + steps) % p;
    if (idx < 0) idx += p;
    return {c.family, idx};
}

}  // namespace twistspec
