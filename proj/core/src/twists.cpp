#include "twistspec/twists.hpp"

#include <stdexcept>

namespace twistspec {

const char* rotation_label(RotationDir dir) {
    return dir == RotationDir::Plus ? "plus" : "minus";
}

LinearMap twist_map(const CurveSystem& sys, CurveId x) {
    if (!sys.valid(x))
        throw std::out_of_range("twist curve out of range for genus");
    LinearMap m = LinearMap::identity(sys.dim());
    const int xi = sys.index_of(x);
    for (CurveId v : sys.basis()) {
        const int c = sys.intersection(v, x);
        if (c != 0) m.at(xi, sys.index_of(v)) += c;
    }
    return m;
}

LinearMap rotation_map(const CurveSystem& sys, RotationDir dir) {
    LinearMap m(sys.dim());
    const int step = dir == RotationDir::Plus ? 1 : -1;
    for (CurveId u : sys.basis())
        m.at(sys.index_of(sys.rotate(u, step)), sys.index_of(u)) = 1;
    return m;
}

LinearMap phi_matrix(const CurveSystem& sys, RotationDir dir) {
    // rightmost factor acts first
    LinearMap m = twist_map(sys, {Family::D, 0});
    m = mul(twist_map(sys, {Family::C, 0}), m);
    m = mul(twist_map(sys, {Family::B, 1}), m);
    m = mul(twist_map(sys, {Family::A, 0}), m);
    return mul(rotation_map(sys, dir), m);
}

LinearMap phi_matrix(int genus, RotationDir dir) {
    return phi_matrix(CurveSystem(genus), dir);
}

namespace {

void twist_rule_in_place(const CurveSystem& sys, WeightVector& w, CurveId x) {
    Int s = 0;
    for (CurveId v : sys.basis()) {
        const int c = sys.intersection(v, x);
        if (c != 0) s += c * w[sys.index_of(v)];
    }
    w[sys.index_of(x)] += s;
}

}  // namespace

WeightVector sequential_phi_apply(const CurveSystem& sys, const WeightVector& w,
                                  RotationDir dir) {
    if (w.size() != static_cast<size_t>(sys.dim()))
        throw std::invalid_argument("weight vector dimension mismatch");
    WeightVector cur = w;
    twist_rule_in_place(sys, cur, {Family::D, 0});
    twist_rule_in_place(sys, cur, {Family::C, 0});
    twist_rule_in_place(sys, cur, {Family::B, 1});
    twist_rule_in_place(sys, cur, {Family::A, 0});
    WeightVector out(cur.size());
    const int step = dir == RotationDir::Plus ? 1 : -1;
    for (CurveId u : sys.basis())
        out[sys.index_of(sys.rotate(u, step))] = cur[sys.index_of(u)];
    return out;
}

Int phi_determinant(const CurveSystem& sys, RotationDir dir) {
    const int n = sys.dim();
    bool structural = true;

    // each twist factor: (M - I)^2 = 0 forces det = 1
    for (CurveId x : {CurveId{Family::D, 0}, CurveId{Family::C, 0}, CurveId{Family::B, 1},
                      CurveId{Family::A, 0}}) {
        LinearMap b = twist_map(sys, x);
        for (int i = 0; i < n; ++i) b.at(i, i) -= 1;
        for (const Int& e : mul(b, b).a) structural = structural && e == 0;
    }

    // rotation: permutation matrix, det = parity from the cycle count
    const LinearMap r = rotation_map(sys, dir);
    std::vector<int> dest(static_cast<size_t>(n), -1);
    for (int c = 0; c < n && structural; ++c) {
        int nz = 0;
        for (int row = 0; row < n; ++row) {
            if (r.at(row, c) == 0) continue;
            structural = structural && r.at(row, c) == 1;
            dest[static_cast<size_t>(c)] = row;
            ++nz;
        }
        structural = structural && nz == 1;
    }
    if (!structural) return bareiss_det(phi_matrix(sys, dir));

    int cycles = 0;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        ++cycles;
        for (int u = v; !seen[static_cast<size_t>(u)]; u = dest[static_cast<size_t>(u)])
            seen[static_cast<size_t>(u)] = 1;
    }
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

RotationDir calibrate_rotation(int genus) {
    const CurveSystem sys(genus);
    const int a1 = sys.index_of({Family::A, 1});
    for (RotationDir dir : {RotationDir::Plus, RotationDir::Minus}) {
        const LinearMap m = phi_matrix(sys, dir);
        bool only_a1 = true;
        for (int i = 0; i < m.n; ++i) {
            const bool want = (i == a1);
            if ((m.at(i, i) != 0) != want || (want && m.at(i, i) != 1)) {
                only_a1 = false;
                break;
            }
        }
        if (only_a1) return dir;
    }
    // both directions miss the expected self-loop pattern; keep the primary
    return RotationDir::Plus;
}

}  // namespace twistspec
