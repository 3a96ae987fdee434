#pragma once

#include "twistspec/curves.hpp"
#include "twistspec/linear_map.hpp"

namespace twistspec {

// direction the rotation shifts ring indices
enum class RotationDir { Plus, Minus };

const char* rotation_label(RotationDir dir);  // "plus" / "minus"

// Dehn twist about x, acting on cone weights: mu -> mu + i(mu, x) * x.
// The same rule covers the inverse twist (handedness is invisible on the
// carried cone), so every twist matrix here is I plus a nonnegative
// rank-one update with zero diagonal increment.
LinearMap twist_map(const CurveSystem& sys, CurveId x);

// permutation matrix of the order-(g-1) rotation
LinearMap rotation_map(const CurveSystem& sys, RotationDir dir = RotationDir::Plus);

// Transition matrix of the composite map: twist about d_0, then c_0, then
// b_1, then a_0, then rotate. Nonnegative, trace 1, determinant 1.
LinearMap phi_matrix(const CurveSystem& sys, RotationDir dir = RotationDir::Plus);
LinearMap phi_matrix(int genus, RotationDir dir = RotationDir::Plus);

// Independent evaluation path for tests: apply the four twist rules and the
// rotation to a weight vector directly, never forming a matrix.
WeightVector sequential_phi_apply(const CurveSystem& sys, const WeightVector& w,
                                  RotationDir dir = RotationDir::Plus);

// Determinant of the composite map through its factor structure: every
// twist factor is unipotent ((M - I)^2 = 0, so det 1) and the rotation is a
// permutation whose parity is computed from its cycles. Falls back to
// fraction-free elimination if any structural check fails.
Int phi_determinant(const CurveSystem& sys, RotationDir dir = RotationDir::Plus);

// Resolves the rotation direction: the composite map must have its single
// diagonal entry at a_1 (the unique self-loop); only one direction does.
RotationDir calibrate_rotation(int genus = 9);

}  // namespace twistspec
