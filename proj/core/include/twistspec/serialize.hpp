#pragma once

#include "twistspec/bounds.hpp"
#include "twistspec/digraph.hpp"
#include "twistspec/twists.hpp"
#include "twistspec/verify.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Deterministic report emitters. Every function returns complete file
// contents: fixed key order, reals as decimal strings (15 significant
// digits), exact values as integer or "p/q" strings, trailing newline,
// no timestamps. Identical inputs give identical bytes.

namespace twistspec {

std::string format_real(double x);
std::string rat_string(const Rat& q);  // "p/q", or "p" for integers

std::string matrix_json(const CurveSystem& sys, const LinearMap& m, RotationDir rot);
std::string matrix_text(const CurveSystem& sys, const LinearMap& m);

std::string charpoly_json(int genus, const IntPolynomial& computed,
                          const IntPolynomial& reference, RotationDir rot);
std::string charpoly_text(int genus, const IntPolynomial& computed,
                          const IntPolynomial& reference);

// perron may be null to omit the eigenvector block
std::string spectrum_json(int genus, int dimension, const RootEnclosure& enc,
                          const RatVector* perron, RotationDir rot, const Rat& tol);
std::string spectrum_text(int genus, const RootEnclosure& enc);

std::string digraph_json(int genus, const Digraph& dg);
// edge-list text: one "u v multiplicity" line per edge

// digraph-level dynamics of the composite map at one genus
struct MixingReport {
    int genus = 0;
    int cap = 0;                       // exponent search cap, 2g-1
    std::optional<int> exponent;       // least r with M^r > 0, if <= cap
    std::vector<std::pair<std::string, Int>> self_loops;
    int cover_lo = 0, cover_hi = 0;    // exact-length cover range tested, from a1
    int first_incomplete = -1;         // length of first non-full cover, -1 if none
    int count_length = 0;              // g-2
    Int max_count;
    std::string max_count_vertex;
    Int count_bound;                   // 10g-21
    std::string rotation, orientation;
};
MixingReport make_mixing_report(int genus, RotationDir rot, Orientation orient);
std::string mixing_json(const MixingReport& r);
std::string mixing_text(const MixingReport& r);

std::string bounds_json(const BoundsReport& b);
std::string bounds_text(const BoundsReport& b);

// one sweep line: closed-form report plus exact matrix invariants
struct SweepRow {
    BoundsReport report;
    int dimension = 0;
    Int trace_value, det_value;
};
SweepRow make_sweep_row(int genus, RotationDir rot, Orientation orient, const Rat& tol);

// fixed column order, documented in the README; kept stable
std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

std::string verify_text(const std::vector<CheckResult>& results);
std::string verify_json(const std::vector<CheckResult>& results);

}  // namespace twistspec
