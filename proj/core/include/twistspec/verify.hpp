#pragma once

#include "twistspec/bounds.hpp"
#include "twistspec/digraph.hpp"
#include "twistspec/perron.hpp"
#include "twistspec/twists.hpp"

#include <string>
#include <vector>

namespace twistspec {

// outcome of a single verification check; genus < 0 marks global checks
struct CheckResult {
    std::string id;
    int genus = -1;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    Rat tol = Rat(1, Int("10000000000"));  // 1e-10
    RotationDir rotation = RotationDir::Plus;
    Orientation orientation = Orientation::ColumnsAsImages;
    bool corrupt_reference_poly = false;  // negative-control test hook
    unsigned rng_seed = 20240901;
};

// Orientation whose g=9 path counts best match the seven per-vertex
// reference count formulas over j in [2, g-2]; ties resolve to columns.
Orientation calibrate_orientation(int genus = 9);

// self-consistency of the closed-form reference constructor (degree,
// palindromy, term count); the corruption hook makes this fail
CheckResult check_reference_poly_integrity(int g, const VerifyOptions& opt);
// computed char poly == closed-form reference poly, bit exact
CheckResult check_charpoly_identity(int g, const VerifyOptions& opt);
// certified log-dilatation inside all three closed-form bounds, width <= 1e-9
CheckResult check_dilatation_sandwich(int g, const VerifyOptions& opt);
// certified spectral radius within 1e-6 of the reference poly's max root modulus
CheckResult check_dominant_root(int g, const VerifyOptions& opt);
// exactly one self-loop, at a_1, multiplicity 1; trace 1
CheckResult check_self_loop_census(int g, const VerifyOptions& opt);
// primitivity exponent <= 2g-1 and full exact-length covers from a_1
CheckResult check_mixing(int g, const VerifyOptions& opt);
// max path count at length g-2 bounded by 10g-21 (calibrated orientation)
CheckResult check_path_count_bound(int g, const VerifyOptions& opt);
// non-gating report: measured counts vs the seven reference formulas
CheckResult check_path_count_formulas_soft(int g, const VerifyOptions& opt);
// closed-form kappa products stay inside their brackets on [10, 10^4]
std::vector<CheckResult> check_asymptotics(const VerifyOptions& opt);
// determinants, cone preservation, oracle equivalence, palindromicity,
// Perron vector, power law
std::vector<CheckResult> check_property_suite(int g, const VerifyOptions& opt);

// every applicable check for each genus in [g_lo, g_hi], plus the global
// asymptotic checks
std::vector<CheckResult> run_verification(int g_lo, int g_hi, const VerifyOptions& opt);

}  // namespace twistspec
