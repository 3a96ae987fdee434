#pragma once

#include "twistspec/perron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistspec {

// closed double interval with outward-rounded endpoints
struct Interval {
    double lo = 0, hi = 0;
};

// Per-genus record of the dilatation enclosure, every closed-form bound,
// the mixing exponent, and the Lipschitz-constant interval.
struct BoundsReport {
    int genus = 0;

    std::optional<RootEnclosure> dilatation;  // certified spectral radius
    std::optional<Interval> log_dilatation;

    // closed forms (natural logs): evaluated for g >= 4; the bounds'
    // stated hypothesis is the strict g > 4
    std::optional<double> dil_lower;        // log(4g-4)/(2g-2)
    std::optional<double> dil_upper;        // log(10g-21)/(g-2)
    std::optional<double> dil_upper_sharp;  // 3*log(4g-4)/(4g-4)
    bool dil_in_hypothesis = false;         // g > 4

    Rat ellC_lower;                      // 1/(2g-1), exact
    std::optional<Interval> kappa_lower; // ellC_lower / log_dilatation
    double kappa_upper = 0;              // 2/log(g - 1/2)
    std::optional<int> mixing_exponent;
    int filling_floor = 0;               // 2g-1

    // convention metadata carried into every serialized report
    std::string rotation = "plus";
    std::string orientation = "columns";
    std::string dilatation_source;  // "certified-enclosure" or "closed-form-upper"
};

// evaluate all closed forms; g >= 2 (dilatation bound fields need g >= 4)
BoundsReport closed_form_bounds(int g);

// outward-rounded natural log of a positive enclosure
Interval log_interval(const RootEnclosure& enc);

// interval quotient ellC_lower / log_dil with outward rounding, paired with
// the closed-form kappa upper bound; log_dil must be positive
std::pair<Interval, double> kappa_interval(int g, Interval log_dil);

// Euler-characteristic identity for a filling curve pair with i transverse
// intersections and F complementary disks: i - F = 2g - 2
bool euler_identity_check(long long i, long long F, long long g);

struct AsymptoticRow {
    int genus;
    double kappa_lower_times_log_g;  // lower bound on kappa_g, times log g
    double kappa_upper_times_log_g;
};

// samples genus values log-uniformly in [g_min, g_max] and evaluates both
// kappa products; the kappa lower bound uses the closed-form dilatation
// upper bound, which keeps it a valid lower bound
std::vector<AsymptoticRow> asymptotic_report(int g_min, int g_max, int samples);

}  // namespace twistspec
