#include "twistspec/bounds.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace twistspec {

namespace {

double down(double x) { return std::nextafter(x, -HUGE_VAL); }
double up(double x) { return std::nextafter(x, HUGE_VAL); }

// directed conversions; mpq_get_d truncates toward zero
double rat_down(const Rat& q) {
    const double d = q.get_d();
    return q >= 0 ? d : down(d);
}
double rat_up(const Rat& q) {
    const double d = q.get_d();
    return q >= 0 ? up(d) : d;
}

}  // namespace

BoundsReport closed_form_bounds(int g) {
    if (g < 2) throw std::invalid_argument("bounds require g >= 2");
    BoundsReport r;
    r.genus = g;
    if (g >= 4) {
        r.dil_lower = std::log(4.0 * g - 4) / (2.0 * g - 2);
        r.dil_upper = std::log(10.0 * g - 21) / (g - 2.0);
        r.dil_upper_sharp = 3.0 * std::log(4.0 * g - 4) / (4.0 * g - 4);
    }
    r.dil_in_hypothesis = g > 4;
    r.ellC_lower = Rat(1, 2 * g - 1);
    r.kappa_upper = 2.0 / std::log(g - 0.5);
    r.filling_floor = 2 * g - 1;
    return r;
}

Interval log_interval(const RootEnclosure& enc) {
    if (enc.lower <= 0)
        throw std::invalid_argument("log interval requires a positive enclosure");
    Interval out;
    out.lo = down(std::log(rat_down(enc.lower)));
    out.hi = up(std::log(rat_up(enc.upper)));
    return out;
}

std::pair<Interval, double> kappa_interval(int g, Interval log_dil) {
    if (!(log_dil.lo > 0))
        throw std::invalid_argument("kappa interval requires a positive log-dilatation");
    const Rat ell(1, 2 * g - 1);
    Interval kl;
    kl.lo = down(rat_down(ell) / up(log_dil.hi));
    kl.hi = up(rat_up(ell) / down(log_dil.lo));
    return {kl, closed_form_bounds(g).kappa_upper};
}

bool euler_identity_check(long long i, long long F, long long g) {
    if (i < 1 || F < 1) throw std::invalid_argument("need i >= 1 and F >= 1");
    return i - F == 2 * g - 2;
}

std::vector<AsymptoticRow> asymptotic_report(int g_min, int g_max, int samples) {
    if (g_min < 4 || g_min > g_max)
        throw std::invalid_argument("need 4 <= g_min <= g_max");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    std::set<int> gs;
    if (samples == 1 || g_min == g_max) {
        gs.insert(g_min);
    } else {
        const double la = std::log(static_cast<double>(g_min));
        const double lb = std::log(static_cast<double>(g_max));
        for (int k = 0; k < samples; ++k) {
            const double t = la + (lb - la) * k / (samples - 1);
            int g = static_cast<int>(std::lround(std::exp(t)));
            g = std::min(std::max(g, g_min), g_max);
            gs.insert(g);
        }
    }
    std::vector<AsymptoticRow> out;
    out.reserve(gs.size());
    for (int g : gs) {
        const double logg = std::log(static_cast<double>(g));
        const double dil_up = std::log(10.0 * g - 21) / (g - 2.0);
        // kappa >= ellC / log(lambda) >= (1/(2g-1)) / dil_upper
        const double kl = 1.0 / ((2.0 * g - 1) * dil_up);
        out.push_back({g, kl * logg, closed_form_bounds(g).kappa_upper * logg});
    }
    return out;
}

}  // namespace twistspec
