#include "twistspec/perron.hpp"

#include "twistspec/digraph.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace twistspec {

namespace {

// rational upper/lower bounds on sqrt(q), q >= 0, accurate to ~2^-64
Rat sqrt_bound(const Rat& q, bool upper) {
    if (q < 0) throw std::invalid_argument("sqrt of negative rational");
    const Int num = q.get_num(), den = q.get_den();
    Int scaled = num * den;
    scaled <<= 128;
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());  // s^2 <= scaled
    Int d = den;
    d <<= 64;
    Rat r(upper ? s + 1 : s, d);
    r.canonicalize();
    return r;
}

void cw_ratios(const std::vector<Int>& w, const std::vector<Int>& v, Rat& lo, Rat& hi) {
    for (size_t i = 0; i < w.size(); ++i) {
        Rat r(w[i], v[i]);
        r.canonicalize();
        if (i == 0 || r < lo) lo = r;
        if (i == 0 || r > hi) hi = r;
    }
}

}  // namespace

RootEnclosure perron_root(const LinearMap& m, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!nonnegative(m)) throw std::invalid_argument("perron_root requires a nonnegative matrix");
    if (m.n == 0) throw std::invalid_argument("empty matrix");
    if (!is_strongly_connected(m))
        throw std::invalid_argument("perron_root requires an irreducible matrix");

    std::vector<Int> v(m.n, 1);
    for (long iter = 0; iter < 500000; ++iter) {
        std::vector<Int> w = twistspec::apply(m, v);
        Rat lo, hi;
        cw_ratios(w, v, lo, hi);
        if (hi - lo <= tol) return {lo, hi};
        v = std::move(w);
        if ((iter & 255) == 255) {
            // keep iterate entries small; scaling does not change the ratios
            Int g = v[0];
            for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g > 1)
                for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
    throw std::runtime_error("perron_root: enclosure did not reach tolerance");
}

RootEnclosure perron_root_power(const LinearMap& m, unsigned k, const Rat& tol) {
    if (k == 0) throw std::invalid_argument("power must be positive");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!nonnegative(m)) throw std::invalid_argument("perron_root requires a nonnegative matrix");
    if (m.n == 0) throw std::invalid_argument("empty matrix");
    if (!is_strongly_connected(m))
        throw std::invalid_argument("perron_root requires an irreducible matrix");

    std::vector<Int> v(m.n, 1);
    for (long iter = 0; iter < 500000; ++iter) {
        std::vector<Int> w = v;
        for (unsigned s = 0; s < k; ++s) w = twistspec::apply(m, w);
        Rat lo, hi;
        cw_ratios(w, v, lo, hi);
        if (hi - lo <= tol) return {lo, hi};
        v = std::move(w);
        Int g = v[0];
        for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    throw std::runtime_error("perron_root_power: enclosure did not reach tolerance");
}

RatVector perron_vector(const LinearMap& m, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!nonnegative(m)) throw std::invalid_argument("perron_vector requires a nonnegative matrix");
    if (m.n == 0) throw std::invalid_argument("empty matrix");
    if (!is_strongly_connected(m) || graph_period(m) != 1)
        throw std::invalid_argument("perron_vector requires a primitive matrix");

    std::vector<Int> v(m.n, 1);
    for (long iter = 0; iter < 500000; ++iter) {
        std::vector<Int> w = twistspec::apply(m, v);
        Rat lo, hi;
        cw_ratios(w, v, lo, hi);
        const Rat lambda = (lo + hi) / 2;
        // residual of the sum-normalized iterate against the midpoint:
        // ||Mu - lambda u||_inf <= tol*lambda with u = v / sum(v)
        Int sum = 0;
        for (const Int& x : v) sum += x;
        const Rat budget = tol * lambda * Rat(sum);
        bool ok = true;
        for (int i = 0; i < m.n && ok; ++i) {
            Rat resid = Rat(w[i]) - lambda * Rat(v[i]);
            if (abs(resid) > budget) ok = false;
        }
        if (ok) {
            RatVector u(m.n);
            for (int i = 0; i < m.n; ++i) {
                u[i] = Rat(v[i], sum);
                u[i].canonicalize();
            }
            return u;
        }
        v = std::move(w);
    }
    throw std::runtime_error("perron_vector: residual did not reach tolerance");
}

namespace {

struct CRat {
    Rat re, im;
};

CRat cmul(const CRat& x, const CRat& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

CRat csub(const CRat& x, const CRat& y) { return {x.re - y.re, x.im - y.im}; }

CRat cdiv(const CRat& x, const CRat& y) {
    const Rat d = y.re * y.re + y.im * y.im;
    if (d == 0) throw std::invalid_argument("complex division by zero");
    return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}

Rat cnorm2(const CRat& x) { return x.re * x.re + x.im * x.im; }

// Horner evaluation of an integer polynomial at an exact complex rational
CRat ceval(const IntPolynomial& p, const CRat& z) {
    CRat acc{Rat(0), Rat(0)};
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = cmul(acc, z);
        acc.re += p.c[i];
    }
    return acc;
}

// Cauchy bound: every root has modulus <= 1 + max |c_i| / |lead|
Rat cauchy_bound(const IntPolynomial& p) {
    const Int& lead = p.c.back();
    Rat best = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        Rat r(abs(p.c[i]), abs(lead));
        r.canonicalize();
        if (r > best) best = r;
    }
    return best + 1;
}

}  // namespace

ModulusBound max_root_modulus(const IntPolynomial& p) {
    if (p.c.empty()) throw std::invalid_argument("zero polynomial has no root bound");
    const int n = p.degree();
    if (n == 0) return {0.0, 0.0};

    // double-precision Durand-Kerner on the monicized polynomial
    const double lead = p.c.back().get_d();
    std::vector<double> cd(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) cd[i] = p.c[i].get_d() / lead;
    const double radius = [&] {
        double mx = 0;
        for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs(cd[i]));
        return 1.0 + mx;
    }();
    using C = std::complex<double>;
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::polar(radius * (0.5 + 0.5 * (i + 1.0) / n), 0.37 + 6.283185307179586 * i / n);
    auto evald = [&](C x) {
        C acc = 0;
        for (size_t i = cd.size(); i-- > 0;) acc = acc * x + cd[i];
        return acc;
    };
    for (int sweep = 0; sweep < 600; ++sweep) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            C denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (denom == C(0)) denom = 1e-300;
            const C delta = evald(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14 * radius) break;
    }

    // a posteriori certificate in exact arithmetic: disks of radius
    // n*|w_i| around the (exact) approximation points cover all roots
    const Rat rlead(p.c.back());
    std::vector<CRat> zq(n);
    bool finite = true;
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag())) finite = false;
    }
    ModulusBound out{0.0, cauchy_bound(p).get_d() * (1 + 1e-9)};
    // rigorous fallback lower bound: |product of roots|^(1/n)
    {
        Rat prod(abs(p.c.front()), abs(p.c.back()));
        prod.canonicalize();
        const double pd = prod.get_d();
        if (pd > 0) out.lower = std::nextafter(std::pow(pd, 1.0 / n) * (1 - 1e-9), 0.0);
    }
    if (!finite) return out;

    for (int i = 0; i < n; ++i) zq[i] = {Rat(z[i].real()), Rat(z[i].imag())};
    std::vector<Rat> rad_up(n), mod_up(n), mod_down(n);
    for (int i = 0; i < n; ++i) {
        CRat denom{Rat(1), Rat(0)};
        for (int j = 0; j < n; ++j)
            if (j != i) denom = cmul(denom, csub(zq[i], zq[j]));
        denom.re *= rlead;
        denom.im *= rlead;
        if (denom.re == 0 && denom.im == 0) return out;  // coincident points; keep fallback
        const CRat w = cdiv(ceval(p, zq[i]), denom);
        rad_up[i] = Rat(n) * sqrt_bound(cnorm2(w), true);
        mod_up[i] = sqrt_bound(cnorm2(zq[i]), true);
        mod_down[i] = sqrt_bound(cnorm2(zq[i]), false);
    }
    Rat upper = 0;
    int imax = 0;
    for (int i = 0; i < n; ++i) {
        const Rat u = mod_up[i] + rad_up[i];
        if (i == 0 || u > upper) upper = u;
        if (mod_down[i] > mod_down[imax]) imax = i;
    }
    const double upper_d = std::nextafter(upper.get_d() * (1 + 1e-12), HUGE_VAL);
    out.upper = std::min(out.upper, upper_d);

    // lower bound: if the outermost disk is disjoint from every other disk it
    // contains exactly one root, which then has modulus >= |z| - radius
    bool isolated = true;
    for (int j = 0; j < n && isolated; ++j) {
        if (j == imax) continue;
        const Rat gap2 = cnorm2(csub(zq[imax], zq[j]));
        const Rat need = rad_up[imax] + rad_up[j];
        if (sqrt_bound(gap2, false) <= need) isolated = false;
    }
    if (isolated) {
        const Rat lo = mod_down[imax] - rad_up[imax];
        if (lo > 0) {
            const double lo_d = std::nextafter(lo.get_d() * (1 - 1e-12), 0.0);
            out.lower = std::max(out.lower, lo_d);
        }
    }
    return out;
}

bool dominant_root_check(const IntPolynomial& p, const RootEnclosure& enc, const Rat& tol) {
    const ModulusBound b = max_root_modulus(p);
    return Rat(b.upper) <= enc.upper + tol;
}

}  // namespace twistspec
