#include "twistspec/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace twistspec {

void IntPolynomial::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPolynomial char_poly(const LinearMap& m) {
    const int n = m.n;
    std::vector<Int> coeff(static_cast<size_t>(n) + 1);
    coeff[n] = 1;  // monic; coeff[n-k] filled below
    if (n == 0) return IntPolynomial(std::move(coeff));

    // Faddeev-LeVerrier: N_1 = M, c_k = -tr(N_k)/k, N_(k+1) = M(N_k + c_k I)
    LinearMap nk = m;
    Int ck = -trace(nk);
    coeff[n - 1] = ck;
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) nk.at(i, i) += ck;
        nk = mul(m, nk);
        Int t = -trace(nk);
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), Int(k).get_mpz_t());
        if (r != 0) throw std::logic_error("char_poly: non-exact division");
        ck = std::move(q);
        coeff[n - k] = ck;
    }
    IntPolynomial p;
    p.c = std::move(coeff);
    return p;
}

IntPolynomial expected_char_poly(int genus) {
    if (genus < 4)
        throw std::invalid_argument("construction requires g >= 4");
    const int g = genus;
    std::vector<Int> c(static_cast<size_t>(4 * g - 4) + 1);
    c[4 * g - 4] = 1;
    c[4 * g - 5] = -1;
    c[2 * g - 1] = -1;
    c[2 * g - 2] = -10;
    c[2 * g - 3] = -1;
    c[1] = -1;
    c[0] = 1;
    return IntPolynomial(std::move(c));
}

bool palindromic(const IntPolynomial& p) {
    const size_t n = p.c.size();
    for (size_t i = 0; i < n; ++i) {
        if (p.c[i] != p.c[n - 1 - i]) return false;
    }
    return true;
}

Int eval(const IntPolynomial& p, const Int& x) {
    Int acc = 0;
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
    return acc;
}

Rat eval(const IntPolynomial& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
    return acc;
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.c.empty() || q.c.empty()) return IntPolynomial();
    std::vector<Int> out(p.c.size() + q.c.size() - 1);
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        for (size_t j = 0; j < q.c.size(); ++j) {
            if (q.c[j] != 0) out[i + j] += p.c[i] * q.c[j];
        }
    }
    return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& p, const IntPolynomial& d) {
    if (d.c.empty()) return std::nullopt;
    if (p.c.empty()) return IntPolynomial();
    if (p.degree() < d.degree()) return std::nullopt;
    std::vector<Int> rem = p.c;
    std::vector<Int> quot(p.c.size() - d.c.size() + 1);
    const Int& lead = d.c.back();
    for (size_t i = quot.size(); i-- > 0;) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                    rem[i + d.c.size() - 1].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[i] = q;
        if (q != 0) {
            for (size_t j = 0; j < d.c.size(); ++j) rem[i + j] -= q * d.c[j];
        }
    }
    for (const Int& v : rem) {
        if (v != 0) return std::nullopt;
    }
    return IntPolynomial(std::move(quot));
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
    if (p.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.c.size(); i-- > 0;) {
        const Int& v = p.c[i];
        if (v == 0) continue;
        Int mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace twistspec
