#include "twistspec/linear_map.hpp"

#include <stdexcept>
#include <utility>

namespace twistspec {

LinearMap LinearMap::identity(int dim) {
    LinearMap m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

LinearMap mul(const LinearMap& x, const LinearMap& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
    const int n = x.n;
    LinearMap z(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            const Int* yrow = &y.a[static_cast<size_t>(k) * n];
            Int* zrow = &z.a[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) {
                if (yrow[j] != 0) zrow[j] += xik * yrow[j];
            }
        }
    }
    return z;
}

LinearMap pow(const LinearMap& m, unsigned k) {
    LinearMap acc = LinearMap::identity(m.n);
    LinearMap base = m;
    while (k > 0) {
        if (k & 1u) acc = mul(acc, base);
        k >>= 1u;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

LinearMap transpose(const LinearMap& m) {
    LinearMap t(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

WeightVector apply(const LinearMap& m, const WeightVector& w) {
    if (static_cast<size_t>(m.n) != w.size())
        throw std::invalid_argument("matrix/vector dimension mismatch");
    WeightVector out(w.size());
    for (int i = 0; i < m.n; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.n; ++j) {
            const Int& mij = m.at(i, j);
            if (mij != 0) acc += mij * w[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

Int trace(const LinearMap& m) {
    Int t = 0;
    for (int i = 0; i < m.n; ++i) t += m.at(i, i);
    return t;
}

Int sum_entries(const LinearMap& m) {
    Int s = 0;
    for (const Int& v : m.a) s += v;
    return s;
}

Int max_row_sum(const LinearMap& m) {
    Int best = 0;
    for (int i = 0; i < m.n; ++i) {
        Int s = 0;
        for (int j = 0; j < m.n; ++j) s += m.at(i, j);
        if (i == 0 || s > best) best = std::move(s);
    }
    return best;
}

bool nonnegative(const LinearMap& m) {
    for (const Int& v : m.a) {
        if (v < 0) return false;
    }
    return true;
}

Int bareiss_det(LinearMap m) {
    const int n = m.n;
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) { p = i; break; }
            }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // exact by the Sylvester identity; guard anyway
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("bareiss: non-exact division");
                m.at(i, j) = std::move(q);
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace twistspec
