#pragma once

#include <gmpxx.h>

#include <vector>

namespace twistspec {

using Int = mpz_class;
using Rat = mpq_class;

// nonnegative exact weights on the curve basis, in canonical order
using WeightVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense square exact-integer matrix. Column convention throughout: column u
// holds the image of basis vector u, so composition f∘g is matrix(f)*matrix(g).
struct LinearMap {
    int n = 0;
    std::vector<Int> a;  // row-major, n*n

    LinearMap() = default;
    explicit LinearMap(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    static LinearMap identity(int dim);

    bool operator==(const LinearMap&) const = default;
};

// matrix product; skips zero entries of the left factor, so products with a
// sparse left operand (twist/rotation/transition matrices) stay cheap
LinearMap mul(const LinearMap& x, const LinearMap& y);

LinearMap pow(const LinearMap& m, unsigned k);
LinearMap transpose(const LinearMap& m);

// exact matrix-vector product (throws on dimension mismatch)
WeightVector apply(const LinearMap& m, const WeightVector& w);

Int trace(const LinearMap& m);
Int sum_entries(const LinearMap& m);
Int max_row_sum(const LinearMap& m);
bool nonnegative(const LinearMap& m);

// exact determinant by fraction-free (Bareiss) elimination; independent of
// the characteristic-polynomial path, used to cross-check it
Int bareiss_det(LinearMap m);

}  // namespace twistspec
