#pragma once

#include <optional>

#include "dct/matrix.hpp"
#include "dct/smith.hpp"

namespace dct {

// Witness that Ax = b has no integer solution: functional . b = value and
// value is not divisible by modulus, while functional . (Ax) is always
// divisible (modulus 0 means the value must be exactly zero).
struct Congruence {
    int row = 0;
    Int modulus;
    Int value;
    IntVec functional; // row of Uinv

    bool violated_by(const IntVec& b) const {
        Int v = vec_dot(functional, b);
        if (modulus == 0) return v != 0;
        return v % modulus != 0;
    }
};

struct IntSolve {
    std::optional<IntVec> solution;
    std::optional<Congruence> certificate;
    bool ok() const { return solution.has_value(); }
};

IntSolve solve_integer(const SmithDecomposition& S, const IntVec& b);
IntSolve solve_integer(const IntMatrix& A, const IntVec& b);

// Columns form a basis of the saturated lattice ker(A) over the integers.
IntMatrix integer_kernel(const SmithDecomposition& S);

// Exact Gaussian elimination; free variables are set to zero.
std::optional<RatVec> solve_rational(const RatMatrix& A, const RatVec& b);

// Kernel basis from the reduced row echelon form, each vector scaled so its
// first nonzero entry is positive.
std::vector<RatVec> rational_kernel(const RatMatrix& A);

long rational_rank(const RatMatrix& A);

} // namespace dct
