#pragma once

#include "lamina/types.hpp"

namespace lamina {

/// Reduced row echelon form in place; returns the rank. Exact arithmetic.
int rref(MatQ& m);

int rank(MatQ m);

/// Columns form a basis of the kernel of m.
MatQ nullspace(const MatQ& m);

/// Solves m z = rhs for a unique solution; throws if singular/inconsistent.
VecQ solve(MatQ m, VecQ rhs);

}  // namespace lamina
