#pragma once

#include "tda/matrix.hpp"
#include "tda/simplicial.hpp"

namespace tda {

// Entry 1 iff the data entry is strictly greater than the cutoff.
BinaryMatrix dichotomize(const RealMatrix& data, double cutoff);

// Concurrence filtration of a dichotomized activity matrix (rows =
// timepoints, columns = variables). Each vertex subset S with at least one
// row where every column of S is 1 becomes a simplex with value -c(S),
// where c(S) counts such rows; negation turns the superlevel filtration
// into the library's sublevel convention. Subsets with c(S) = 0 are absent.
// max_dim bounds the simplex dimension (|S| - 1). Throws "complex too
// large" past max_simplices.
FilteredComplex concurrence_filtration(const BinaryMatrix& activity, int max_dim,
                                       std::size_t max_simplices = 2'000'000);

} // namespace tda
