#pragma once

#include <vector>

#include "tda/diagram.hpp"
#include "tda/simplicial.hpp"

namespace tda {

// Persistent homology over Z/2 by column reduction of the boundary matrix,
// with simplices ordered by (filtration value, dimension, insertion index).
// Returns one diagram per degree 0..max_hom_dim; unpaired classes get death
// = +infinity and zero-persistence pairs are dropped. The complex must be
// face-closed and monotone (validated; throws otherwise).
std::vector<PersistenceDiagram> compute_persistence(const FilteredComplex& complex,
                                                    int max_hom_dim);

struct WeightedEdge {
    int u = 0;
    int v = 0;
    double value = 0.0;
};

// Degree-0 fast path: union-find over edges sorted by value, with the elder
// rule (the younger component dies at a merge). Every edge value must be >=
// the larger of its endpoint values. Produces exactly the degree-0 diagram
// of the boundary-matrix reduction.
PersistenceDiagram zero_dim_persistence(const std::vector<WeightedEdge>& edges,
                                        int n_vertices,
                                        const std::vector<double>& vertex_values);

} // namespace tda
