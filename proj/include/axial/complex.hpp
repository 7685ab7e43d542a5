#pragma once

#include "axial/graph.hpp"
#include "axial/projections.hpp"

namespace axial {

// BBF-style graph on the cosets of T: edge {X,Z} when no third coset sees
// them far apart. Pre: the axiom report carried no P1 violations.
TruncGraph build_projection_complex(ProjectionSystem& ps, long K,
                                    const AxiomReport& axioms);

// Blown-up version: each coset contributes a depth-truncated copy of T with
// unit word-metric edges; inter-coset edges join the two projection sets of
// every projection-complex edge.
TruncGraph build_quasi_tree_of_spaces(ProjectionSystem& ps, long K, int depth,
                                      const AxiomReport& axioms);

// [d(x0, g^n x0)] for n = 1..n_max, x0 = the identity point / the coset T.
std::vector<long> translation_growth(const TruncGraph& g, ProjectionSystem& ps,
                                     int n_max);

long default_edge_threshold(const AxiomReport& axioms);

}  // namespace axial
