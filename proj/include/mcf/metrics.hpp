#ifndef MCF_METRICS_HPP
#define MCF_METRICS_HPP

#include "mcf/filtration.hpp"
#include "mcf/homology.hpp"

namespace mcf {

/// q-Wasserstein distance between two diagrams of the same dimension, with
/// L_q ground metric and the diagonal available as a match of last resort.
/// Essential points match only essential points at cost |birth difference|;
/// diagrams with different essential counts are infinitely far apart.
/// Requires finite q >= 1.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double q);

/// Bottleneck distance: minimax matching cost under the L_inf ground metric,
/// same essential-point convention as wasserstein().
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// L_q norm of the difference of two filtration functions defined on the
/// same cell set (q may be infinity). Throws when the cell sets differ; the
/// usual fix is to pad both sequences with the trivial one-cluster partition
/// so the final complexes coincide.
double filtration_distance(const FilteredComplex& a, const FilteredComplex& b, double q);

} // namespace mcf

#endif
