#ifndef MCF_HOMOLOGY_HPP
#define MCF_HOMOLOGY_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "mcf/filtration.hpp"
#include "mcf/step_function.hpp"

namespace mcf {

constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

/// A finite birth-death pair of cells produced by the reduction.
struct PersistencePair {
    std::size_t birth_cell = 0;
    std::size_t death_cell = 0;
    int dim = 0;       // dimension of the class (= dim of the birth cell)
    double birth = 0;  // filtration value of the birth cell
    double death = 0;  // filtration value of the death cell
};

/// A class that never dies: its cell creates homology that survives to the
/// end of the filtration.
struct EssentialClass {
    std::size_t birth_cell = 0;
    int dim = 0;
    double birth = 0;
};

/// Output of the boundary-matrix reduction. Pairs include zero-persistence
/// classes (birth value equal to death value); reported diagrams drop them.
struct ReductionResult {
    int modulus = 2;
    int max_dim = 0;              // homology is meaningful for dims < max_dim
    std::size_t num_cells = 0;
    std::vector<double> scales;   // critical-scale grid of the source complex
    std::vector<PersistencePair> pairs;
    std::vector<EssentialClass> essentials;
};

/// Persistence diagram for one dimension: finite points plus essential
/// points with infinite death. The diagonal is implicit.
struct DiagramPoint {
    double birth = 0;
    double death = 0;

    bool essential() const { return death == kInfiniteDeath; }
    bool operator==(const DiagramPoint& o) const {
        return birth == o.birth && death == o.death;
    }
};

struct PersistenceDiagram {
    int dim = 0;
    std::vector<DiagramPoint> points; // sorted by (birth, death)
};

/// Standard left-to-right column reduction of the boundary matrix over Z_p.
/// The complex must validate; p must be prime.
ReductionResult reduce(const FilteredComplex& fc, int modulus = 2);

/// Diagram of dimension k, zero-persistence points dropped.
/// Requires 0 <= k < max_dim of the reduced complex.
PersistenceDiagram diagram(const ReductionResult& r, int k);

/// Betti number beta_k as a step function over the critical-scale grid:
/// beta_k(t) counts classes with birth <= t < death.
StepFunction betti_curve(const ReductionResult& r, int k);

/// Number of k-classes born at or before scale i that are still alive
/// after persisting p: birth <= i and death > i + p.
long persistent_betti(const ReductionResult& r, int k, double i, double p);

/// Multiplicity of the point (i, j) in the k-dimensional diagram. Requires
/// i < j; j may be infinite.
long multiplicity(const ReductionResult& r, int k, double i, double j);

} // namespace mcf

#endif
