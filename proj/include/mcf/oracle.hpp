#ifndef MCF_ORACLE_HPP
#define MCF_ORACLE_HPP

#include "mcf/filtration.hpp"

namespace mcf {

/// Betti number of the sublevel complex at scale t, computed from scratch:
/// dense boundary matrices are rebuilt from the cell lists and their ranks
/// obtained by Gaussian elimination mod p. Entirely independent of reduce(),
/// so it can stand witness against it. Refuses sublevel complexes with more
/// than `cell_cap` cells.
long oracle_betti(const FilteredComplex& fc, double t, int k, int modulus = 2,
                  std::size_t cell_cap = 5000);

} // namespace mcf

#endif
