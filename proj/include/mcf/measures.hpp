#ifndef MCF_MEASURES_HPP
#define MCF_MEASURES_HPP

#include <vector>

#include "mcf/homology.hpp"
#include "mcf/partition.hpp"
#include "mcf/step_function.hpp"

namespace mcf {

/// Persistent hierarchy h(t_m) = beta_0(t_m) / (number of clusters at t_m),
/// with essential classes counted as alive. Values lie in (0, 1]; h == 1
/// exactly when the sequence is hierarchical. The reduction must come from
/// the clustering filtration of `seq`.
StepFunction persistent_hierarchy(const ScaledPartitionSequence& seq,
                                  const ReductionResult& r);

/// Scale-weighted mean of h over [t_1, t_M]; the last value carries no
/// weight. Requires at least two scales.
double average_hierarchy(const StepFunction& h);

struct ConflictCurves {
    StepFunction births;   // b_k: classes born at each scale, essentials included
    StepFunction deaths;   // d_k: classes dying at each scale
    StepFunction conflict; // c_k = b_k - d_k
};

/// Birth/death/conflict counts of dimension k per critical scale.
/// Zero-persistence classes cancel out and are not counted.
/// Requires 1 <= k < max_dim.
ConflictCurves conflict_curves(const ReductionResult& r, int k);

/// Total persistent conflict: sum of c_k over k = 1 .. max_dim-1.
StepFunction total_conflict(const ReductionResult& r);

struct ScaleSelectionParams {
    int plateau_length = 3; // minimal run of constant conflict, dip included
    long betti_ceiling = 0; // maximal sum of beta_k (k >= 1) at the dip
};

struct SelectedScale {
    double scale = 0;
    int plateau = 0;
    long betti_sum = 0;
};

/// Conflict-resolving scales: positions where the total conflict strictly
/// decreases and then stays constant for at least `plateau_length` scales
/// (counting the dip itself), with at most `betti_ceiling` unresolved
/// classes. Ranked by plateau length, then by low Betti sum, then by scale.
/// `h` must share the conflict grid; `betti` holds beta_k for k = 1 upward.
std::vector<SelectedScale> select_scales(const StepFunction& h, const StepFunction& conflict,
                                         const std::vector<StepFunction>& betti,
                                         const ScaleSelectionParams& params);

} // namespace mcf

#endif
