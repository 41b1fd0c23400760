#ifndef MCF_SYNTH_HPP
#define MCF_SYNTH_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "mcf/partition.hpp"

namespace mcf {

/// Simple undirected graph with the seed that produced it.
struct RandomGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u < v, sorted
    std::uint64_t seed = 0;
};

/// Nested ground-truth partitions, finest first, each refining the next,
/// with connection probabilities per separation level: probs[0] applies to
/// pairs co-clustered at the finest level, probs[levels] to pairs separated
/// everywhere.
struct PlantedHierarchy {
    std::vector<Partition> levels;
    std::vector<double> probs;
};

/// Nested blocks of near-equal size for the given cluster counts (finest
/// first, e.g. {27, 9, 3}); counts must divide the hierarchy consistently
/// only in the weak sense that each finer level is split within the coarser
/// blocks. Probabilities are validated against the level count.
PlantedHierarchy make_planted_hierarchy(int n, const std::vector<int>& cluster_counts,
                                        const std::vector<double>& probs);

/// Uniform graph with exactly m_edges edges.
RandomGraph gen_er(int n, long m_edges, std::uint64_t seed);

/// Single-scale stochastic block model: independent coin flips with
/// probability p_in inside a block and p_out across blocks.
RandomGraph gen_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
                    std::uint64_t seed);

/// Multiscale stochastic block model: each pair connects with the
/// probability of the finest level that still co-clusters it.
RandomGraph gen_msbm(const PlantedHierarchy& planted, std::uint64_t seed);

/// Single linkage clustering of a symmetric distance matrix. The sequence
/// starts with singletons at scale 0 and adds one partition per distinct
/// merge height.
ScaledPartitionSequence single_linkage(const Eigen::MatrixXd& dist);

enum class SweepMode {
    Components,           // components of the common-neighbourhood graph
    PlantedInterpolation, // planted levels with noisy transition heads
};

struct SweepOptions {
    SweepMode mode = SweepMode::Components;
    double noise_rate = 0.0;      // per-point reassignment probability
    double transition_frac = 0.4; // fraction of each block spent in transition
    const PlantedHierarchy* planted = nullptr; // required for planted mode
    bool singleton_start = false; // force the first scale to exact singletons
};

/// Produces a partition per scale.
///
/// Components mode thresholds the graph by common-neighbourhood size (from
/// strict to loose, so partitions coarsen) and takes connected components;
/// noise then reassigns points to arbitrary other clusters.
///
/// Planted-interpolation mode divides the scales into one block per planted
/// level. With zero noise every scale of block b carries level b. Otherwise
/// the head of each block interpolates from the previous level (level 0 =
/// singletons): each point is moved, with the given probability, into the
/// previous-level cluster of a random point sharing its current-level
/// cluster. Fractures therefore stay inside the current level's clusters and
/// every conflict resolves when the clean level arrives.
ScaledPartitionSequence sweep_partitions(const RandomGraph& g,
                                         const std::vector<double>& scales,
                                         const SweepOptions& options, std::uint64_t seed);

/// Shifts every scale by an independent uniform(-epsilon, epsilon) draw.
/// Requires epsilon < half the minimal scale gap so the order is preserved.
ScaledPartitionSequence perturb_scales(const ScaledPartitionSequence& seq, double epsilon,
                                       std::uint64_t seed);

} // namespace mcf

#endif
