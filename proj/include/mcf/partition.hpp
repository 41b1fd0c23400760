#ifndef MCF_PARTITION_HPP
#define MCF_PARTITION_HPP

#include <cstdint>
#include <vector>

namespace mcf {

/// Partition of the point set {0, ..., N-1} into non-empty disjoint clusters.
///
/// Stored as a label vector; labels are normalised to 0..c-1 in order of
/// first occurrence, so two Partition objects are equal exactly when they
/// induce the same equivalence relation.
class Partition {
public:
    Partition() = default;

    /// Builds a partition from arbitrary integer labels (one per point) and
    /// normalises them. Throws if `labels` is empty.
    explicit Partition(const std::vector<int>& labels);

    int size() const { return static_cast<int>(labels_.size()); }
    int num_clusters() const { return num_clusters_; }
    int label(int point) const { return labels_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& labels() const { return labels_; }

    /// Clusters as sorted member lists, indexed by normalised label.
    std::vector<std::vector<std::int32_t>> clusters() const;

    bool same_cluster(int x, int y) const { return labels_[x] == labels_[y]; }

    bool operator==(const Partition& o) const { return labels_ == o.labels_; }
    bool operator!=(const Partition& o) const { return labels_ != o.labels_; }

    static Partition singletons(int n);
    static Partition single_cluster(int n);

private:
    std::vector<int> labels_;
    int num_clusters_ = 0;
};

/// True iff every cluster of `p` is contained in a cluster of `q`.
/// Throws std::invalid_argument when the partitions cover different sets.
bool refines(const Partition& p, const Partition& q);

/// Partitions of one set indexed by strictly increasing scale values.
class ScaledPartitionSequence {
public:
    ScaledPartitionSequence(std::vector<Partition> partitions, std::vector<double> scales);

    int size() const { return static_cast<int>(partitions_.size()); }
    int n_points() const { return partitions_.front().size(); }
    const Partition& partition(int m) const { return partitions_[static_cast<std::size_t>(m)]; }
    double scale(int m) const { return scales_[static_cast<std::size_t>(m)]; }
    const std::vector<double>& scales() const { return scales_; }
    const std::vector<Partition>& partitions() const { return partitions_; }

    /// The scale function: piecewise constant, left-closed, holding the first
    /// partition below the first scale and the last one above the last scale.
    const Partition& partition_at(double t) const;

    /// Same scales, partitions permuted so slot j holds partition(perm[j]).
    ScaledPartitionSequence permuted(const std::vector<int>& perm) const;

private:
    std::vector<Partition> partitions_;
    std::vector<double> scales_;
};

/// True iff every partition at index s <= m refines the partition at m
/// (0-based index into the sequence). Throws when m is out of range.
bool is_non_fractured(const ScaledPartitionSequence& seq, int m);

/// True iff the sequence is a chain under refinement.
bool is_hierarchical(const ScaledPartitionSequence& seq);

/// Connected-component count of the accumulated co-clustering relation at
/// each scale, computed with a union-find. This equals the 0-th Betti number
/// of the clustering filtration at every scale and serves as the
/// combinatorial route to the hierarchy measures.
std::vector<long> component_counts(const ScaledPartitionSequence& seq);

/// Average hierarchy of the sequence via component counts; used to score
/// candidate orderings without running the homology pipeline.
double component_average_hierarchy(const ScaledPartitionSequence& seq);

enum class ReorderStrategy { ClusterCount, Exhaustive };

/// Permutation `perm` such that placing partition(perm[j]) at slot j orders
/// the sequence by decreasing cluster count (stable) or, for the exhaustive
/// strategy, maximises the average hierarchy over all M! arrangements.
/// The exhaustive strategy refuses sequences longer than `exhaustive_cap`.
std::vector<int> reorder(const ScaledPartitionSequence& seq, ReorderStrategy strategy,
                         int exhaustive_cap = 8);

} // namespace mcf

#endif
