#include "mcf/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mcf {

Partition::Partition(const std::vector<int>& labels) {
    if (labels.empty())
        throw std::invalid_argument("partition of an empty set is not allowed");
    labels_.resize(labels.size());
    // remap labels to 0..c-1 in order of first occurrence
    std::vector<std::pair<int, int>> seen; // (raw label, normalised label)
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int raw = labels[i];
        int norm = -1;
        for (const auto& [r, n] : seen) {
            if (r == raw) {
                norm = n;
                break;
            }
        }
        if (norm < 0) {
            norm = static_cast<int>(seen.size());
            seen.emplace_back(raw, norm);
        }
        labels_[i] = norm;
    }
    num_clusters_ = static_cast<int>(seen.size());
}

std::vector<std::vector<std::int32_t>> Partition::clusters() const {
    std::vector<std::vector<std::int32_t>> out(static_cast<std::size_t>(num_clusters_));
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<std::int32_t>(i));
    return out;
}

Partition Partition::singletons(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    return Partition(labels);
}

Partition Partition::single_cluster(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

bool refines(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("refines: partitions cover sets of different size");
    // p <= q iff the map (p-label -> q-label) is a function on the points
    std::vector<int> image(static_cast<std::size_t>(p.num_clusters()), -1);
    for (int i = 0; i < p.size(); ++i) {
        int& target = image[static_cast<std::size_t>(p.label(i))];
        if (target < 0)
            target = q.label(i);
        else if (target != q.label(i))
            return false;
    }
    return true;
}

ScaledPartitionSequence::ScaledPartitionSequence(std::vector<Partition> partitions,
                                                 std::vector<double> scales)
    : partitions_(std::move(partitions)), scales_(std::move(scales)) {
    if (partitions_.empty())
        throw std::invalid_argument("sequence needs at least one partition");
    if (partitions_.size() != scales_.size())
        throw std::invalid_argument("sequence: partition/scale count mismatch");
    for (std::size_t m = 1; m < scales_.size(); ++m)
        if (!(scales_[m - 1] < scales_[m]))
            throw std::invalid_argument("sequence: scales must be strictly increasing (offending index " +
                                        std::to_string(m) + ")");
    const int n = partitions_.front().size();
    for (const Partition& p : partitions_)
        if (p.size() != n)
            throw std::invalid_argument("sequence: all partitions must cover the same set");
}

const Partition& ScaledPartitionSequence::partition_at(double t) const {
    auto it = std::upper_bound(scales_.begin(), scales_.end(), t);
    if (it == scales_.begin()) return partitions_.front();
    return partitions_[static_cast<std::size_t>(it - scales_.begin()) - 1];
}

ScaledPartitionSequence ScaledPartitionSequence::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != size())
        throw std::invalid_argument("permutation length mismatch");
    std::vector<Partition> arranged;
    arranged.reserve(perm.size());
    for (int idx : perm) {
        if (idx < 0 || idx >= size())
            throw std::invalid_argument("permutation index out of range");
        arranged.push_back(partitions_[static_cast<std::size_t>(idx)]);
    }
    return ScaledPartitionSequence(std::move(arranged), scales_);
}

bool is_non_fractured(const ScaledPartitionSequence& seq, int m) {
    if (m < 0 || m >= seq.size())
        throw std::out_of_range("is_non_fractured: index out of range");
    for (int s = 0; s < m; ++s)
        if (!refines(seq.partition(s), seq.partition(m)))
            return false;
    return true;
}

bool is_hierarchical(const ScaledPartitionSequence& seq) {
    // chain condition: consecutive refinement implies the full triangle by
    // transitivity, so only M-1 checks are needed
    for (int m = 1; m < seq.size(); ++m)
        if (!refines(seq.partition(m - 1), seq.partition(m)))
            return false;
    return true;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx != ry) {
            parent_[rx] = ry;
            --components_;
        }
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    int components_;
};

} // namespace

std::vector<long> component_counts(const ScaledPartitionSequence& seq) {
    UnionFind uf(seq.n_points());
    std::vector<long> counts;
    counts.reserve(static_cast<std::size_t>(seq.size()));
    for (int m = 0; m < seq.size(); ++m) {
        const Partition& p = seq.partition(m);
        // link each point to the first member of its cluster
        std::vector<int> first(static_cast<std::size_t>(p.num_clusters()), -1);
        for (int i = 0; i < p.size(); ++i) {
            int& f = first[static_cast<std::size_t>(p.label(i))];
            if (f < 0)
                f = i;
            else
                uf.unite(f, i);
        }
        counts.push_back(uf.components());
    }
    return counts;
}

double component_average_hierarchy(const ScaledPartitionSequence& seq) {
    if (seq.size() < 2)
        throw std::invalid_argument("average hierarchy needs at least two scales");
    std::vector<long> beta0 = component_counts(seq);
    double total = 0.0;
    for (int m = 0; m + 1 < seq.size(); ++m) {
        double h = static_cast<double>(beta0[static_cast<std::size_t>(m)]) /
                   static_cast<double>(seq.partition(m).num_clusters());
        total += h * (seq.scale(m + 1) - seq.scale(m));
    }
    return total / (seq.scale(seq.size() - 1) - seq.scale(0));
}

std::vector<int> reorder(const ScaledPartitionSequence& seq, ReorderStrategy strategy,
                         int exhaustive_cap) {
    const int m = seq.size();
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);

    if (strategy == ReorderStrategy::ClusterCount) {
        std::stable_sort(perm.begin(), perm.end(), [&seq](int a, int b) {
            return seq.partition(a).num_clusters() > seq.partition(b).num_clusters();
        });
        return perm;
    }

    if (m > exhaustive_cap)
        throw std::invalid_argument("exhaustive reorder refused: sequence length " +
                                    std::to_string(m) + " exceeds cap " +
                                    std::to_string(exhaustive_cap));
    if (m < 2) return perm;

    std::vector<int> best = perm;
    double best_score = component_average_hierarchy(seq);
    std::vector<int> candidate = perm;
    while (std::next_permutation(candidate.begin(), candidate.end())) {
        double score = component_average_hierarchy(seq.permuted(candidate));
        if (score > best_score) {
            best_score = score;
            best = candidate;
        }
    }
    return best;
}

} // namespace mcf
