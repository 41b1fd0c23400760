#ifndef MCF_TESTS_FIXTURES_HPP
#define MCF_TESTS_FIXTURES_HPP

#include <vector>

#include "mcf/partition.hpp"
#include "mcf/rng.hpp"

namespace fixtures {

/// The three-point, five-partition sequence used throughout: singletons,
/// then {x1,x2}{x3}, {x1}{x2,x3}, {x1,x3}{x2}, and finally one cluster,
/// at scales 1..5.
inline mcf::ScaledPartitionSequence running_example() {
    std::vector<mcf::Partition> partitions{
        mcf::Partition({0, 1, 2}), mcf::Partition({0, 0, 1}), mcf::Partition({0, 1, 1}),
        mcf::Partition({0, 1, 0}), mcf::Partition({0, 0, 0})};
    return mcf::ScaledPartitionSequence(std::move(partitions), {1, 2, 3, 4, 5});
}

/// Uniformly random partition of n points into at most max_clusters parts.
inline mcf::Partition random_partition(int n, int max_clusters, mcf::SplitMix64& rng) {
    int c = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_clusters)));
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] =
            static_cast<int>(rng.next_below(static_cast<std::uint64_t>(c)));
    return mcf::Partition(labels);
}

/// Random sequence with unit-spaced scales starting at 1.
inline mcf::ScaledPartitionSequence random_sequence(int n, int m, mcf::SplitMix64& rng) {
    std::vector<mcf::Partition> partitions;
    std::vector<double> scales;
    for (int i = 0; i < m; ++i) {
        partitions.push_back(random_partition(n, n, rng));
        scales.push_back(static_cast<double>(i + 1));
    }
    return mcf::ScaledPartitionSequence(std::move(partitions), std::move(scales));
}

/// Random quasi-hierarchical sequence: a coarsening chain with occasional
/// random partitions spliced in, which is the regime the measures target.
inline mcf::ScaledPartitionSequence random_coarsening_sequence(int n, int m,
                                                               mcf::SplitMix64& rng) {
    std::vector<mcf::Partition> partitions;
    mcf::Partition current = mcf::Partition::singletons(n);
    for (int i = 0; i < m; ++i) {
        if (rng.next_below(4) == 0) {
            partitions.push_back(random_partition(n, n, rng));
            continue;
        }
        // merge two clusters of the current partition
        if (current.num_clusters() > 1) {
            int a = static_cast<int>(
                rng.next_below(static_cast<std::uint64_t>(current.num_clusters())));
            int b;
            do {
                b = static_cast<int>(
                    rng.next_below(static_cast<std::uint64_t>(current.num_clusters())));
            } while (b == a);
            std::vector<int> labels = current.labels();
            for (int& l : labels)
                if (l == a) l = b;
            current = mcf::Partition(labels);
        }
        partitions.push_back(current);
    }
    std::vector<double> scales;
    for (int i = 0; i < m; ++i) scales.push_back(static_cast<double>(i + 1));
    return mcf::ScaledPartitionSequence(std::move(partitions), std::move(scales));
}

} // namespace fixtures

#endif
