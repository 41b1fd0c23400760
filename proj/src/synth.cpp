#include "mcf/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mcf/rng.hpp"

namespace mcf {

namespace {

std::vector<int> near_equal_split(int count, int parts, int offset = 0) {
    // sizes differing by at most one, larger parts first
    std::vector<int> labels(static_cast<std::size_t>(count));
    int base = count / parts, extra = count % parts, at = 0;
    for (int p = 0; p < parts; ++p) {
        int size = base + (p < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) labels[static_cast<std::size_t>(at++)] = offset + p;
    }
    return labels;
}

} // namespace

PlantedHierarchy make_planted_hierarchy(int n, const std::vector<int>& cluster_counts,
                                        const std::vector<double>& probs) {
    if (n < 1) throw std::invalid_argument("planted hierarchy: need at least one point");
    if (cluster_counts.empty())
        throw std::invalid_argument("planted hierarchy: need at least one level");
    if (probs.size() != cluster_counts.size() + 1)
        throw std::invalid_argument("planted hierarchy: need one probability per level plus one");
    for (double p : probs)
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("planted hierarchy: probabilities must lie in [0,1]");
    for (std::size_t l = 0; l + 1 < cluster_counts.size(); ++l)
        if (cluster_counts[l] % cluster_counts[l + 1] != 0)
            throw std::invalid_argument(
                "planted hierarchy: each level's cluster count must divide the finer one");
    if (cluster_counts.front() > n)
        throw std::invalid_argument("planted hierarchy: more clusters than points");

    PlantedHierarchy out;
    out.probs = probs;

    // coarsest level first, then split each block
    std::vector<std::vector<int>> label_sets(cluster_counts.size());
    label_sets.back() = near_equal_split(n, cluster_counts.back());
    for (int l = static_cast<int>(cluster_counts.size()) - 2; l >= 0; --l) {
        const std::vector<int>& coarse = label_sets[static_cast<std::size_t>(l) + 1];
        int fanout = cluster_counts[static_cast<std::size_t>(l)] /
                     cluster_counts[static_cast<std::size_t>(l) + 1];
        std::vector<int>& fine = label_sets[static_cast<std::size_t>(l)];
        fine.resize(static_cast<std::size_t>(n));
        int next_label = 0;
        for (int block = 0; block < cluster_counts[static_cast<std::size_t>(l) + 1]; ++block) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (coarse[static_cast<std::size_t>(i)] == block) members.push_back(i);
            std::vector<int> sub = near_equal_split(static_cast<int>(members.size()), fanout,
                                                    next_label);
            for (std::size_t i = 0; i < members.size(); ++i)
                fine[static_cast<std::size_t>(members[i])] = sub[i];
            next_label += fanout;
        }
    }
    for (auto& labels : label_sets) out.levels.emplace_back(labels);
    for (std::size_t l = 0; l + 1 < out.levels.size(); ++l)
        if (!refines(out.levels[l], out.levels[l + 1]))
            throw std::logic_error("planted hierarchy: levels failed to nest");
    return out;
}

RandomGraph gen_er(int n, long m_edges, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_er: negative vertex count");
    long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (m_edges < 0 || m_edges > max_edges)
        throw std::invalid_argument("gen_er: infeasible edge count " + std::to_string(m_edges) +
                                    " for " + std::to_string(n) + " vertices");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(max_edges));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    SplitMix64 rng(seed, 0);
    RandomGraph g{n, {}, seed};
    g.edges.reserve(static_cast<std::size_t>(m_edges));
    // partial Fisher-Yates: the first m_edges slots become a uniform sample
    for (long k = 0; k < m_edges; ++k) {
        std::size_t pick = static_cast<std::size_t>(k) +
                           rng.next_below(static_cast<std::uint64_t>(max_edges - k));
        std::swap(pairs[static_cast<std::size_t>(k)], pairs[pick]);
        g.edges.push_back(pairs[static_cast<std::size_t>(k)]);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

RandomGraph gen_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
                    std::uint64_t seed) {
    if (p_in < 0 || p_in > 1 || p_out < 0 || p_out > 1)
        throw std::invalid_argument("gen_sbm: probabilities must lie in [0,1]");
    std::vector<int> block;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        if (block_sizes[b] < 1) throw std::invalid_argument("gen_sbm: empty block");
        block.insert(block.end(), static_cast<std::size_t>(block_sizes[b]),
                     static_cast<int>(b));
    }
    int n = static_cast<int>(block.size());
    SplitMix64 rng(seed, 0);
    RandomGraph g{n, {}, seed};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double p = block[static_cast<std::size_t>(u)] == block[static_cast<std::size_t>(v)]
                           ? p_in
                           : p_out;
            if (rng.next_double() < p) g.edges.emplace_back(u, v);
        }
    return g;
}

RandomGraph gen_msbm(const PlantedHierarchy& planted, std::uint64_t seed) {
    if (planted.levels.empty()) throw std::invalid_argument("gen_msbm: no planted levels");
    const int n = planted.levels.front().size();
    const std::size_t num_levels = planted.levels.size();
    if (planted.probs.size() != num_levels + 1)
        throw std::invalid_argument("gen_msbm: need one probability per level plus one");

    SplitMix64 rng(seed, 0);
    RandomGraph g{n, {}, seed};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::size_t level = num_levels; // separated everywhere
            for (std::size_t l = 0; l < num_levels; ++l)
                if (planted.levels[l].same_cluster(u, v)) {
                    level = l;
                    break;
                }
            if (rng.next_double() < planted.probs[level]) g.edges.emplace_back(u, v);
        }
    return g;
}

ScaledPartitionSequence single_linkage(const Eigen::MatrixXd& dist) {
    const Eigen::Index n = dist.rows();
    if (n < 1 || dist.cols() != n)
        throw std::invalid_argument("single_linkage: matrix must be square and non-empty");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (dist(i, i) != 0.0)
            throw std::invalid_argument("single_linkage: diagonal must be zero");
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (dist(i, j) != dist(j, i))
                throw std::invalid_argument("single_linkage: matrix must be symmetric");
            if (dist(i, j) < 0.0)
                throw std::invalid_argument("single_linkage: distances must be non-negative");
        }
    }

    struct PairEntry {
        double d;
        int u, v;
    };
    std::vector<PairEntry> order;
    order.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            order.push_back(PairEntry{dist(i, j), static_cast<int>(i), static_cast<int>(j)});
    std::sort(order.begin(), order.end(), [](const PairEntry& a, const PairEntry& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    std::vector<int> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
        while (root[static_cast<std::size_t>(x)] != x) {
            root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(
                root[static_cast<std::size_t>(x)])];
            x = root[static_cast<std::size_t>(x)];
        }
        return x;
    };

    auto snapshot = [&find, n]() {
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = find(i);
        return Partition(labels);
    };

    std::vector<Partition> partitions{Partition::singletons(static_cast<int>(n))};
    std::vector<double> scales{0.0};
    int components = static_cast<int>(n);

    std::size_t i = 0;
    while (i < order.size() && components > 1) {
        double height = order[i].d;
        bool merged = false;
        while (i < order.size() && order[i].d == height) {
            int ru = find(order[i].u), rv = find(order[i].v);
            if (ru != rv) {
                root[static_cast<std::size_t>(ru)] = rv;
                --components;
                merged = true;
            }
            ++i;
        }
        if (!merged) continue;
        if (height == 0.0) {
            partitions[0] = snapshot(); // zero-height merges fold into the base
        } else {
            partitions.push_back(snapshot());
            scales.push_back(height);
        }
    }
    return ScaledPartitionSequence(std::move(partitions), std::move(scales));
}

namespace {

/// Moves each point, with probability `rate`, into the `prev`-level cluster
/// of a random other point from its `current`-level cluster. Every resulting
/// cluster stays inside a current-level cluster.
Partition noisy_interpolation(const Partition& prev, const Partition& current, double rate,
                              SplitMix64& rng) {
    std::vector<int> labels = prev.labels();
    auto clusters = current.clusters();
    for (int x = 0; x < prev.size(); ++x) {
        if (rng.next_double() >= rate) continue;
        const auto& peers = clusters[static_cast<std::size_t>(current.label(x))];
        if (peers.size() < 2) continue;
        std::int32_t z;
        do {
            z = peers[rng.next_below(peers.size())];
        } while (z == x);
        labels[static_cast<std::size_t>(x)] = prev.label(z);
    }
    return Partition(labels);
}

/// Reassigns each point, with probability `rate`, to a uniformly random
/// other cluster of the partition.
Partition scatter_noise(const Partition& p, double rate, SplitMix64& rng) {
    if (p.num_clusters() < 2 || rate <= 0.0) return p;
    std::vector<int> labels = p.labels();
    for (int x = 0; x < p.size(); ++x) {
        if (rng.next_double() >= rate) continue;
        int target;
        do {
            target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(p.num_clusters())));
        } while (target == p.label(x));
        labels[static_cast<std::size_t>(x)] = target;
    }
    return Partition(labels);
}

std::vector<Partition> sweep_components(const RandomGraph& g, int num_scales,
                                        double noise_rate, std::uint64_t seed) {
    // common-neighbourhood size per edge
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    std::vector<int> common(g.edges.size(), 0);
    int max_common = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& a = adj[static_cast<std::size_t>(g.edges[e].first)];
        const auto& b = adj[static_cast<std::size_t>(g.edges[e].second)];
        std::size_t i = 0, j = 0;
        int c = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j])
                ++i;
            else if (a[i] > b[j])
                ++j;
            else {
                ++c;
                ++i;
                ++j;
            }
        }
        common[e] = c;
        max_common = std::max(max_common, c);
    }

    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(num_scales));
    for (int s = 0; s < num_scales; ++s) {
        // threshold slides from strict (max) to loose (1), never to 0
        int tau = num_scales == 1
                      ? max_common
                      : static_cast<int>(std::lround(
                            max_common - (max_common - 1) *
                                             (static_cast<double>(s) / (num_scales - 1))));
        std::vector<int> root(static_cast<std::size_t>(g.n));
        std::iota(root.begin(), root.end(), 0);
        auto find = [&root](int x) {
            while (root[static_cast<std::size_t>(x)] != x) {
                root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(
                    root[static_cast<std::size_t>(x)])];
                x = root[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            if (common[e] < tau) continue;
            int ru = find(g.edges[e].first), rv = find(g.edges[e].second);
            if (ru != rv) root[static_cast<std::size_t>(ru)] = rv;
        }
        std::vector<int> labels(static_cast<std::size_t>(g.n));
        for (int x = 0; x < g.n; ++x) labels[static_cast<std::size_t>(x)] = find(x);
        Partition p(labels);
        if (noise_rate > 0.0) {
            SplitMix64 rng(seed, static_cast<std::uint64_t>(s) + 1);
            p = scatter_noise(p, noise_rate, rng);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Partition> sweep_planted(const PlantedHierarchy& planted, int num_scales,
                                     const SweepOptions& options, std::uint64_t seed) {
    const int num_levels = static_cast<int>(planted.levels.size());
    if (num_scales < num_levels)
        throw std::invalid_argument("sweep_partitions: fewer scales than planted levels");
    const int n = planted.levels.front().size();
    const Partition base = Partition::singletons(n);

    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(num_scales));
    for (int b = 0; b < num_levels; ++b) {
        int begin = b * num_scales / num_levels;
        int end = (b + 1) * num_scales / num_levels;
        int block_len = end - begin;
        int transition = 0;
        if (options.noise_rate > 0.0)
            transition = std::min(block_len - 1,
                                  static_cast<int>(options.transition_frac * block_len));
        const Partition& prev =
            b == 0 ? base : planted.levels[static_cast<std::size_t>(b) - 1];
        const Partition& level = planted.levels[static_cast<std::size_t>(b)];
        for (int s = begin; s < end; ++s) {
            if (s - begin < transition) {
                SplitMix64 rng(seed, static_cast<std::uint64_t>(s) + 1);
                out.push_back(noisy_interpolation(prev, level, options.noise_rate, rng));
            } else {
                out.push_back(level);
            }
        }
    }
    return out;
}

} // namespace

ScaledPartitionSequence sweep_partitions(const RandomGraph& g,
                                         const std::vector<double>& scales,
                                         const SweepOptions& options, std::uint64_t seed) {
    if (scales.empty()) throw std::invalid_argument("sweep_partitions: no scales");
    for (std::size_t i = 1; i < scales.size(); ++i)
        if (!(scales[i - 1] < scales[i]))
            throw std::invalid_argument("sweep_partitions: scales must strictly increase");

    std::vector<Partition> partitions;
    if (options.mode == SweepMode::Components) {
        partitions = sweep_components(g, static_cast<int>(scales.size()),
                                      options.noise_rate, seed);
    } else {
        if (options.planted == nullptr)
            throw std::invalid_argument(
                "sweep_partitions: planted-interpolation mode needs a planted hierarchy");
        partitions = sweep_planted(*options.planted, static_cast<int>(scales.size()),
                                   options, seed);
    }
    if (options.singleton_start)
        partitions.front() = Partition::singletons(partitions.front().size());
    return ScaledPartitionSequence(std::move(partitions), scales);
}

ScaledPartitionSequence perturb_scales(const ScaledPartitionSequence& seq, double epsilon,
                                       std::uint64_t seed) {
    if (epsilon < 0) throw std::invalid_argument("perturb_scales: negative epsilon");
    if (epsilon > 0) {
        double min_gap = std::numeric_limits<double>::infinity();
        for (int m = 1; m < seq.size(); ++m)
            min_gap = std::min(min_gap, seq.scale(m) - seq.scale(m - 1));
        if (seq.size() > 1 && !(epsilon < min_gap / 2))
            throw std::invalid_argument(
                "perturb_scales: epsilon must stay below half the minimal scale gap");
    }
    SplitMix64 rng(seed, 0);
    std::vector<double> shifted;
    shifted.reserve(static_cast<std::size_t>(seq.size()));
    for (int m = 0; m < seq.size(); ++m)
        shifted.push_back(seq.scale(m) + (2.0 * rng.next_double() - 1.0) * epsilon);
    return ScaledPartitionSequence(seq.partitions(), std::move(shifted));
}

} // namespace mcf
