#ifndef MCF_FILTRATION_HPP
#define MCF_FILTRATION_HPP

#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcf/partition.hpp"
#include "mcf/simplex.hpp"

namespace mcf {

struct Cell {
    double value = 0.0;
    Simplex simplex;

    int dim() const { return simplex.dim(); }
};

/// Filtered abstract simplicial complex.
///
/// Cells are kept in reduction order — (value, dimension, lexicographic
/// vertices) — and the structure is immutable after construction. The scale
/// grid records the critical values of the originating sequence, which may be
/// a strict superset of the distinct cell values (duplicate partitions add
/// no cells).
class FilteredComplex {
public:
    FilteredComplex() = default;

    /// Sorts the cells into reduction order and indexes them. Throws on
    /// duplicate simplices.
    FilteredComplex(std::vector<Cell> cells, int max_dim,
                    std::vector<double> scale_grid = {});

    std::size_t size() const { return cells_.size(); }
    const Cell& cell(std::size_t i) const { return cells_[i]; }
    const std::vector<Cell>& cells() const { return cells_; }
    int max_dim() const { return max_dim_; }
    const std::vector<double>& scale_grid() const { return scale_grid_; }

    bool contains(const Simplex& s) const { return index_.count(s) > 0; }

    /// Index of a simplex in reduction order; -1 when absent.
    long index_of(const Simplex& s) const {
        auto it = index_.find(s);
        return it == index_.end() ? -1 : static_cast<long>(it->second);
    }

    /// Filtration value of a stored simplex, i.e. the smallest scale whose
    /// sublevel complex contains it. Throws std::out_of_range when absent.
    double value_of(const Simplex& s) const;

private:
    std::vector<Cell> cells_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
    int max_dim_ = 0;
    std::vector<double> scale_grid_;
};

/// Free-function spelling of FilteredComplex::value_of.
double filtration_value(const FilteredComplex& fc, const Simplex& s);

/// Weighted graph recording the first co-clustering scale of each pair.
/// Pairs never co-clustered are simply not stored: a zero-weight sentinel
/// would collide with legitimate zero or negative scale values.
class WeightedGraph {
public:
    WeightedGraph(int n, double vertex_value)
        : n_(n), vertex_value_(vertex_value) {}

    int num_vertices() const { return n_; }
    double vertex_value() const { return vertex_value_; }

    void set_edge(int u, int v, double w);
    std::optional<double> edge(int u, int v) const;
    std::size_t num_edges() const { return weights_.size(); }

    /// Neighbours of u with edge weight, sorted by vertex id.
    std::vector<std::pair<int, double>> neighbours(int u) const;

private:
    std::size_t key(int u, int v) const;

    int n_;
    double vertex_value_;
    std::unordered_map<std::size_t, double> weights_;
};

/// Multiscale clustering filtration: the union over scales of the solid
/// simplices of every cluster, truncated to the max_dim-skeleton. Each
/// simplex carries the scale of the first partition containing it inside a
/// single cluster.
FilteredComplex build_mcf(const ScaledPartitionSequence& seq, int max_dim);

/// Cluster assignment graph: edge weight = first scale at which the two
/// points share a cluster.
WeightedGraph build_cag(const ScaledPartitionSequence& seq);

/// Flag complex of the weighted graph: a simplex enters when its last edge
/// does. 2-determined by construction.
FilteredComplex build_clique_filtration(const WeightedGraph& g, int max_dim);

/// Nerve filtration: one vertex per cluster occurrence (partition index,
/// cluster index), one simplex per family of clusters with a common point.
/// A simplex enters at the scale of its latest member cluster.
FilteredComplex build_mcnf(const ScaledPartitionSequence& seq, int max_dim);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const { return ok; }
};

/// Checks closure (every face present) and monotonicity (no face with a
/// larger value than its coface), listing each violation found.
ValidationReport validate(const FilteredComplex& fc);

} // namespace mcf

#endif
