#include "mcf/filtration.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace mcf {

namespace {

bool reduction_order(const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.simplex < b.simplex;
}

} // namespace

FilteredComplex::FilteredComplex(std::vector<Cell> cells, int max_dim,
                                 std::vector<double> scale_grid)
    : cells_(std::move(cells)), max_dim_(max_dim), scale_grid_(std::move(scale_grid)) {
    if (max_dim_ < 0)
        throw std::invalid_argument("filtered complex: max_dim must be non-negative");
    std::sort(cells_.begin(), cells_.end(), reduction_order);
    index_.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].dim() > max_dim_)
            throw std::invalid_argument("filtered complex: cell above the dimension cap");
        if (!index_.emplace(cells_[i].simplex, i).second)
            throw std::invalid_argument("filtered complex: duplicate simplex " +
                                        cells_[i].simplex.str());
    }
    if (scale_grid_.empty()) {
        for (const Cell& c : cells_) scale_grid_.push_back(c.value);
        std::sort(scale_grid_.begin(), scale_grid_.end());
        scale_grid_.erase(std::unique(scale_grid_.begin(), scale_grid_.end()),
                          scale_grid_.end());
    } else {
        for (std::size_t i = 1; i < scale_grid_.size(); ++i)
            if (!(scale_grid_[i - 1] < scale_grid_[i]))
                throw std::invalid_argument("filtered complex: scale grid must strictly increase");
    }
}

double FilteredComplex::value_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        throw std::out_of_range("simplex " + s.str() + " not in complex");
    return cells_[it->second].value;
}

double filtration_value(const FilteredComplex& fc, const Simplex& s) {
    return fc.value_of(s);
}

std::size_t WeightedGraph::key(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
}

void WeightedGraph::set_edge(int u, int v, double w) {
    if (u == v)
        throw std::invalid_argument("weighted graph: no self loops");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("weighted graph: vertex out of range");
    weights_[key(u, v)] = w;
}

std::optional<double> WeightedGraph::edge(int u, int v) const {
    auto it = weights_.find(key(u, v));
    if (it == weights_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, double>> WeightedGraph::neighbours(int u) const {
    std::vector<std::pair<int, double>> out;
    for (int v = 0; v < n_; ++v) {
        if (v == u) continue;
        if (auto w = edge(u, v)) out.emplace_back(v, *w);
    }
    return out;
}

namespace {

/// Emits every subset of `members` with 1..max_size elements, invoking
/// `sink(subset)` with a strictly increasing vertex list.
template <typename Sink>
void for_each_subset(const std::vector<std::int32_t>& members, std::size_t max_size,
                     Sink&& sink) {
    std::vector<std::int32_t> current;
    current.reserve(max_size);
    // iterative lexicographic enumeration over sizes avoids deep recursion
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < members.size(); ++i) {
            current.push_back(members[i]);
            sink(current);
            if (current.size() < max_size) self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

struct VectorHash {
    std::size_t operator()(const std::vector<std::int32_t>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::int32_t x : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

FilteredComplex build_mcf(const ScaledPartitionSequence& seq, int max_dim) {
    if (max_dim < 1)
        throw std::invalid_argument("build_mcf: max_dim must be at least 1");
    const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;

    std::unordered_map<Simplex, double, SimplexHash> first_seen;
    std::unordered_set<std::vector<std::int32_t>, VectorHash> seen_clusters;

    for (int m = 0; m < seq.size(); ++m) {
        const double t = seq.scale(m);
        for (auto& members : seq.partition(m).clusters()) {
            if (!seen_clusters.insert(members).second)
                continue; // repeated cluster contributes nothing new
            for_each_subset(members, max_size, [&](const std::vector<std::int32_t>& subset) {
                Simplex s(subset);
                first_seen.emplace(std::move(s), t);
            });
        }
    }

    std::vector<Cell> cells;
    cells.reserve(first_seen.size());
    for (auto& [simplex, value] : first_seen)
        cells.push_back(Cell{value, simplex});
    return FilteredComplex(std::move(cells), max_dim, seq.scales());
}

WeightedGraph build_cag(const ScaledPartitionSequence& seq) {
    WeightedGraph g(seq.n_points(), seq.scale(0));
    for (int m = 0; m < seq.size(); ++m) {
        const double t = seq.scale(m);
        for (auto& members : seq.partition(m).clusters()) {
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    if (!g.edge(members[a], members[b]))
                        g.set_edge(members[a], members[b], t);
        }
    }
    return g;
}

FilteredComplex build_clique_filtration(const WeightedGraph& g, int max_dim) {
    if (max_dim < 1)
        throw std::invalid_argument("build_clique_filtration: max_dim must be at least 1");

    std::vector<std::vector<std::pair<int, double>>> adj(
        static_cast<std::size_t>(g.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u)
        adj[static_cast<std::size_t>(u)] = g.neighbours(u);

    std::vector<Cell> cells;
    for (int u = 0; u < g.num_vertices(); ++u)
        cells.push_back(Cell{g.vertex_value(), Simplex{u}});

    // grow cliques over later-numbered vertices only, so each clique is
    // enumerated exactly once in lexicographic order
    std::vector<std::int32_t> clique;
    std::vector<std::pair<int, double>> frontier; // candidate vertex, max weight seen
    auto extend = [&](auto&& self, double value,
                      const std::vector<std::pair<int, double>>& candidates) -> void {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            auto [v, v_value] = candidates[i];
            clique.push_back(static_cast<std::int32_t>(v));
            cells.push_back(Cell{std::max(value, v_value), Simplex(clique)});
            if (clique.size() < static_cast<std::size_t>(max_dim) + 1) {
                std::vector<std::pair<int, double>> next;
                for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                    int w = candidates[j].first;
                    if (auto ew = g.edge(v, w))
                        next.emplace_back(w, std::max(candidates[j].second, *ew));
                }
                if (!next.empty()) self(self, std::max(value, v_value), next);
            }
            clique.pop_back();
        }
    };
    for (int u = 0; u < g.num_vertices(); ++u) {
        clique.assign(1, static_cast<std::int32_t>(u));
        std::vector<std::pair<int, double>> candidates;
        for (auto& [v, w] : adj[static_cast<std::size_t>(u)])
            if (v > u) candidates.emplace_back(v, w);
        if (!candidates.empty()) extend(extend, g.vertex_value(), candidates);
        clique.clear();
    }

    return FilteredComplex(std::move(cells), max_dim);
}

FilteredComplex build_mcnf(const ScaledPartitionSequence& seq, int max_dim) {
    if (max_dim < 1)
        throw std::invalid_argument("build_mcnf: max_dim must be at least 1");
    const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;

    // nerve vertex ids: clusters enumerated partition by partition
    std::vector<int> offset(static_cast<std::size_t>(seq.size()) + 1, 0);
    for (int m = 0; m < seq.size(); ++m)
        offset[static_cast<std::size_t>(m) + 1] =
            offset[static_cast<std::size_t>(m)] + seq.partition(m).num_clusters();

    std::unordered_map<Simplex, double, SimplexHash> first_seen;
    for (int m = 0; m < seq.size(); ++m) {
        const double t = seq.scale(m);
        for (int c = 0; c < seq.partition(m).num_clusters(); ++c)
            first_seen.emplace(Simplex{offset[static_cast<std::size_t>(m)] + c}, t);
    }

    // a nerve simplex has a common point iff all member clusters contain one
    // common x, so enumerate subsets of each point's cluster trail
    for (int x = 0; x < seq.n_points(); ++x) {
        std::vector<std::int32_t> trail;
        trail.reserve(static_cast<std::size_t>(seq.size()));
        for (int m = 0; m < seq.size(); ++m)
            trail.push_back(static_cast<std::int32_t>(offset[static_cast<std::size_t>(m)] +
                                                      seq.partition(m).label(x)));
        // trail is strictly increasing by construction; the simplex value is
        // the scale of its latest member, i.e. of the largest vertex id
        for_each_subset(trail, max_size, [&](const std::vector<std::int32_t>& subset) {
            if (subset.size() < 2) return; // vertices already inserted
            int last = subset.back();
            int m = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), last) -
                                     offset.begin()) -
                    1;
            first_seen.emplace(Simplex(subset), seq.scale(m));
        });
    }

    std::vector<Cell> cells;
    cells.reserve(first_seen.size());
    for (auto& [simplex, value] : first_seen)
        cells.push_back(Cell{value, simplex});
    return FilteredComplex(std::move(cells), max_dim, seq.scales());
}

ValidationReport validate(const FilteredComplex& fc) {
    ValidationReport report;
    auto flag = [&report](std::string msg) {
        report.ok = false;
        if (report.violations.size() < 50) report.violations.push_back(std::move(msg));
    };
    for (std::size_t i = 0; i < fc.size(); ++i) {
        const Cell& c = fc.cell(i);
        if (c.dim() == 0) continue;
        for (std::size_t f = 0; f < c.simplex.size(); ++f) {
            Simplex face = c.simplex.facet(f);
            long j = fc.index_of(face);
            if (j < 0) {
                flag("missing face " + face.str() + " of " + c.simplex.str());
            } else if (fc.cell(static_cast<std::size_t>(j)).value > c.value) {
                flag("face " + face.str() + " enters after its coface " + c.simplex.str());
            }
        }
    }
    return report;
}

} // namespace mcf
