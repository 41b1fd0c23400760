#include "mcf/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcf {

StepFunction persistent_hierarchy(const ScaledPartitionSequence& seq,
                                  const ReductionResult& r) {
    StepFunction beta0 = betti_curve(r, 0);
    std::vector<double> knots = seq.scales();
    std::vector<double> values(knots.size());
    for (std::size_t m = 0; m < knots.size(); ++m)
        values[m] = beta0(knots[m]) /
                    static_cast<double>(seq.partition(static_cast<int>(m)).num_clusters());
    return StepFunction(std::move(knots), std::move(values));
}

double average_hierarchy(const StepFunction& h) {
    if (h.size() < 2)
        throw std::invalid_argument("average_hierarchy: undefined for a single scale");
    double total = 0.0;
    for (std::size_t m = 0; m + 1 < h.size(); ++m)
        total += h.value(m) * (h.knot(m + 1) - h.knot(m));
    return total / (h.knot(h.size() - 1) - h.knot(0));
}

ConflictCurves conflict_curves(const ReductionResult& r, int k) {
    if (k < 1 || k >= r.max_dim)
        throw std::out_of_range("conflict_curves: dimension out of range");
    const std::vector<double>& grid = r.scales;
    std::vector<double> births(grid.size(), 0.0), deaths(grid.size(), 0.0);
    auto slot = [&grid](double t) {
        auto it = std::lower_bound(grid.begin(), grid.end(), t);
        return static_cast<std::size_t>(it - grid.begin());
    };
    for (const PersistencePair& pr : r.pairs) {
        if (pr.dim != k || pr.birth == pr.death) continue;
        births[slot(pr.birth)] += 1.0;
        deaths[slot(pr.death)] += 1.0;
    }
    for (const EssentialClass& e : r.essentials)
        if (e.dim == k) births[slot(e.birth)] += 1.0;

    std::vector<double> conflict(grid.size());
    for (std::size_t m = 0; m < grid.size(); ++m) conflict[m] = births[m] - deaths[m];
    return ConflictCurves{StepFunction(grid, births), StepFunction(grid, deaths),
                          StepFunction(grid, std::move(conflict))};
}

StepFunction total_conflict(const ReductionResult& r) {
    std::vector<double> total(r.scales.size(), 0.0);
    for (int k = 1; k < r.max_dim; ++k) {
        ConflictCurves curves = conflict_curves(r, k);
        for (std::size_t m = 0; m < total.size(); ++m)
            total[m] += curves.conflict.value(m);
    }
    return StepFunction(r.scales, std::move(total));
}

std::vector<SelectedScale> select_scales(const StepFunction& h, const StepFunction& conflict,
                                         const std::vector<StepFunction>& betti,
                                         const ScaleSelectionParams& params) {
    if (!h.same_grid(conflict))
        throw std::invalid_argument("select_scales: hierarchy and conflict grids differ");
    for (const StepFunction& b : betti)
        if (!b.same_grid(conflict))
            throw std::invalid_argument("select_scales: Betti curve grid differs");

    std::vector<SelectedScale> out;
    const std::size_t m_count = conflict.size();
    for (std::size_t m = 1; m < m_count; ++m) {
        if (!(conflict.value(m) < conflict.value(m - 1))) continue; // need a dip
        int run = 1;
        while (m + static_cast<std::size_t>(run) < m_count &&
               conflict.value(m + static_cast<std::size_t>(run)) == conflict.value(m))
            ++run;
        if (run < params.plateau_length) continue;
        long betti_sum = 0;
        for (const StepFunction& b : betti)
            betti_sum += static_cast<long>(b.value(m));
        if (betti_sum > params.betti_ceiling) continue;
        out.push_back(SelectedScale{conflict.knot(m), run, betti_sum});
    }
    std::sort(out.begin(), out.end(), [](const SelectedScale& a, const SelectedScale& b) {
        if (a.plateau != b.plateau) return a.plateau > b.plateau;
        if (a.betti_sum != b.betti_sum) return a.betti_sum < b.betti_sum;
        return a.scale < b.scale;
    });
    return out;
}

} // namespace mcf
