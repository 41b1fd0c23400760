#include "mcf/metrics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mcf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// L_q distance between two finite diagram points.
double ground_distance(const DiagramPoint& x, const DiagramPoint& y, double q) {
    double db = std::abs(x.birth - y.birth);
    double dd = std::abs(x.death - y.death);
    if (q == kInf) return std::max(db, dd);
    return std::pow(std::pow(db, q) + std::pow(dd, q), 1.0 / q);
}

/// L_q distance from a finite point to its diagonal projection.
double diagonal_distance(const DiagramPoint& x, double q) {
    double half_gap = (x.death - x.birth) / 2.0;
    if (q == kInf) return half_gap;
    return half_gap * std::pow(2.0, 1.0 / q);
}

/// Exact minimum-cost perfect matching on a square cost matrix via the
/// shortest-augmenting-path (Jonker-Volgenant) formulation, O(n^3).
double assignment_cost(const Eigen::MatrixXd& cost) {
    const int n = static_cast<int>(cost.rows());
    if (n == 0) return 0.0;
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> match(static_cast<std::size_t>(n) + 1, 0); // column -> row
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> min_slack(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<int> predecessor(static_cast<std::size_t>(n) + 1, 0);
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        do {
            used[j0] = true;
            int i0 = match[j0], j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double slack = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (slack < min_slack[j]) {
                    min_slack[j] = slack;
                    predecessor[j] = j0;
                }
                if (min_slack[j] < delta) {
                    delta = min_slack[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        // augment along the alternating path
        while (j0 != 0) {
            int j1 = predecessor[j0];
            match[j0] = match[j1];
            j0 = j1;
        }
    }
    double total = 0.0;
    for (int j = 1; j <= n; ++j)
        if (match[j] > 0) total += cost(match[j] - 1, j - 1);
    return total;
}

struct SplitDiagram {
    std::vector<DiagramPoint> finite;
    std::vector<double> essential_births;
};

SplitDiagram split(const PersistenceDiagram& d) {
    SplitDiagram s;
    for (const DiagramPoint& p : d.points) {
        if (p.essential())
            s.essential_births.push_back(p.birth);
        else
            s.finite.push_back(p);
    }
    std::sort(s.essential_births.begin(), s.essential_births.end());
    return s;
}

/// Cost matrix of the diagonal-augmented transport problem between the
/// finite parts: rows are A-points then B-diagonal slots, columns are
/// B-points then A-diagonal slots. Entries are already raised to the q-th
/// power for finite q; for q = inf they are plain L_inf costs.
Eigen::MatrixXd transport_costs(const std::vector<DiagramPoint>& a,
                                const std::vector<DiagramPoint>& b, double q) {
    const std::size_t n = a.size() + b.size();
    Eigen::MatrixXd cost = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                 static_cast<Eigen::Index>(n));
    auto raised = [q](double x) { return q == kInf ? x : std::pow(x, q); };
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j)
            cost(i, j) = raised(ground_distance(a[i], b[j], q));
        for (std::size_t j = 0; j < a.size(); ++j)
            cost(i, b.size() + j) =
                (i == j) ? raised(diagonal_distance(a[i], q)) : kInf;
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            cost(a.size() + i, j) =
                (i == j) ? raised(diagonal_distance(b[i], q)) : kInf;
    // diagonal-to-diagonal slots cost nothing
    return cost;
}

/// Replaces infinite entries with a large finite surrogate so the assignment
/// solver can run; the optimum never uses them because each row keeps a
/// finite fallback (its own diagonal slot).
void definitize(Eigen::MatrixXd& cost) {
    double max_finite = 0.0;
    for (Eigen::Index i = 0; i < cost.rows(); ++i)
        for (Eigen::Index j = 0; j < cost.cols(); ++j)
            if (std::isfinite(cost(i, j))) max_finite = std::max(max_finite, cost(i, j));
    double big = (max_finite + 1.0) * static_cast<double>(cost.rows() + 1);
    for (Eigen::Index i = 0; i < cost.rows(); ++i)
        for (Eigen::Index j = 0; j < cost.cols(); ++j)
            if (!std::isfinite(cost(i, j))) cost(i, j) = big;
}

} // namespace

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double q) {
    if (!(q >= 1.0) || q == kInf)
        throw std::invalid_argument("wasserstein: q must be finite and >= 1");
    if (a.dim != b.dim)
        throw std::invalid_argument("wasserstein: diagrams of different dimension");

    SplitDiagram sa = split(a), sb = split(b);
    if (sa.essential_births.size() != sb.essential_births.size()) return kInf;

    // essential points decouple: sorted pairing is optimal for |x-y|^q costs
    double total = 0.0;
    for (std::size_t i = 0; i < sa.essential_births.size(); ++i)
        total += std::pow(std::abs(sa.essential_births[i] - sb.essential_births[i]), q);

    if (!sa.finite.empty() || !sb.finite.empty()) {
        Eigen::MatrixXd cost = transport_costs(sa.finite, sb.finite, q);
        definitize(cost);
        total += assignment_cost(cost);
    }
    return std::pow(total, 1.0 / q);
}

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("bottleneck: diagrams of different dimension");

    SplitDiagram sa = split(a), sb = split(b);
    if (sa.essential_births.size() != sb.essential_births.size()) return kInf;

    double essential_cost = 0.0;
    for (std::size_t i = 0; i < sa.essential_births.size(); ++i)
        essential_cost = std::max(
            essential_cost, std::abs(sa.essential_births[i] - sb.essential_births[i]));

    const std::size_t n = sa.finite.size() + sb.finite.size();
    if (n == 0) return essential_cost;

    Eigen::MatrixXd cost = transport_costs(sa.finite, sb.finite, kInf);

    // candidate thresholds: every finite entry of the cost matrix
    std::vector<double> candidates;
    for (Eigen::Index i = 0; i < cost.rows(); ++i)
        for (Eigen::Index j = 0; j < cost.cols(); ++j)
            if (std::isfinite(cost(i, j))) candidates.push_back(cost(i, j));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Kuhn's bipartite matching restricted to edges with cost <= threshold
    auto feasible = [&cost, n](double threshold) {
        std::vector<int> match_col(n, -1);
        std::vector<int> match_row(n, -1);
        std::vector<bool> visited(n);
        auto try_augment = [&](auto&& self, std::size_t row) -> bool {
            for (std::size_t col = 0; col < n; ++col) {
                if (visited[col] || cost(static_cast<Eigen::Index>(row),
                                         static_cast<Eigen::Index>(col)) > threshold)
                    continue;
                visited[col] = true;
                if (match_col[col] < 0 ||
                    self(self, static_cast<std::size_t>(match_col[col]))) {
                    match_col[col] = static_cast<int>(row);
                    match_row[row] = static_cast<int>(col);
                    return true;
                }
            }
            return false;
        };
        for (std::size_t row = 0; row < n; ++row) {
            std::fill(visited.begin(), visited.end(), false);
            if (!try_augment(try_augment, row)) return false;
        }
        return true;
    };

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(essential_cost, candidates[lo]);
}

double filtration_distance(const FilteredComplex& a, const FilteredComplex& b, double q) {
    if (!(q >= 1.0))
        throw std::invalid_argument("filtration_distance: q must be >= 1 or infinity");
    if (a.size() != b.size())
        throw std::invalid_argument(
            "filtration_distance: cell sets differ; pad both sequences with the trivial "
            "one-cluster partition so the final complexes coincide");
    double sum = 0.0, max_abs = 0.0;
    for (const Cell& c : a.cells()) {
        long j = b.index_of(c.simplex);
        if (j < 0)
            throw std::invalid_argument(
                "filtration_distance: cell " + c.simplex.str() +
                " missing from the second complex; pad both sequences with the trivial "
                "one-cluster partition so the final complexes coincide");
        double diff = std::abs(c.value - b.cell(static_cast<std::size_t>(j)).value);
        max_abs = std::max(max_abs, diff);
        if (q != kInf) sum += std::pow(diff, q);
    }
    return q == kInf ? max_abs : std::pow(sum, 1.0 / q);
}

} // namespace mcf
