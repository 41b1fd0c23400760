#include "mcf/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcf {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// x^(p-2) mod p, the inverse of x in Z_p for prime p.
std::int64_t mod_inverse(std::int64_t x, std::int64_t p) {
    std::int64_t result = 1, base = x % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

/// Sparse Z_p column: (row, coefficient) entries sorted by row, coefficients
/// in 1..p-1.
using Column = std::vector<std::pair<std::uint32_t, std::int32_t>>;

/// target += scale * source (mod p), merging sorted entry lists.
Column axpy(const Column& target, const Column& source, std::int64_t scale, std::int64_t p) {
    Column out;
    out.reserve(target.size() + source.size());
    std::size_t a = 0, b = 0;
    while (a < target.size() || b < source.size()) {
        if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
            out.push_back(target[a++]);
        } else if (a == target.size() || source[b].first < target[a].first) {
            std::int64_t c = source[b].second * scale % p;
            if (c) out.emplace_back(source[b].first, static_cast<std::int32_t>(c));
            ++b;
        } else {
            std::int64_t c = (target[a].second + source[b].second * scale) % p;
            if (c) out.emplace_back(target[a].first, static_cast<std::int32_t>(c));
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace

ReductionResult reduce(const FilteredComplex& fc, int modulus) {
    if (!is_prime(modulus))
        throw std::invalid_argument("reduce: modulus " + std::to_string(modulus) +
                                    " is not prime");
    ValidationReport report = validate(fc);
    if (!report.ok) {
        std::string msg = "reduce: complex fails validation";
        if (!report.violations.empty()) msg += ": " + report.violations.front();
        throw std::invalid_argument(msg);
    }

    const std::int64_t p = modulus;
    const std::size_t n = fc.size();

    ReductionResult result;
    result.modulus = modulus;
    result.max_dim = fc.max_dim();
    result.num_cells = n;
    result.scales = fc.scale_grid();

    // boundary columns, alternating signs mod p per the boundary operator
    std::vector<Column> columns(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Cell& c = fc.cell(j);
        if (c.dim() == 0) continue;
        Column& col = columns[j];
        col.reserve(c.simplex.size());
        for (std::size_t f = 0; f < c.simplex.size(); ++f) {
            long row = fc.index_of(c.simplex.facet(f));
            std::int64_t coeff = (f % 2 == 0) ? 1 : p - 1;
            col.emplace_back(static_cast<std::uint32_t>(row),
                             static_cast<std::int32_t>(coeff));
        }
        std::sort(col.begin(), col.end());
    }

    std::vector<long> pivot_owner(n, -1); // row -> column with that low entry
    std::vector<bool> paired(n, false);

    for (std::size_t j = 0; j < n; ++j) {
        Column& col = columns[j];
        while (!col.empty()) {
            std::uint32_t low = col.back().first;
            long owner = pivot_owner[low];
            if (owner < 0) break;
            // eliminate: col -= (col.low / owner.low) * owner
            std::int64_t factor =
                col.back().second *
                mod_inverse(columns[static_cast<std::size_t>(owner)].back().second, p) % p;
            col = axpy(col, columns[static_cast<std::size_t>(owner)], p - factor, p);
        }
        if (!col.empty()) {
            std::uint32_t low = col.back().first;
            pivot_owner[low] = static_cast<long>(j);
            paired[low] = true;
            paired[j] = true;
            result.pairs.push_back(PersistencePair{low, j, fc.cell(low).dim(),
                                                   fc.cell(low).value, fc.cell(j).value});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!paired[i])
            result.essentials.push_back(
                EssentialClass{i, fc.cell(i).dim(), fc.cell(i).value});

    return result;
}

PersistenceDiagram diagram(const ReductionResult& r, int k) {
    if (k < 0 || k >= r.max_dim)
        throw std::out_of_range("diagram: dimension " + std::to_string(k) +
                                " outside [0, " + std::to_string(r.max_dim - 1) + "]");
    PersistenceDiagram d;
    d.dim = k;
    for (const PersistencePair& pr : r.pairs)
        if (pr.dim == k && pr.birth < pr.death)
            d.points.push_back(DiagramPoint{pr.birth, pr.death});
    for (const EssentialClass& e : r.essentials)
        if (e.dim == k) d.points.push_back(DiagramPoint{e.birth, kInfiniteDeath});
    std::sort(d.points.begin(), d.points.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return d;
}

StepFunction betti_curve(const ReductionResult& r, int k) {
    if (k < 0 || k >= r.max_dim)
        throw std::out_of_range("betti_curve: dimension out of range");
    const std::vector<double>& grid = r.scales;
    std::vector<double> values(grid.size(), 0.0);
    auto add_interval = [&grid, &values](double birth, double death) {
        // alive on [birth, death): contributes at every grid point in range
        auto from = std::lower_bound(grid.begin(), grid.end(), birth);
        auto to = std::lower_bound(grid.begin(), grid.end(), death);
        for (auto it = from; it != to; ++it)
            values[static_cast<std::size_t>(it - grid.begin())] += 1.0;
    };
    for (const PersistencePair& pr : r.pairs)
        if (pr.dim == k) add_interval(pr.birth, pr.death);
    for (const EssentialClass& e : r.essentials)
        if (e.dim == k) add_interval(e.birth, kInfiniteDeath);
    return StepFunction(grid, values);
}

long persistent_betti(const ReductionResult& r, int k, double i, double p) {
    if (p < 0)
        throw std::invalid_argument("persistent_betti: negative persistence offset");
    long count = 0;
    for (const PersistencePair& pr : r.pairs)
        if (pr.dim == k && pr.birth <= i && pr.death > i + p) ++count;
    for (const EssentialClass& e : r.essentials)
        if (e.dim == k && e.birth <= i) ++count;
    return count;
}

long multiplicity(const ReductionResult& r, int k, double i, double j) {
    if (!(i < j))
        throw std::invalid_argument("multiplicity: requires birth < death");
    long count = 0;
    if (j == kInfiniteDeath) {
        for (const EssentialClass& e : r.essentials)
            if (e.dim == k && e.birth == i) ++count;
        return count;
    }
    for (const PersistencePair& pr : r.pairs)
        if (pr.dim == k && pr.birth == i && pr.death == j) ++count;
    return count;
}

} // namespace mcf
