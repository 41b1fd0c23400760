#include "mcf/oracle.hpp"

#include <Eigen/Dense>

#include <map>
#include <stdexcept>
#include <vector>

namespace mcf {

namespace {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

std::int64_t mod_inverse(std::int64_t x, std::int64_t p) {
    std::int64_t result = 1, base = x % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

long rank_mod_p(IntMatrix m, std::int64_t p) {
    long rank = 0;
    Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            if (m(r, col) % p != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        m.row(pivot).swap(m.row(row));
        std::int64_t inv = mod_inverse(((m(row, col) % p) + p) % p, p);
        for (Eigen::Index c = col; c < cols; ++c)
            m(row, c) = ((m(row, c) % p) * inv % p + p) % p;
        for (Eigen::Index r = row + 1; r < rows; ++r) {
            std::int64_t f = ((m(r, col) % p) + p) % p;
            if (f == 0) continue;
            for (Eigen::Index c = col; c < cols; ++c)
                m(r, c) = ((m(r, c) - f * m(row, c)) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

long oracle_betti(const FilteredComplex& fc, double t, int k, int modulus,
                  std::size_t cell_cap) {
    if (k < 0) throw std::invalid_argument("oracle_betti: negative dimension");
    if (modulus < 2) throw std::invalid_argument("oracle_betti: bad modulus");

    // collect the sublevel complex, simplices keyed per dimension
    std::size_t total = 0;
    std::vector<std::map<Simplex, int>> by_dim; // simplex -> column index per dim
    for (const Cell& c : fc.cells()) {
        if (c.value > t) continue;
        ++total;
        int d = c.dim();
        if (d >= static_cast<int>(by_dim.size())) by_dim.resize(static_cast<std::size_t>(d) + 1);
        auto& level = by_dim[static_cast<std::size_t>(d)];
        int idx = static_cast<int>(level.size());
        level.emplace(c.simplex, idx);
    }
    if (total > cell_cap)
        throw std::invalid_argument("oracle_betti: sublevel complex exceeds the cell cap");

    auto count = [&by_dim](int d) -> long {
        if (d < 0 || d >= static_cast<int>(by_dim.size())) return 0;
        return static_cast<long>(by_dim[static_cast<std::size_t>(d)].size());
    };

    // dense boundary operator from (d)-cells to (d-1)-cells
    auto boundary_rank = [&](int d) -> long {
        if (d <= 0 || count(d) == 0 || count(d - 1) == 0) return 0;
        IntMatrix m = IntMatrix::Zero(count(d - 1), count(d));
        const auto& domain = by_dim[static_cast<std::size_t>(d)];
        const auto& codomain = by_dim[static_cast<std::size_t>(d - 1)];
        for (const auto& [simplex, col] : domain) {
            for (std::size_t f = 0; f < simplex.size(); ++f) {
                auto it = codomain.find(simplex.facet(f));
                if (it == codomain.end())
                    throw std::logic_error("oracle_betti: sublevel set is not closed");
                std::int64_t sign = (f % 2 == 0) ? 1 : modulus - 1;
                m(it->second, col) = sign;
            }
        }
        return rank_mod_p(std::move(m), modulus);
    };

    long n_k = count(k);
    if (n_k == 0) return 0;
    return n_k - boundary_rank(k) - boundary_rank(k + 1);
}

} // namespace mcf
