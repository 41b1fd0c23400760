#ifndef MCF_SIMPLEX_HPP
#define MCF_SIMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcf {

/// Abstract simplex: a non-empty, strictly increasing list of vertex ids.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<std::int32_t> vertices) : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        if (vertices_.empty())
            throw std::invalid_argument("simplex must have at least one vertex");
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw std::invalid_argument("simplex has repeated vertices");
    }

    Simplex(std::initializer_list<std::int32_t> vertices)
        : Simplex(std::vector<std::int32_t>(vertices)) {}

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    std::int32_t operator[](std::size_t i) const { return vertices_[i]; }
    const std::vector<std::int32_t>& vertices() const { return vertices_; }

    /// Facet obtained by deleting the i-th vertex. Requires dim() >= 1.
    Simplex facet(std::size_t i) const {
        Simplex f;
        f.vertices_.reserve(vertices_.size() - 1);
        for (std::size_t j = 0; j < vertices_.size(); ++j)
            if (j != i) f.vertices_.push_back(vertices_[j]);
        return f;
    }

    bool operator==(const Simplex& o) const { return vertices_ == o.vertices_; }
    bool operator!=(const Simplex& o) const { return vertices_ != o.vertices_; }
    bool operator<(const Simplex& o) const { return vertices_ < o.vertices_; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(vertices_[i]);
        }
        return s + "]";
    }

private:
    std::vector<std::int32_t> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::int32_t v : s.vertices()) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace mcf

#endif
