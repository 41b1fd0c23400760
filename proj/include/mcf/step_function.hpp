#ifndef MCF_STEP_FUNCTION_HPP
#define MCF_STEP_FUNCTION_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mcf {

/// Piecewise-constant function over a strictly increasing knot grid.
///
/// Evaluation follows the left-closed convention: on [t_m, t_{m+1}) the
/// function takes value v_m, and it holds v_M for t >= t_M. Below the first
/// knot it returns v_1, mirroring how the scale function extends a partition
/// sequence to all of R.
class StepFunction {
public:
    StepFunction() = default;

    StepFunction(std::vector<double> knots, std::vector<double> values)
        : knots_(std::move(knots)), values_(std::move(values)) {
        if (knots_.size() != values_.size())
            throw std::invalid_argument("step function: knot/value length mismatch");
        if (knots_.empty())
            throw std::invalid_argument("step function: empty grid");
        for (std::size_t i = 1; i < knots_.size(); ++i)
            if (knots_[i - 1] >= knots_[i])
                throw std::invalid_argument("step function: knots must strictly increase");
    }

    double operator()(double t) const {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
        if (it == knots_.begin()) return values_.front();
        return values_[static_cast<std::size_t>(it - knots_.begin()) - 1];
    }

    std::size_t size() const { return knots_.size(); }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& values() const { return values_; }
    double knot(std::size_t m) const { return knots_[m]; }
    double value(std::size_t m) const { return values_[m]; }

    bool same_grid(const StepFunction& o) const { return knots_ == o.knots_; }

private:
    std::vector<double> knots_;
    std::vector<double> values_;
};

} // namespace mcf

#endif
