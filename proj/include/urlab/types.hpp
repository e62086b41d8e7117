#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace urlab {

using Complex       = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix    = Eigen::MatrixXd;
using RealVector    = Eigen::VectorXd;

// Default inequality tolerance. Verdicts pass iff margin >= -tol * scale
// with scale = max(1, |lhs|, |rhs|). The CLI may override via UR_LAB_TOL.
inline constexpr double kDefaultTol = 1e-10;

inline double margin_scale(double lhs, double rhs) {
    return std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Thrown for invalid user input (bad dimensions, inconsistent flags,
// malformed files). The CLI maps it to exit code 2. Inequality failures
// are verdicts, never exceptions.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A set of 1-based row/column indices selecting a principal submatrix.
// Indices are kept strictly increasing; validate() enforces the range.
struct IndexSet {
    std::vector<int> indices;

    IndexSet() = default;
    IndexSet(std::initializer_list<int> idx) : indices(idx) {}
    explicit IndexSet(std::vector<int> idx) : indices(std::move(idx)) {}

    int order() const { return static_cast<int>(indices.size()); }

    void validate(int dim) const {
        if (indices.empty())
            throw InputError("index set must be non-empty");
        int prev = 0;
        for (int i : indices) {
            if (i < 1 || i > dim)
                throw InputError("index " + std::to_string(i) +
                                 " out of range 1.." + std::to_string(dim));
            if (i <= prev)
                throw InputError("index set must be strictly increasing");
            prev = i;
        }
    }

    bool operator==(const IndexSet& other) const { return indices == other.indices; }
};

} // namespace urlab
