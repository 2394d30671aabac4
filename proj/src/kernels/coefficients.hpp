#ifndef EXPMAT_KERNELS_COEFFICIENTS_HPP
#define EXPMAT_KERNELS_COEFFICIENTS_HPP

#include <algorithm>
#include <vector>

#include "expmat/matrix.hpp"

namespace expmat::kernels::detail {

/// Coefficient matrices of a1 and a2 up to their common maximum degree.
struct CoefficientPairs {
    std::vector<MatConst> left;
    std::vector<MatConst> right;

    CoefficientPairs(const MatPoly& a1, const MatPoly& a2) {
        const long top = std::max(max_degree(a1), max_degree(a2));
        for (long d = 0; d <= top; ++d) {
            left.push_back(coefficient(a1, static_cast<std::size_t>(d)));
            right.push_back(coefficient(a2, static_cast<std::size_t>(d)));
        }
    }

    /// P A1 = A2 P, degree by degree.
    bool intertwines(const MatConst& p) const {
        for (std::size_t d = 0; d < left.size(); ++d)
            if (p * left[d] != right[d] * p) return false;
        return true;
    }
};

}  // namespace expmat::kernels::detail

#endif  // EXPMAT_KERNELS_COEFFICIENTS_HPP
