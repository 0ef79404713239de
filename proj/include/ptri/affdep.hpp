#pragma once

#include <vector>

#include "ptri/matrix.hpp"
#include "ptri/numeric.hpp"

namespace ptri {

// The unique affine dependence of n+2 points affinely spanning dimension n:
// sum a_i = 0 and sum a_i v_i = 0, coefficients coprime integers with the
// first nonzero one positive.
struct AffineDependence {
    std::vector<std::vector<Int>> points;
    std::vector<Int> coeffs;

    std::vector<int> positive_support() const { return support(+1); }
    std::vector<int> negative_support() const { return support(-1); }
    std::vector<int> zero_support() const { return support(0); }

private:
    std::vector<int> support(int s) const {
        std::vector<int> idx;
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (sign(coeffs[i]) == s) idx.push_back((int)i);
        return idx;
    }
};

AffineDependence affine_dependence(const std::vector<std::vector<Int>>& pts);

}  // namespace ptri
