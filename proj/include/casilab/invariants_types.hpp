#pragma once

#include <vector>

#include "casilab/poly.hpp"

namespace casilab {

/// Square matrix of polynomial entries in the variables of one algebra;
/// the source of characteristic-polynomial Casimirs.
struct MatrixTemplate {
    uint32_t size = 0;  // N
    uint32_t dim = 0;   // number of algebra variables
    std::vector<std::vector<Poly>> entries;
    std::string comment;

    const Poly& at(uint32_t r, uint32_t c) const { return entries[r][c]; }
};

}  // namespace casilab
