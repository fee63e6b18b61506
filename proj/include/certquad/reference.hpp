// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/geometry.hpp"
#include "certquad/normed_space.hpp"

#include <cstddef>
#include <functional>

namespace certquad {

/// Component-wise composite Simpson with `subintervals` (even, >= 2) equal
/// steps, compensated sums per coordinate. Reference integrals only; no
/// certificate ever consumes this.
Element simpson_integral(const std::function<Element(double)>& g, const Space& space, const Interval& interval,
                         std::size_t subintervals);

}  // namespace certquad
