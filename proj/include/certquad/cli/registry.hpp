// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/normed_space.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace certquad::cli {

/// Compiled integrand with analytic derivative and L∞ envelope.
struct RegisteredFunction {
    std::string name;
    std::string description;
    Space native_space;
    /// Other spaces the function can be built in; empty means native only.
    std::function<bool(const Space&)> accepts;
    std::function<VectorFunction(const Space&)> build;
    /// Smooth enough for the kernel identity and Simpson oracles.
    bool smooth = true;
};

const std::vector<RegisteredFunction>& registry();
const RegisteredFunction& find_function(const std::string& name);

/// Builds `name` in `space` (the native space when omitted). Throws
/// std::invalid_argument for unknown names or unsupported spaces.
VectorFunction make_function(const std::string& name, const std::optional<std::string>& space = std::nullopt);

/// Location of the kink of abs_kink; a dyadic value so power-of-two Simpson
/// grids on [0, 1] put it on a panel boundary.
inline constexpr double abs_kink_center = 0.375;

}  // namespace certquad::cli
