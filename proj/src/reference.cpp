// SPDX-License-Identifier: Apache-2.0
#include "certquad/reference.hpp"

#include "certquad/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace certquad {

Element simpson_integral(const std::function<Element(double)>& g, const Space& space, const Interval& interval,
                         std::size_t subintervals)
{
    if (subintervals < 2 || subintervals % 2 != 0)
        throw std::invalid_argument("Simpson resolution must be even and >= 2");
    const std::size_t dim = space.real_dimension();
    if (interval.degenerate())
        return Element::zero(space);

    const double h = interval.length() / static_cast<double>(subintervals);
    std::vector<CompensatedSum> ends(dim), odd(dim), even(dim);
    auto accumulate = [&](std::vector<CompensatedSum>& acc, double t) {
        const Element y = g(t);
        if (y.space() != space)
            throw std::logic_error("integrand returned an element outside its space");
        for (std::size_t j = 0; j < dim; ++j)
            acc[j].add(y.coords()[j]);
    };
    accumulate(ends, interval.a());
    accumulate(ends, interval.b());
    for (std::size_t k = 1; k < subintervals; ++k) {
        const double t = interval.a() + static_cast<double>(k) * h;
        accumulate(k % 2 == 1 ? odd : even, t);
    }
    std::vector<double> out(dim);
    for (std::size_t j = 0; j < dim; ++j)
        out[j] = h / 3.0 * (ends[j].value() + 4.0 * odd[j].value() + 2.0 * even[j].value());
    return {space, std::move(out)};
}

}  // namespace certquad
