// SPDX-License-Identifier: Apache-2.0
#include "certquad/rules.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace certquad {

namespace {

constexpr double weight_sum_tolerance = 1e-12;

std::string format_params(const std::string& name, std::span<const double> params)
{
    if (params.empty())
        return name;
    std::ostringstream os;
    os.precision(17);
    os << name << ':';
    for (std::size_t i = 0; i < params.size(); ++i)
        os << (i ? "," : "") << params[i];
    return os.str();
}

void require_param_count(const std::string& name, std::span<const double> params, std::size_t n)
{
    if (params.size() != n)
        throw std::invalid_argument("preset " + name + " expects " + std::to_string(n) + " parameter(s), got " +
                                    std::to_string(params.size()));
}

QuadratureRule three_point(const std::string& name, double alpha, double beta, double u1, double u2, double u3)
{
    return make_rule({u1, u2, u3}, {alpha, beta, 1.0 - alpha - beta}, name);
}

}  // namespace

QuadratureRule::QuadratureRule(std::vector<double> nodes_rel, std::vector<double> weights, std::string name)
    : nodes_(std::move(nodes_rel)), weights_(std::move(weights)), name_(std::move(name))
{
    if (nodes_.empty())
        throw std::invalid_argument("rule needs at least one node");
    if (nodes_.size() != weights_.size())
        throw std::invalid_argument("rule nodes and weights differ in length");
    for (double u : nodes_)
        if (!(u >= 0.0 && u <= 1.0))
            throw std::invalid_argument("rule nodes must lie in [0, 1]");
    if (!std::is_sorted(nodes_.begin(), nodes_.end()))
        throw std::invalid_argument("rule nodes must be nondecreasing");
    double sum = 0.0;
    for (double p : weights_) {
        if (!(p > 0.0) || !std::isfinite(p))
            throw std::invalid_argument("rule weights must be strictly positive");
        sum += p;
    }
    if (std::abs(sum - 1.0) > weight_sum_tolerance)
        throw std::invalid_argument("rule weights must sum to 1");
    within_window_ = corollary_condition_holds(*this, Interval{0.0, 1.0});
}

std::vector<double> QuadratureRule::nodes(const Interval& interval) const
{
    std::vector<double> x(nodes_.size());
    std::transform(nodes_.begin(), nodes_.end(), x.begin(), [&](double u) { return interval.at(u); });
    return x;
}

QuadratureRule make_rule(std::vector<double> nodes_rel, std::vector<double> weights, std::string name)
{
    return {std::move(nodes_rel), std::move(weights), std::move(name)};
}

CumulativeWeights cumulative(const QuadratureRule& rule, const Interval& interval)
{
    const auto w = rule.weights();
    CumulativeWeights c;
    c.P.resize(w.size());
    c.Pbar.resize(w.size());
    double running = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        running += w[i];
        c.P[i] = running;
        c.Pbar[i] = 1.0 - running;
    }
    c.xi.resize(w.size() - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const double xi = c.P[i] * interval.b() + c.Pbar[i] * interval.a();
        c.xi[i] = std::clamp(xi, interval.a(), interval.b());
    }
    return c;
}

bool corollary_condition_holds(const QuadratureRule& rule, const Interval& interval)
{
    const auto x = rule.nodes(interval);
    const auto c = cumulative(rule, interval);
    for (std::size_t i = 0; i < c.xi.size(); ++i)
        if (!(x[i] <= c.xi[i] && c.xi[i] <= x[i + 1]))
            return false;
    return true;
}

QuadratureRule preset(const std::string& name, std::span<const double> params)
{
    const std::string label = format_params(name, params);
    if (name == "ostrowski") {
        require_param_count(name, params, 1);
        return make_rule({params[0]}, {1.0}, label);
    }
    if (name == "trapezoid") {
        require_param_count(name, params, 0);
        return make_rule({0.0, 1.0}, {0.5, 0.5}, label);
    }
    if (name == "weighted_endpoints") {
        require_param_count(name, params, 1);
        return make_rule({0.0, 1.0}, {1.0 - params[0], params[0]}, label);
    }
    if (name == "quarter_points") {
        require_param_count(name, params, 1);
        return make_rule({0.25, 0.75}, {params[0], 1.0 - params[0]}, label);
    }
    if (name == "qt") {
        require_param_count(name, params, 0);
        return make_rule({0.25, 0.75}, {0.5, 0.5}, label);
    }
    if (name == "three_point") {
        require_param_count(name, params, 5);
        return three_point(label, params[0], params[1], params[2], params[3], params[4]);
    }
    if (name == "endpoints_midpoint") {
        require_param_count(name, params, 2);
        return three_point(label, params[0], params[1], 0.0, 0.5, 1.0);
    }
    if (name == "qs") {
        require_param_count(name, params, 0);
        return three_point(label, 0.25, 0.5, 0.0, 0.5, 1.0);
    }
    if (name == "simpson") {
        require_param_count(name, params, 0);
        return three_point(label, 1.0 / 6.0, 4.0 / 6.0, 0.0, 0.5, 1.0);
    }
    if (name == "quarter_three_point") {
        require_param_count(name, params, 2);
        return three_point(label, params[0], params[1], 0.25, 0.5, 0.75);
    }
    throw std::invalid_argument("unknown rule preset: " + name);
}

QuadratureRule parse_rule(const std::string& text)
{
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<double> params;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad rule parameter: " + item);
            }
            if (used != item.size())
                throw std::invalid_argument("bad rule parameter: " + item);
            params.push_back(v);
        }
    }
    return preset(name, params);
}

std::vector<std::string> preset_names()
{
    return {"ostrowski", "trapezoid", "weighted_endpoints", "quarter_points", "qt", "three_point",
            "endpoints_midpoint", "qs", "simpson", "quarter_three_point"};
}

}  // namespace certquad
