// SPDX-License-Identifier: Apache-2.0
#include "certquad/engine.hpp"

#include "certquad/numeric.hpp"
#include "certquad/reference.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace certquad {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
// writes its own slot, so the caller's ordered fold is interleaving-free.
template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body)
{
    const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

Panel make_panel(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                 const NormRegime& regime, int level, std::size_t resolution)
{
    return Panel{interval, apply_rule(fn, rule, interval), certify(fn, rule, interval, regime, level, resolution)};
}

ErrorCertificate fold_certificates(const std::vector<Panel>& panels, const QuadratureRule& rule,
                                   const Interval& interval, const NormRegime& regime, int level)
{
    ErrorCertificate total;
    total.level = level;
    total.regime = regime;
    total.rule_name = rule.name();
    total.interval = interval;
    total.certified = true;
    for (const Panel& p : panels) {
        total.segment_contributions.push_back(p.certificate.bound);
        total.certified = total.certified && p.certificate.certified;
    }
    total.bound = ordered_sum(total.segment_contributions);
    return total;
}

Element fold_approximations(const std::vector<Panel>& panels, const Space& space)
{
    std::vector<CompensatedSum> acc(space.real_dimension());
    for (const Panel& p : panels)
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j].add(p.approximation.coords()[j]);
    std::vector<double> out(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j)
        out[j] = acc[j].value();
    return {space, std::move(out)};
}

}  // namespace

Element apply_rule(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval)
{
    const auto x = rule.nodes(interval);
    const auto w = rule.weights();
    std::vector<double> acc(fn.space.real_dimension(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Element y = fn.eval(x[i]);
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j] += w[i] * y.coords()[j];
    }
    const double len = interval.length();
    for (double& v : acc)
        v *= len;
    return {fn.space, std::move(acc)};
}

QuadratureResult integrate_composite(const VectorFunction& fn, const QuadratureRule& rule, const Partition& partition,
                                     const NormRegime& regime, int level, const EngineOptions& options)
{
    const std::size_t m = partition.segment_count();
    std::vector<std::optional<Panel>> slots(m);
    parallel_for(m, options.threads, [&](std::size_t i) {
        slots[i] = make_panel(fn, rule, partition.segment(i), regime, level, options.resolution);
    });

    QuadratureResult result{Element::zero(fn.space), {}, {}, 0, true};
    result.panels.reserve(m);
    for (auto& s : slots)
        result.panels.push_back(std::move(*s));
    result.approximation = fold_approximations(result.panels, fn.space);
    result.certificate = fold_certificates(result.panels, rule, partition.interval(), regime, level);
    result.evaluations = m * rule.size();
    return result;
}

QuadratureResult integrate_adaptive(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                                    const NormRegime& regime, double tol, std::size_t max_panels,
                                    const EngineOptions& options)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("adaptive tolerance must be positive");
    if (max_panels == 0)
        throw std::invalid_argument("adaptive panel budget must be positive");
    constexpr int level = 2;

    std::vector<Panel> store;
    store.push_back(make_panel(fn, rule, interval, regime, level, options.resolution));
    std::size_t evaluations = rule.size();

    // Worst bound first; equal bounds go left-most first.
    auto worse = [&store](std::size_t i, std::size_t j) {
        const double bi = store[i].certificate.bound;
        const double bj = store[j].certificate.bound;
        if (bi != bj)
            return bi > bj;
        const double ai = store[i].interval.a();
        const double aj = store[j].interval.a();
        if (ai != aj)
            return ai < aj;
        return i < j;
    };
    std::set<std::size_t, decltype(worse)> queue(worse);
    queue.insert(0);

    CompensatedSum running;
    running.add(store[0].certificate.bound);
    double estimate = running.value();

    auto ordered_total = [&] {
        std::vector<const Panel*> live;
        for (std::size_t idx : queue)
            live.push_back(&store[idx]);
        std::sort(live.begin(), live.end(),
                  [](const Panel* l, const Panel* r) { return l->interval.a() < r->interval.a(); });
        CompensatedSum s;
        for (const Panel* p : live)
            s.add(p->certificate.bound);
        return s.value();
    };

    while (queue.size() < max_panels) {
        if (estimate <= tol) {
            estimate = ordered_total();
            if (estimate <= tol)
                break;
        }
        const std::size_t worst = *queue.begin();
        const Interval whole = store[worst].interval;
        const double mid = whole.midpoint();
        if (!(whole.a() < mid && mid < whole.b()))
            break;  // worst panel too narrow to bisect in floating point
        queue.erase(queue.begin());
        const Interval halves[2] = {{whole.a(), mid}, {mid, whole.b()}};
        std::optional<Panel> fresh[2];
        parallel_for(2, options.threads, [&](std::size_t k) {
            fresh[k] = make_panel(fn, rule, halves[k], regime, level, options.resolution);
        });
        running.add(-store[worst].certificate.bound);
        for (auto& f : fresh) {
            running.add(f->certificate.bound);
            store.push_back(std::move(*f));
            queue.insert(store.size() - 1);
        }
        evaluations += 2 * rule.size();
        estimate = running.value();
    }

    QuadratureResult result{Element::zero(fn.space), {}, {}, evaluations, false};
    for (std::size_t idx : queue)
        result.panels.push_back(store[idx]);
    std::sort(result.panels.begin(), result.panels.end(),
              [](const Panel& l, const Panel& r) { return l.interval.a() < r.interval.a(); });
    result.approximation = fold_approximations(result.panels, fn.space);
    result.certificate = fold_certificates(result.panels, rule, interval, regime, level);
    result.converged = result.certificate.bound <= tol;
    return result;
}

Element oracle_integral(const VectorFunction& fn, const Interval& interval, std::size_t resolution)
{
    return simpson_integral([&](double t) { return fn.eval(t); }, fn.space, interval, resolution);
}

}  // namespace certquad
