#include "treeqaoa/optimizer.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double checked(const Objective &f, std::span<const double> x, const char *where) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw NumericError(std::string("objective is not finite at ") + where);
    return v;
}

struct Pair {
    std::vector<double> s;
    std::vector<double> y;
    double rho;
};

// Two-loop recursion on the negated objective; returns an ascent direction.
std::vector<double> direction(const std::deque<Pair> &history, const std::vector<double> &grad) {
    std::vector<double> q(grad.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = -grad[i];
    std::vector<double> alpha(history.size());
    for (std::size_t k = history.size(); k-- > 0;) {
        const Pair &h = history[k];
        alpha[k] = h.rho * dot(h.s, q);
        for (std::size_t i = 0; i < q.size(); ++i)
            q[i] -= alpha[k] * h.y[i];
    }
    if (!history.empty()) {
        const Pair &h = history.back();
        const double scale = dot(h.s, h.y) / dot(h.y, h.y);
        for (double &v : q)
            v *= scale;
    }
    for (std::size_t k = 0; k < history.size(); ++k) {
        const Pair &h = history[k];
        const double b = h.rho * dot(h.y, q);
        for (std::size_t i = 0; i < q.size(); ++i)
            q[i] += h.s[i] * (alpha[k] - b);
    }
    for (double &v : q)
        v = -v;
    return q;
}

} // namespace

void OptimizerConfig::validate() const {
    if (max_iterations < 1)
        throw InvalidParameter("max_iterations must be positive");
    if (!(gradient_tolerance > 0.0))
        throw InvalidParameter("gradient_tolerance must be positive");
    if (!(finite_difference_step > 0.0))
        throw InvalidParameter("finite_difference_step must be positive");
    if (restart_count < 1)
        throw InvalidParameter("restart_count must be positive");
    if (lbfgs_history < 1)
        throw InvalidParameter("lbfgs_history must be positive");
}

std::string_view to_string(OptStatus s) noexcept {
    switch (s) {
    case OptStatus::converged:
        return "converged";
    case OptStatus::iteration_limit:
        return "iteration_limit";
    case OptStatus::stalled:
        return "stalled";
    }
    return "unknown";
}

std::vector<double> gradient(const Objective &f, std::span<const double> x, double step,
                             std::size_t *evaluations) {
    if (!(step > 0.0))
        throw InvalidParameter("finite-difference step must be positive");
    std::vector<double> probe(x.begin(), x.end());
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::string where = "component " + std::to_string(i);
        probe[i] = x[i] + step;
        const double up = checked(f, probe, (where + " (+h)").c_str());
        probe[i] = x[i] - step;
        const double down = checked(f, probe, (where + " (-h)").c_str());
        probe[i] = x[i];
        g[i] = (up - down) / (2.0 * step);
    }
    if (evaluations)
        *evaluations += 2 * x.size();
    return g;
}

MaximizeResult maximize(const Objective &f, std::vector<double> init, const OptimizerConfig &cfg) {
    cfg.validate();
    constexpr double kArmijo = 1e-4;
    constexpr int kMaxBacktracks = 40;

    MaximizeResult r;
    r.x = std::move(init);
    r.value = checked(f, r.x, "the initial point");
    r.evaluations = 1;
    std::vector<double> grad = gradient(f, r.x, cfg.finite_difference_step, &r.evaluations);
    r.gradient_norm = norm2(grad);

    std::deque<Pair> history;
    std::vector<double> trial(r.x.size());
    while (true) {
        if (r.gradient_norm <= cfg.gradient_tolerance) {
            r.status = OptStatus::converged;
            return r;
        }
        if (r.iterations >= cfg.max_iterations) {
            r.status = OptStatus::iteration_limit;
            return r;
        }
        ++r.iterations;

        std::vector<double> dir = direction(history, grad);
        double slope = dot(dir, grad);
        if (!(slope > 0.0)) {
            // Curvature information went bad; fall back to steepest ascent.
            history.clear();
            dir = grad;
            slope = dot(dir, grad);
        }
        // First step of a fresh history: cap the move at unit length.
        double step = history.empty() ? std::min(1.0, 1.0 / r.gradient_norm) : 1.0;

        bool accepted = false;
        double trial_value = 0.0;
        for (int k = 0; k < kMaxBacktracks; ++k, step *= 0.5) {
            for (std::size_t i = 0; i < trial.size(); ++i)
                trial[i] = r.x[i] + step * dir[i];
            trial_value = checked(f, trial, "a line-search point");
            ++r.evaluations;
            if (trial_value >= r.value + kArmijo * step * slope) {
                accepted = true;
                break;
            }
        }
        if (!accepted || trial_value <= r.value) {
            if (!history.empty()) {
                history.clear();
                continue;
            }
            r.status = OptStatus::stalled;
            return r;
        }

        std::vector<double> next_grad =
            gradient(f, trial, cfg.finite_difference_step, &r.evaluations);
        Pair pair{std::vector<double>(trial.size()), std::vector<double>(trial.size()), 0.0};
        for (std::size_t i = 0; i < trial.size(); ++i) {
            pair.s[i] = trial[i] - r.x[i];
            // Gradient of -f, so y = -(g_new - g_old).
            pair.y[i] = grad[i] - next_grad[i];
        }
        const double sy = dot(pair.s, pair.y);
        if (sy > 1e-16 * norm2(pair.s) * norm2(pair.y)) {
            pair.rho = 1.0 / sy;
            history.push_back(std::move(pair));
            if (static_cast<int>(history.size()) > cfg.lbfgs_history)
                history.pop_front();
        }
        r.x = trial;
        r.value = trial_value;
        grad = std::move(next_grad);
        r.gradient_norm = norm2(grad);
    }
}

} // namespace treeqaoa
