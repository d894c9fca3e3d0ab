#include "treeqaoa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "treeqaoa/errors.hpp"
#include "treeqaoa/kernels.hpp"

namespace treeqaoa {

namespace {

constexpr double kImagTolerance = 1e-10;

// Ket amplitude of one qubit line collapsed onto its p cost-layer slots:
// amp_s[a] = <s| M_p phase_p ... M_1 phase_1 |+>, restricted to the path a.
struct LineAmplitudes {
    std::vector<cplx> amp0;
    std::vector<cplx> amp1;
};

LineAmplitudes line_amplitudes(const ParamSet &params) {
    const int p = params.p;
    const std::size_t paths = std::size_t{1} << p;
    LineAmplitudes out{std::vector<cplx>(paths), std::vector<cplx>(paths)};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    auto mixer = [&](int layer, unsigned to, unsigned from) -> cplx {
        const double b = params.beta[static_cast<std::size_t>(layer)];
        return to == from ? cplx{std::cos(b), 0.0} : cplx{0.0, -std::sin(b)};
    };
    auto field = [&](int layer, unsigned bit) -> cplx {
        if (!params.gamma_prime)
            return {1.0, 0.0};
        const double g = (*params.gamma_prime)[static_cast<std::size_t>(layer)];
        const double z = bit ? -1.0 : 1.0;
        return {std::cos(g * z), std::sin(g * z)};
    };

    for (std::size_t a = 0; a < paths; ++a) {
        cplx amp{inv_sqrt2, 0.0};
        for (int t = 0; t < p; ++t) {
            const unsigned bit = (a >> t) & 1u;
            amp *= field(t, bit);
            if (t + 1 < p)
                amp *= mixer(t, (a >> (t + 1)) & 1u, bit);
        }
        const unsigned last = (a >> (p - 1)) & 1u;
        out.amp0[a] = amp * mixer(p - 1, 0, last);
        out.amp1[a] = amp * mixer(p - 1, 1, last);
    }
    return out;
}

struct KernelSet {
    void (*power)(std::span<cplx>, int);
    void (*weight)(std::span<cplx>, int, const kernels::VertexWeight &);
    void (*power_weight)(std::span<cplx>, int, int, const kernels::VertexWeight &);
    void (*exchange)(std::span<cplx>, int, int, double);
    cplx (*sum)(std::span<const cplx>, std::span<const cplx>);
    bool (*finite)(std::span<const cplx>);
};

KernelSet kernels_for(Backend backend) {
    if (backend == Backend::serial)
        return {kernels::serial::power_inplace, kernels::serial::apply_vertex_weight,
                kernels::serial::power_and_weight, kernels::serial::exchange_layer, kernels::serial::bilinear_sum,
                kernels::serial::all_finite};
    return {kernels::parallel::power_inplace, kernels::parallel::apply_vertex_weight,
            kernels::parallel::power_and_weight, kernels::parallel::exchange_layer, kernels::parallel::bilinear_sum,
            kernels::parallel::all_finite};
}

void exchange_all(const KernelSet &k, std::span<cplx> x, const ParamSet &params) {
    for (int t = 0; t < params.p; ++t) {
        k.exchange(x, params.p, t, params.gamma[static_cast<std::size_t>(t)]);
    }
}

BranchMessage step_with(const KernelSet &k, BranchMessage msg, const ParamSet &params,
                        const LineAmplitudes &line) {
    k.power_weight(msg.entries(), params.p, params.d - 1, {line.amp0, line.amp1, 1.0, 1.0});
    exchange_all(k, msg.entries(), params);
    if (!k.finite(msg.entries()))
        throw NumericError("non-finite entry in branch message");
    return msg;
}

double checked_real(cplx z, const char *what, double &max_imag) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw NumericError(std::string("non-finite ") + what);
    if (std::abs(z.imag()) >= kImagTolerance) {
        std::ostringstream os;
        os << what << " has imaginary part " << z.imag();
        throw NumericError(os.str());
    }
    max_imag = std::max(max_imag, std::abs(z.imag()));
    return z.real();
}

} // namespace

std::size_t working_set_bytes(int p) noexcept {
    return 3 * message_entries(p) * sizeof(cplx);
}

void check_budget(int p, const EngineOptions &opts) {
    if (p < 1)
        throw InvalidParameter("depth p must be >= 1, got " + std::to_string(p));
    if (p <= opts.max_depth && p <= 30)
        return;
    std::ostringstream os;
    os << "depth p=" << p << " needs 4^" << p;
    if (p <= 30)
        os << " = " << message_entries(p) << " entries per message ("
           << static_cast<double>(message_entries(p) * sizeof(cplx)) / 1e9
           << " GB), working set " << static_cast<double>(working_set_bytes(p)) / 1e9
           << " GB";
    os << "; memory budget allows p <= " << opts.max_depth;
    throw ResourceError(os.str());
}

BranchMessage unit_message(int p) { return BranchMessage(p, cplx{1.0, 0.0}); }

BranchMessage entrywise_power(const BranchMessage &msg, int k, Backend backend) {
    if (k < 1)
        throw InvalidParameter("entrywise power needs k >= 1, got " + std::to_string(k));
    BranchMessage out = msg;
    kernels_for(backend).power(out.entries(), k);
    return out;
}

BranchMessage level_step(BranchMessage child, const ParamSet &params, Backend backend) {
    params.validate();
    if (child.depth() != params.p)
        throw InvalidParameter("message depth " + std::to_string(child.depth()) +
                               " does not match params.p = " + std::to_string(params.p));
    return step_with(kernels_for(backend), std::move(child), params,
                     line_amplitudes(params));
}

EdgeExpectation edge_expectation(const ParamSet &params, const EngineOptions &opts) {
    params.validate();
    check_budget(params.p, opts);
    const KernelSet k = kernels_for(opts.backend);
    const LineAmplitudes line = line_amplitudes(params);
    const int p = params.p;

    BranchMessage branch = unit_message(p);
    for (int level = 0; level < p; ++level)
        branch = step_with(k, std::move(branch), params, line);

    // Both roots see d-1 identical branches.
    k.power(branch.entries(), params.d - 1);

    BranchMessage z_side = branch;
    k.weight(z_side.entries(), p, {line.amp0, line.amp1, 1.0, -1.0});
    BranchMessage across = z_side;
    exchange_all(k, across.entries(), params);

    EdgeExpectation ev;
    ev.zz = checked_real(k.sum(z_side.entries(), across.entries()), "<ZZ>", ev.max_imag);

    BranchMessage &id_side = branch;
    k.weight(id_side.entries(), p, {line.amp0, line.amp1, 1.0, 1.0});
    ev.z_single = checked_real(k.sum(id_side.entries(), across.entries()), "<Z>", ev.max_imag);

    across = std::move(z_side);
    std::copy(id_side.entries().begin(), id_side.entries().end(), across.entries().begin());
    exchange_all(k, across.entries(), params);
    ev.norm = checked_real(k.sum(id_side.entries(), across.entries()), "<I>", ev.max_imag);

    ev.c_edge = 0.5 * (1.0 - ev.zz);
    return ev;
}

double mis_edge_objective(const ParamSet &params, const EngineOptions &opts) {
    if (params.d != 3)
        throw InvalidParameter("the MIS objective is defined for d = 3, got d = " +
                               std::to_string(params.d));
    if (!params.gamma_prime)
        throw InvalidParameter("the MIS objective needs gamma_prime (zeros allowed)");
    const EdgeExpectation ev = edge_expectation(params, opts);
    return mis_value_from(ev.zz, ev.z_single);
}

} // namespace treeqaoa
