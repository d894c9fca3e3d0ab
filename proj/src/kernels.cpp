#include "treeqaoa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <omp.h>

namespace treeqaoa::kernels {

namespace {

// std::complex operator* goes through the Annex G NaN-recovery path; every
// operand here is finite, so the plain formula is used.
inline cplx mul(cplx a, cplx b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline cplx mul_conj(cplx a, cplx b) noexcept {
    return {a.real() * b.real() + a.imag() * b.imag(),
            a.imag() * b.real() - a.real() * b.imag()};
}

// i * s * z
inline cplx times_i(double s, cplx z) noexcept { return {-s * z.imag(), s * z.real()}; }

inline cplx ipow(cplx base, int k) noexcept {
    if (k == 1)
        return base;
    if (k == 2)
        return mul(base, base);
    cplx acc{1.0, 0.0};
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            acc = first ? base : mul(acc, base);
            first = false;
        }
        k >>= 1;
        if (k > 0)
            base = mul(base, base);
    }
    return acc;
}

// One row of the weight: fixed bra trajectory b, all ket trajectories a.
inline void weight_row(cplx *row, std::size_t b, const VertexWeight &w, int k) noexcept {
    const cplx bra0 = std::conj(w.amp0[b]) * w.coef0;
    const cplx bra1 = std::conj(w.amp1[b]) * w.coef1;
    const std::size_t paths = w.amp0.size();
    for (std::size_t a = 0; a < paths; ++a)
        row[a] = mul(ipow(row[a], k), mul(w.amp0[a], bra0) + mul(w.amp1[a], bra1));
}

inline std::size_t insert_zero_bit(std::size_t x, int pos) noexcept {
    const std::size_t low = x & ((std::size_t{1} << pos) - 1);
    return ((x >> pos) << (pos + 1)) | low;
}

// Four entries that differ only in the ket and bra bits of one layer. The
// ket kernel exp(+i g z z') times the bra kernel exp(-i g z z') has entries
// 1 (both slots agree or both disagree) and exp(+-2 i g) otherwise.
inline void butterfly(cplx *__restrict x, std::size_t i00, std::size_t ket, std::size_t bra,
                      double c2, double s2) noexcept {
    const cplx v00 = x[i00];
    const cplx v10 = x[i00 | ket];
    const cplx v01 = x[i00 | bra];
    const cplx v11 = x[i00 | ket | bra];

    const cplx same = v00 + v11, same_diff = v00 - v11;
    const cplx cross = v01 + v10, cross_diff = v01 - v10;
    const cplx from_cross = c2 * cross;
    const cplx from_same = c2 * same;
    const cplx turn_cross = times_i(s2, cross_diff);
    const cplx turn_same = times_i(s2, same_diff);

    x[i00] = same + from_cross + turn_cross;
    x[i00 | ket | bra] = same + from_cross - turn_cross;
    x[i00 | bra] = cross + from_same + turn_same;
    x[i00 | ket] = cross + from_same - turn_same;
}

constexpr std::size_t kSumChunk = std::size_t{1} << 12;
constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 12;

} // namespace

namespace serial {

void power_inplace(std::span<cplx> x, int k) {
    if (k == 1)
        return;
    for (auto &z : x)
        z = ipow(z, k);
}

void apply_vertex_weight(std::span<cplx> x, int p, const VertexWeight &w) {
    const std::size_t paths = std::size_t{1} << p;
    for (std::size_t b = 0; b < paths; ++b)
        weight_row(x.data() + (b << p), b, w, 1);
}

void power_and_weight(std::span<cplx> x, int p, int k, const VertexWeight &w) {
    const std::size_t paths = std::size_t{1} << p;
    for (std::size_t b = 0; b < paths; ++b)
        weight_row(x.data() + (b << p), b, w, k);
}

void exchange_layer(std::span<cplx> x, int p, int layer, double gamma) {
    const double c2 = std::cos(2.0 * gamma);
    const double s2 = std::sin(2.0 * gamma);
    const std::size_t ket = std::size_t{1} << layer;
    const std::size_t bra = std::size_t{1} << (p + layer);
    for (std::size_t hi = 0; hi < x.size(); hi += 2 * bra)
        for (std::size_t mid = hi; mid < hi + bra; mid += 2 * ket)
            for (std::size_t i = mid; i < mid + ket; ++i)
                butterfly(x.data(), i, ket, bra, c2, s2);
}

cplx bilinear_sum(std::span<const cplx> a, std::span<const cplx> b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += mul(a[i], b[i]);
    return acc;
}

bool all_finite(std::span<const cplx> x) {
    for (const auto &z : x)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

} // namespace serial

namespace parallel {

void power_inplace(std::span<cplx> x, int k) {
    if (k == 1)
        return;
    const auto n = static_cast<std::int64_t>(x.size());
    cplx *data = x.data();
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i)
        data[i] = ipow(data[i], k);
}

void power_and_weight(std::span<cplx> x, int p, int k, const VertexWeight &w) {
    const auto paths = static_cast<std::int64_t>(std::size_t{1} << p);
    const auto n = static_cast<std::int64_t>(x.size());
    cplx *data = x.data();
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
    for (std::int64_t b = 0; b < paths; ++b)
        weight_row(data + (static_cast<std::size_t>(b) << p), static_cast<std::size_t>(b), w, k);
}

void apply_vertex_weight(std::span<cplx> x, int p, const VertexWeight &w) {
    power_and_weight(x, p, 1, w);
}

void exchange_layer(std::span<cplx> x, int p, int layer, double gamma) {
    const double c2 = std::cos(2.0 * gamma);
    const double s2 = std::sin(2.0 * gamma);
    const std::size_t ket = std::size_t{1} << layer;
    const std::size_t bra = std::size_t{1} << (p + layer);
    const auto outer = static_cast<std::int64_t>(x.size() / (2 * bra));
    const auto inner = static_cast<std::int64_t>(bra / (2 * ket));
    const auto quads = static_cast<std::int64_t>(x.size() / 4);
    // Same butterflies in the same order, so the plain loop is bit-identical.
    if (quads <= kParallelThreshold || omp_get_max_threads() == 1)
        return serial::exchange_layer(x, p, layer, gamma);
    cplx *data = x.data();
#pragma omp parallel for collapse(2) schedule(static)
    for (std::int64_t h = 0; h < outer; ++h)
        for (std::int64_t m = 0; m < inner; ++m) {
            const std::size_t base = static_cast<std::size_t>(h) * 2 * bra + static_cast<std::size_t>(m) * 2 * ket;
            for (std::size_t i = base; i < base + ket; ++i)
                butterfly(data, i, ket, bra, c2, s2);
        }
}

cplx bilinear_sum(std::span<const cplx> a, std::span<const cplx> b) {
    const std::size_t n = a.size();
    const std::size_t chunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<cplx> partial(chunks);
    const auto nchunks = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) if (nchunks > 1)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kSumChunk;
        const std::size_t hi = std::min(n, lo + kSumChunk);
        cplx acc{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i)
            acc += mul(a[i], b[i]);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    cplx total{0.0, 0.0};
    for (const auto &v : partial)
        total += v;
    return total;
}

bool all_finite(std::span<const cplx> x) {
    const auto n = static_cast<std::int64_t>(x.size());
    const cplx *data = x.data();
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok) if (n > kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i)
        ok = ok && std::isfinite(data[i].real()) && std::isfinite(data[i].imag());
    return ok;
}

} // namespace parallel

} // namespace treeqaoa::kernels
