#pragma once

// Strided sweeps over 4^p-entry branch messages.
//
// Every kernel exists twice with identical signatures: `serial` is the
// plain-loop reference kept for testing, `parallel` is the OpenMP version the
// engine runs. The elementwise kernels produce bit-identical results in both
// namespaces. `bilinear_sum` differs only in summation order; the parallel
// version uses a fixed chunking so its result does not depend on the thread
// count.

#include <complex>
#include <cstddef>
#include <span>

namespace treeqaoa::kernels {

using cplx = std::complex<double>;

/// Rank-1 vertex weight w[a | b<<p] = c0 A0[a] conj(A0[b]) + c1 A1[a] conj(A1[b]).
/// A0 and A1 are indexed by p-bit ket (or bra) trajectories.
struct VertexWeight {
    std::span<const cplx> amp0;
    std::span<const cplx> amp1;
    double coef0 = 1.0;
    double coef1 = 1.0;
};

namespace serial {

/// x[i] <- x[i]^k, k >= 1, by repeated squaring.
void power_inplace(std::span<cplx> x, int k);

void apply_vertex_weight(std::span<cplx> x, int p, const VertexWeight &w);

/// x[i] <- x[i]^k * w[i] in one sweep.
void power_and_weight(std::span<cplx> x, int p, int k, const VertexWeight &w);

/// Contracts ket slot `layer` (0-based) against exp(+i gamma z z') and bra
/// slot p+layer against exp(-i gamma z z').
void exchange_layer(std::span<cplx> x, int p, int layer, double gamma);

/// sum_i a[i] * b[i], no conjugation.
cplx bilinear_sum(std::span<const cplx> a, std::span<const cplx> b);

bool all_finite(std::span<const cplx> x);

} // namespace serial

namespace parallel {

void power_inplace(std::span<cplx> x, int k);
void apply_vertex_weight(std::span<cplx> x, int p, const VertexWeight &w);
void power_and_weight(std::span<cplx> x, int p, int k, const VertexWeight &w);
void exchange_layer(std::span<cplx> x, int p, int layer, double gamma);
cplx bilinear_sum(std::span<const cplx> a, std::span<const cplx> b);
bool all_finite(std::span<const cplx> x);

} // namespace parallel

} // namespace treeqaoa::kernels
