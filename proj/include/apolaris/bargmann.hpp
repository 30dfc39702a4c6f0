#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "apolaris/poly.hpp"

namespace apolaris {

/// One-dimensional Gauss-Hermite rule for the weight e^{-x^2} on the real
/// line. Nodes are symmetric about 0; weights are positive and sum to
/// sqrt(pi). A rule with n nodes integrates polynomials of degree up to
/// 2n - 1 without error.
struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;
};

/// Golub-Welsch construction: eigenvalues of the symmetric tridiagonal
/// Jacobi matrix give the nodes, the squared first eigenvector components
/// scaled by sqrt(pi) the weights.
QuadratureGrid gauss_hermite_grid(int n);

enum class OracleMethod { quadrature, monte_carlo };

struct OracleEstimate {
    std::complex<double> value;
    OracleMethod method = OracleMethod::quadrature;
    double std_error = 0.0;  // monte-carlo only; 0 for quadrature
    std::int64_t nodes_or_samples = 0;
    bool certified = false;
};

/// Smallest per-axis node count that integrates P(x+iy)*conj(Q(x+iy))
/// exactly: ceil((deg P + deg Q + 1) / 2).
int certified_nodes(const Poly& p, const Poly& q);

/// The apolar inner product as a Gaussian integral over R^{2d}:
/// pi^{-d} * integral of P(x+iy)*conj(Q(x+iy)) e^{-|x|^2-|y|^2} dx dy,
/// discretized by a tensor Gauss-Hermite rule with `nodes_per_axis` nodes on
/// each of the 2d real axes. Accumulation order is fixed (lexicographic over
/// the tensor grid) with compensated summation. The estimate is certified
/// when nodes_per_axis meets the exactness rule; fewer nodes are allowed and
/// flagged.
OracleEstimate inner_product_quadrature(const Poly& p, const Poly& q, int nodes_per_axis);

/// Same integral by Monte Carlo: samples are drawn from the 2d-dimensional
/// Gaussian with variance 1/2 per real coordinate (which absorbs both the
/// weight and the pi^{-d} prefactor), so z = (xi1 + i*xi2)/sqrt(2)
/// coordinatewise. The generator is mt19937_64; each 53-bit uniform pair
/// feeds a Box-Muller transform. Samples are organized in blocks of 2^16
/// with per-block seeds derived by splitmix64(seed ^ golden*(block+1)) and
/// merged in block order, so results are bit-identical for a fixed seed and
/// sample count, independent of the worker count.
OracleEstimate inner_product_montecarlo(const Poly& p, const Poly& q, std::int64_t samples,
                                        std::uint64_t seed, int workers = 1);

/// ||P||^{2s} with respect to the normalized Gaussian measure, i.e. the
/// quadrature value of |P(x+iy)|^{2s}. Requires nodes_per_axis to certify
/// exactness for the degree-2s*deg(P) integrand. Equals ||P^s||_a^2 up to
/// floating rounding.
double gaussian_l2s_norm(const Poly& p, unsigned s, int nodes_per_axis);

}  // namespace apolaris
