#include "apolaris/bargmann.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace apolaris {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_arity(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
}

// Kahan-compensated accumulator.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Flat term list with double coefficients, for fast repeated evaluation.
struct CompiledPoly {
    int arity;
    std::vector<std::pair<std::vector<int>, std::complex<double>>> terms;

    explicit CompiledPoly(const Poly& p) : arity(p.arity()) {
        terms.reserve(p.term_count());
        for (const auto& [alpha, c] : p.terms()) {
            terms.emplace_back(alpha.exponents(), c.to_complex());
        }
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& z) const {
        std::complex<double> acc = 0.0;
        for (const auto& [exps, coeff] : terms) {
            std::complex<double> t = coeff;
            for (int v = 0; v < arity; ++v) {
                for (int k = 0; k < exps[v]; ++k) t *= z[v];
            }
            acc += t;
        }
        return acc;
    }
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Runs fn(point, combined_weight) over the full tensor grid in lexicographic
// order of the per-variable (x-node, y-node) combination indices. The point
// holds z_j = x_j + i*y_j.
template <typename Fn>
void for_each_grid_point(const QuadratureGrid& grid, int arity, Fn&& fn) {
    int n = static_cast<int>(grid.nodes.size());
    int combos = n * n;
    std::vector<int> odometer(arity, 0);
    std::vector<std::complex<double>> point(arity);
    std::vector<double> axis_weight(arity);
    for (int v = 0; v < arity; ++v) {
        point[v] = {grid.nodes[0], grid.nodes[0]};
        axis_weight[v] = grid.weights[0] * grid.weights[0];
    }
    while (true) {
        double w = 1.0;
        for (int v = 0; v < arity; ++v) w *= axis_weight[v];
        fn(point, w);
        int v = arity - 1;
        while (v >= 0) {
            if (++odometer[v] < combos) {
                int ix = odometer[v] / n;
                int iy = odometer[v] % n;
                point[v] = {grid.nodes[ix], grid.nodes[iy]};
                axis_weight[v] = grid.weights[ix] * grid.weights[iy];
                break;
            }
            odometer[v] = 0;
            point[v] = {grid.nodes[0], grid.nodes[0]};
            axis_weight[v] = grid.weights[0] * grid.weights[0];
            --v;
        }
        if (v < 0) break;
    }
}

}  // namespace

QuadratureGrid gauss_hermite_grid(int n) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    QuadratureGrid grid;
    grid.exactness_degree = 2 * n - 1;
    if (n == 1) {
        grid.nodes = {0.0};
        grid.weights = {std::sqrt(kPi)};
        return grid;
    }
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = std::sqrt(k / 2.0);
        jacobi(k - 1, k) = b;
        jacobi(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigen decomposition failed");
    }
    grid.nodes.resize(n);
    grid.weights.resize(n);
    double mu0 = std::sqrt(kPi);  // integral of the weight
    for (int k = 0; k < n; ++k) {
        grid.nodes[k] = solver.eigenvalues()(k);
        double v0 = solver.eigenvectors()(0, k);
        grid.weights[k] = mu0 * v0 * v0;
    }
    // Eigenvalues come back ascending; enforce the exact +/- symmetry of the
    // rule instead of leaving it to rounding.
    for (int k = 0; k < n / 2; ++k) {
        int mirror = n - 1 - k;
        double x = 0.5 * (grid.nodes[mirror] - grid.nodes[k]);
        grid.nodes[k] = -x;
        grid.nodes[mirror] = x;
        double w = 0.5 * (grid.weights[k] + grid.weights[mirror]);
        grid.weights[k] = w;
        grid.weights[mirror] = w;
    }
    if (n % 2 == 1) grid.nodes[n / 2] = 0.0;
    return grid;
}

int certified_nodes(const Poly& p, const Poly& q) {
    int total = p.degree().value_or(0) + q.degree().value_or(0);
    return (total + 2) / 2;
}

OracleEstimate inner_product_quadrature(const Poly& p, const Poly& q, int nodes_per_axis) {
    require_same_arity(p, q);
    QuadratureGrid grid = gauss_hermite_grid(nodes_per_axis);
    CompiledPoly cp(p), cq(q);
    Kahan re, im;
    for_each_grid_point(grid, p.arity(), [&](const std::vector<std::complex<double>>& z, double w) {
        std::complex<double> f = cp.eval(z) * std::conj(cq.eval(z));
        re.add(w * f.real());
        im.add(w * f.imag());
    });
    double scale = std::pow(kPi, -p.arity());
    OracleEstimate estimate;
    estimate.value = {scale * re.sum, scale * im.sum};
    estimate.method = OracleMethod::quadrature;
    estimate.std_error = 0.0;
    estimate.nodes_or_samples = nodes_per_axis;
    estimate.certified = nodes_per_axis >= certified_nodes(p, q);
    return estimate;
}

namespace {

constexpr std::int64_t kBlockSize = 1 << 16;

struct BlockSums {
    double re = 0.0, im = 0.0, abs2 = 0.0;
};

// One block of Monte Carlo samples; fully determined by (seed, block index).
BlockSums run_block(const CompiledPoly& cp, const CompiledPoly& cq, std::uint64_t seed,
                    std::int64_t block, std::int64_t count) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (block + 1))));
    auto uniform = [&rng]() { return ((rng() >> 11) + 1) * 0x1.0p-53; };  // (0, 1]
    int arity = cp.arity;
    std::vector<std::complex<double>> z(arity);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Kahan re, im, abs2;
    for (std::int64_t s = 0; s < count; ++s) {
        for (int v = 0; v < arity; ++v) {
            double r = std::sqrt(-2.0 * std::log(uniform()));
            double theta = 2.0 * kPi * uniform();
            z[v] = {r * std::cos(theta) * inv_sqrt2, r * std::sin(theta) * inv_sqrt2};
        }
        std::complex<double> f = cp.eval(z) * std::conj(cq.eval(z));
        re.add(f.real());
        im.add(f.imag());
        abs2.add(std::norm(f));
    }
    return {re.sum, im.sum, abs2.sum};
}

}  // namespace

OracleEstimate inner_product_montecarlo(const Poly& p, const Poly& q, std::int64_t samples,
                                        std::uint64_t seed, int workers) {
    require_same_arity(p, q);
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    CompiledPoly cp(p), cq(q);

    std::int64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
    std::vector<BlockSums> partial(blocks);
    auto block_count = [&](std::int64_t b) {
        return std::min(kBlockSize, samples - b * kBlockSize);
    };
    workers = std::max(1, workers);
    if (workers == 1 || blocks == 1) {
        for (std::int64_t b = 0; b < blocks; ++b) {
            partial[b] = run_block(cp, cq, seed, b, block_count(b));
        }
    } else {
        std::vector<std::thread> pool;
        std::int64_t per_worker = blocks / workers + 1;
        for (int w = 0; w < workers; ++w) {
            std::int64_t lo = std::min<std::int64_t>(blocks, w * per_worker);
            std::int64_t hi = std::min<std::int64_t>(blocks, lo + per_worker);
            pool.emplace_back([&, lo, hi] {
                for (std::int64_t b = lo; b < hi; ++b) {
                    partial[b] = run_block(cp, cq, seed, b, block_count(b));
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    // Merge in block order; identical regardless of how blocks were scheduled.
    double sum_re = 0.0, sum_im = 0.0, sum_abs2 = 0.0;
    for (const BlockSums& b : partial) {
        sum_re += b.re;
        sum_im += b.im;
        sum_abs2 += b.abs2;
    }
    double n = static_cast<double>(samples);
    std::complex<double> mean(sum_re / n, sum_im / n);
    OracleEstimate estimate;
    estimate.value = mean;
    estimate.method = OracleMethod::monte_carlo;
    estimate.nodes_or_samples = samples;
    estimate.certified = false;
    if (samples > 1) {
        double variance = (sum_abs2 - n * std::norm(mean)) / (n - 1.0);
        estimate.std_error = std::sqrt(std::max(0.0, variance) / n);
    }
    return estimate;
}

double gaussian_l2s_norm(const Poly& p, unsigned s, int nodes_per_axis) {
    if (s == 0) throw std::invalid_argument("power must be positive");
    int degree = p.degree().value_or(0);
    int required = static_cast<int>(s) * degree + 1;
    if (nodes_per_axis < required) {
        throw std::invalid_argument("node count does not certify exactness for |P|^(2s)");
    }
    QuadratureGrid grid = gauss_hermite_grid(nodes_per_axis);
    CompiledPoly cp(p);
    Kahan acc;
    for_each_grid_point(grid, p.arity(), [&](const std::vector<std::complex<double>>& z, double w) {
        double a = std::norm(cp.eval(z));
        double f = 1.0;
        for (unsigned k = 0; k < s; ++k) f *= a;
        acc.add(w * f);
    });
    return std::pow(kPi, -p.arity()) * acc.sum;
}

}  // namespace apolaris
