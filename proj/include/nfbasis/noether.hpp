#pragma once

#include <cstdint>
#include <vector>

#include "nfbasis/matrix.hpp"
#include "nfbasis/normal_form.hpp"
#include "nfbasis/tolerance.hpp"

namespace nfbasis::noether {

/// Two point masses with an attractive alpha/r pair potential.
struct TwoBodyParams {
    double m1 = 0.7;
    double m2 = 0.3;
    double alpha = 0.5;

    void validate() const;
};

/// Positions and velocities of both bodies.
struct PhaseState {
    Eigen::Vector3d x1;
    Eigen::Vector3d x2;
    Eigen::Vector3d v1;
    Eigen::Vector3d v2;
};

/// Infinitesimal transformation x -> x + lambda (a + B x) of the stacked
/// 6-dimensional coordinate vector (x1, x2).
struct Generator {
    Eigen::Matrix<double, 6, 1> a = Eigen::Matrix<double, 6, 1>::Zero();
    Eigen::Matrix<double, 6, 6> B = Eigen::Matrix<double, 6, 6>::Zero();

    /// (a, vec(B)) with B flattened row-major; length 42.
    Eigen::Matrix<double, 42, 1> flatten() const;
    static Generator from_flat(const Eigen::Matrix<double, 42, 1>& flat);
};

/// One row of the symmetry-condition system at the given state: entries
/// 1..6 are dL/dx_i, entries 7..42 are dL/dx_i * x_j + dL/dv_i * v_j in
/// row-major (i, j) order. A generator (a, B) is a symmetry candidate iff
/// this row annihilates its flattening at every state.
Eigen::Matrix<double, 42, 1> dl_row(const TwoBodyParams& params, const PhaseState& state);

struct SymmetrySearchResult {
    NormalFormResult<double> normal_form; ///< 42 x kernel_dim generator basis
    Eigen::Index kernel_dim = 0;
    std::uint64_t samples = 0;
    std::vector<std::string> warnings; ///< e.g. unexpected kernel dimension
};

/// Samples states with all coordinates uniform in [0,1], stacks their rows,
/// intersects the kernels, and normal-forms the kernel basis (top-down).
SymmetrySearchResult find_symmetries(const TwoBodyParams& params, std::uint64_t nsamples,
                                     std::uint64_t seed, const ToleranceConfig& tol = {});

/// Max over states of |dl_row . flatten(gen)| / ||dl_row||; zero for exact
/// symmetries.
double verify_symmetry(const TwoBodyParams& params, const Generator& gen,
                       const std::vector<PhaseState>& states);

/// Noether charge of the generator at the state: dL/dv . (a + B x).
double conserved_value(const TwoBodyParams& params, const Generator& gen, const PhaseState& state);

/// Fixed-step RK4 trajectory of the two-body equations of motion. The
/// initial state is included; aborts when the separation drops below 1e-6.
std::vector<PhaseState> integrate_orbit(const TwoBodyParams& params, const PhaseState& state0,
                                        double dt, std::uint64_t steps);

/// Orbit of the finite transformation lambda -> exp(lambda B) x0 sampled on
/// a uniform lambda grid (matrix exponential by scaling and squaring).
struct TransformationOrbit {
    std::vector<double> lambdas;
    std::vector<Eigen::Matrix<double, 6, 1>> points;
};

TransformationOrbit transformation_orbit(const Generator& gen,
                                         const Eigen::Matrix<double, 6, 1>& x0,
                                         double lambda_max, std::size_t steps);

} // namespace nfbasis::noether
