#include "nfbasis/noether.hpp"

#include "nfbasis/kernels.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

namespace nfbasis::noether {

namespace {

constexpr double kMinSampleSeparation = 0.05; // keeps sampled rows well scaled
constexpr double kCloseApproach = 1e-6;

Eigen::Matrix<double, 6, 1> stack3(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    Eigen::Matrix<double, 6, 1> out;
    out << a, b;
    return out;
}

// dL/dx and dL/dv of L = m1 v1^2/2 + m2 v2^2/2 + alpha/|x1-x2|.
void lagrangian_gradients(const TwoBodyParams& p, const PhaseState& s,
                          Eigen::Matrix<double, 6, 1>& dL_dx,
                          Eigen::Matrix<double, 6, 1>& dL_dv) {
    const Eigen::Vector3d r = s.x1 - s.x2;
    const double dist = r.norm();
    if (dist < kCloseApproach)
        throw SingularConfigurationError("two-body configuration too close to the 1/r singularity");
    const Eigen::Vector3d grad = -p.alpha * r / (dist * dist * dist);
    dL_dx = stack3(grad, -grad);
    dL_dv = stack3(p.m1 * s.v1, p.m2 * s.v2);
}

PhaseState sample_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto vec3 = [&] { return Eigen::Vector3d(uni(rng), uni(rng), uni(rng)); };
    PhaseState s;
    s.x1 = vec3();
    s.x2 = vec3();
    s.v1 = vec3();
    s.v2 = vec3();
    while ((s.x1 - s.x2).norm() < kMinSampleSeparation)
        s.x2 = vec3();
    return s;
}

// Acceleration of the stacked coordinate vector.
void accelerations(const TwoBodyParams& p, const PhaseState& s, Eigen::Vector3d& a1,
                   Eigen::Vector3d& a2) {
    const Eigen::Vector3d r = s.x1 - s.x2;
    const double dist = r.norm();
    if (dist < kCloseApproach)
        throw SingularConfigurationError(
            "integrate_orbit: close approach (separation < 1e-6), aborting");
    const Eigen::Vector3d f = -p.alpha * r / (dist * dist * dist); // force on body 1
    a1 = f / p.m1;
    a2 = -f / p.m2;
}

struct Derivative {
    Eigen::Vector3d dx1, dx2, dv1, dv2;
};

Derivative derivative(const TwoBodyParams& p, const PhaseState& s) {
    Derivative d;
    d.dx1 = s.v1;
    d.dx2 = s.v2;
    accelerations(p, s, d.dv1, d.dv2);
    return d;
}

PhaseState advance(const PhaseState& s, const Derivative& d, double h) {
    PhaseState out;
    out.x1 = s.x1 + h * d.dx1;
    out.x2 = s.x2 + h * d.dx2;
    out.v1 = s.v1 + h * d.dv1;
    out.v2 = s.v2 + h * d.dv2;
    return out;
}

} // namespace

void TwoBodyParams::validate() const {
    if (!(m1 > 0.0) || !(m2 > 0.0))
        throw InvalidInputError("TwoBodyParams: masses must be positive");
    if (!std::isfinite(alpha))
        throw InvalidInputError("TwoBodyParams: alpha must be finite");
}

Eigen::Matrix<double, 42, 1> Generator::flatten() const {
    Eigen::Matrix<double, 42, 1> out;
    out.head<6>() = a;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            out(6 + 6 * i + j) = B(i, j);
    return out;
}

Generator Generator::from_flat(const Eigen::Matrix<double, 42, 1>& flat) {
    Generator g;
    g.a = flat.head<6>();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            g.B(i, j) = flat(6 + 6 * i + j);
    return g;
}

Eigen::Matrix<double, 42, 1> dl_row(const TwoBodyParams& params, const PhaseState& state) {
    params.validate();
    Eigen::Matrix<double, 6, 1> dL_dx, dL_dv;
    lagrangian_gradients(params, state, dL_dx, dL_dv);
    const Eigen::Matrix<double, 6, 1> x = stack3(state.x1, state.x2);
    const Eigen::Matrix<double, 6, 1> v = stack3(state.v1, state.v2);

    Eigen::Matrix<double, 42, 1> row;
    row.head<6>() = dL_dx;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            row(6 + 6 * i + j) = dL_dx(i) * x(j) + dL_dv(i) * v(j);
    return row;
}

SymmetrySearchResult find_symmetries(const TwoBodyParams& params, std::uint64_t nsamples,
                                     std::uint64_t seed, const ToleranceConfig& tol) {
    params.validate();
    tol.validate();
    if (nsamples < 1)
        throw InvalidInputError("find_symmetries: need at least one sample");

    std::mt19937_64 rng(seed);
    RealMatrix stacked(static_cast<Eigen::Index>(nsamples), 42);
    for (std::uint64_t i = 0; i < nsamples; ++i)
        stacked.row(static_cast<Eigen::Index>(i)) = dl_row(params, sample_state(rng)).transpose();

    const RealMatrix kernel = common_kernel<double>({stacked}, tol);

    SymmetrySearchResult result;
    result.kernel_dim = kernel.cols();
    result.samples = nsamples;
    if (params.m1 != params.m2 && kernel.cols() != 9)
        result.warnings.push_back("expected a 9-dimensional symmetry space for unequal masses, found " +
                                  std::to_string(kernel.cols()) +
                                  " (try more samples or a different seed)");
    if (kernel.cols() == 0)
        throw InternalError("find_symmetries: no symmetry generators found; the two-body "
                            "Lagrangian always admits translations");
    result.normal_form = normal_form_topdown(kernel, tol);
    return result;
}

double verify_symmetry(const TwoBodyParams& params, const Generator& gen,
                       const std::vector<PhaseState>& states) {
    params.validate();
    const Eigen::Matrix<double, 42, 1> flat = gen.flatten();
    double worst = 0.0;
    for (const auto& s : states) {
        const Eigen::Matrix<double, 42, 1> row = dl_row(params, s);
        worst = std::max(worst, std::abs(row.dot(flat)) / row.norm());
    }
    return worst;
}

double conserved_value(const TwoBodyParams& params, const Generator& gen, const PhaseState& state) {
    params.validate();
    const Eigen::Matrix<double, 6, 1> momentum =
        stack3(params.m1 * state.v1, params.m2 * state.v2);
    const Eigen::Matrix<double, 6, 1> x = stack3(state.x1, state.x2);
    return momentum.dot(gen.a + gen.B * x);
}

std::vector<PhaseState> integrate_orbit(const TwoBodyParams& params, const PhaseState& state0,
                                        double dt, std::uint64_t steps) {
    params.validate();
    if (!(dt > 0.0))
        throw InvalidInputError("integrate_orbit: dt must be positive");
    std::vector<PhaseState> trajectory;
    trajectory.reserve(static_cast<std::size_t>(steps) + 1);
    trajectory.push_back(state0);
    PhaseState s = state0;
    for (std::uint64_t step = 0; step < steps; ++step) {
        const Derivative k1 = derivative(params, s);
        const Derivative k2 = derivative(params, advance(s, k1, dt / 2));
        const Derivative k3 = derivative(params, advance(s, k2, dt / 2));
        const Derivative k4 = derivative(params, advance(s, k3, dt));
        PhaseState next;
        next.x1 = s.x1 + dt / 6.0 * (k1.dx1 + 2 * k2.dx1 + 2 * k3.dx1 + k4.dx1);
        next.x2 = s.x2 + dt / 6.0 * (k1.dx2 + 2 * k2.dx2 + 2 * k3.dx2 + k4.dx2);
        next.v1 = s.v1 + dt / 6.0 * (k1.dv1 + 2 * k2.dv1 + 2 * k3.dv1 + k4.dv1);
        next.v2 = s.v2 + dt / 6.0 * (k1.dv2 + 2 * k2.dv2 + 2 * k3.dv2 + k4.dv2);
        s = next;
        trajectory.push_back(s);
    }
    return trajectory;
}

TransformationOrbit transformation_orbit(const Generator& gen,
                                         const Eigen::Matrix<double, 6, 1>& x0,
                                         double lambda_max, std::size_t steps) {
    if (!(lambda_max > 0.0) || steps < 2)
        throw InvalidInputError("transformation_orbit: need lambda_max > 0 and steps >= 2");
    TransformationOrbit orbit;
    orbit.lambdas.reserve(steps);
    orbit.points.reserve(steps);
    // Flow of dx/dlambda = a + B x via the exponential of the augmented
    // (B, a; 0, 0) matrix, exact also for pure translations.
    Eigen::Matrix<double, 7, 7> aug = Eigen::Matrix<double, 7, 7>::Zero();
    aug.topLeftCorner<6, 6>() = gen.B;
    aug.topRightCorner<6, 1>() = gen.a;
    Eigen::Matrix<double, 7, 1> start;
    start << x0, 1.0;
    for (std::size_t i = 0; i < steps; ++i) {
        const double lambda = lambda_max * static_cast<double>(i) / static_cast<double>(steps - 1);
        const Eigen::Matrix<double, 7, 7> T = (lambda * aug).exp();
        orbit.lambdas.push_back(lambda);
        orbit.points.push_back((T * start).head<6>());
    }
    return orbit;
}

} // namespace nfbasis::noether
