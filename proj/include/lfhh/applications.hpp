#pragma once

// Applications: generalized moments of random variables with the associated
// deviation bound, and certified weighted trapezoidal quadrature with an
// a-priori per-cell error bound plus an adaptive bisection driver.

#include "lfhh/fractal_algebra.hpp"
#include "lfhh/functions.hpp"
#include "lfhh/inequalities.hpp"
#include "lfhh/lfi.hpp"

#include <optional>
#include <vector>

namespace lfhh {

/// Generalized probability density p on [nu, mu] with declared bounds
/// 0^a <= Psi <= p <= Omega <= 1^a, checked on a verification grid.
struct ProbabilityDensity {
    GeneralizedFunction p;
    double nu = 0.0, mu = 1.0;
    Fractal psi{0.0};
    Fractal omega{1.0};
    bool symmetric = false;

    void validate(int grid = 257, double tol = 1e-9) const;
};

/// Strictly increasing partition of [nu, mu] with per-cell tags.
struct Partition {
    std::vector<double> points;  // x_0 < x_1 < ... < x_n
    std::vector<double> tags;    // tag_j in [x_j, x_{j+1}]; optional

    static Partition uniform(double nu, double mu, int cells);
    void validate() const;
    int cells() const { return static_cast<int>(points.size()) - 1; }
};

struct QuadratureCell {
    double a = 0.0, b = 0.0, tag = 0.0;
    double bound = 0.0;  // certified contribution, base units
};

struct QuadratureResult {
    Fractal value;            // T(G, W, tags)
    Fractal certified_bound;  // a-priori bound on |R_T|
    Fractal reference;        // same partition, doubled quadrature order
    Fractal actual_error;     // |value - reference|
    std::vector<QuadratureCell> cells;
    bool converged = true;
    double reference_budget = 0.0;  // estimated numerical error of reference
};

/// Generalized expectation: prefactored integral of g^alpha p(g) over
/// [nu, mu] (symmetrized anchor).
Fractal expectation_alpha(const ProbabilityDensity& p, Alpha alpha,
                          const IntegralScheme& scheme = {});

/// Generalized r-moment, r >= 0: prefactored integral of g^{r alpha} p(g).
/// r = 1 is expectation_alpha via the same code path (bit-for-bit).
Fractal r_moment(const ProbabilityDensity& p, double r, Alpha alpha,
                 const IntegralScheme& scheme = {});

/// Deviation bound for the r-moment of a symmetric density (r >= 1,
/// 0 < nu < mu): |(nu^{r a}+mu^{r a})/2^a * I[p] - E_r| against the
/// closed Gamma-ratio form.
InequalityReport verify_moment_bound(const ProbabilityDensity& p, double r,
                                     double m, Alpha alpha,
                                     const IntegralScheme& scheme = {});

/// Weighted trapezoid T = (1/Gamma(1+a)) sum_j (G(x_j)+G(x_{j+1}))/2^a *
/// int_{x_j}^{x_{j+1}} W, with the certified per-cell bound
///   ((x_{j+1}-x_j)^2/4)^a (||W||_cell/Gamma(1+a)) {
///     Gr(2)(|G^(a)(x_j)|+|G^(a)(x_{j+1})|)
///     + 2^a m^a (Gr(1)-Gr(2)) |G^(a)((x_j+x_{j+1})/(2m))| }.
/// The reference is the same per-cell integral at doubled order; for
/// alpha < 1 the cellwise integral is the partition-consistent meaning of
/// the total (the calculus is not interval-additive below order one).
QuadratureResult weighted_trapezoid(const GeneralizedFunction& G,
                                    const WeightFunction& W,
                                    const Partition& part, Alpha alpha,
                                    double m = 1.0,
                                    const IntegralScheme& scheme = {});

/// Bisects the cell with the largest certified contribution (lowest index
/// on ties) until the summed bound meets `target` or `max_cells` is
/// reached; on failure returns the best partition with converged = false.
QuadratureResult adaptive_quadrature(const GeneralizedFunction& G,
                                     const WeightFunction& W, Alpha alpha,
                                     double m, double nu, double mu,
                                     double target, int max_cells,
                                     const IntegralScheme& scheme = {});

} // namespace lfhh
