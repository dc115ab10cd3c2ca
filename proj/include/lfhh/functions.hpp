#pragma once

// Function representations the inequality verifiers quantify over:
// generalized functions [a,b] -> R^alpha, the h weight classes, symmetric
// weights, and the sampling-based generalized (h-m)-convexity checker.

#include "lfhh/fractal_algebra.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace lfhh {

/// One term c * (x - origin)^{k alpha} of a generalized monomial series.
struct MonomialTerm {
    int k = 0;          // exponent multiple, k >= 0
    Fractal coeff;      // c, stored by base
};

/// Sum of generalized monomials about a common origin. In base units the
/// series evaluates to an ordinary polynomial in (x - origin).
struct MonomialSeries {
    double origin = 0.0;
    std::vector<MonomialTerm> terms;

    int degree() const;
    /// Polynomial re-expansion of the same base function about a new origin.
    MonomialSeries re_anchored(double new_origin) const;
    MonomialSeries multiplied(const MonomialSeries& other) const;
    MonomialSeries scaled(Fractal c) const;
    /// Base function of x/m, re-expressed as a series in x about m*origin.
    MonomialSeries argument_scaled(double m) const;
};

/// x -> (f(x))^alpha via lift; f acts on bases.
struct BaseMapped {
    std::function<double(double)> f;
};

/// Piecewise-linear interpolation of tabulated bases; no extrapolation.
struct Tabulated {
    std::vector<double> grid;    // strictly increasing
    std::vector<double> values;  // bases
};

/// A map [a,b] -> R^alpha in one of three representations.
class GeneralizedFunction {
  public:
    GeneralizedFunction(MonomialSeries s) : rep_(std::move(s)) {}
    GeneralizedFunction(BaseMapped m) : rep_(std::move(m)) {}
    GeneralizedFunction(Tabulated t);

    static GeneralizedFunction monomial(double origin,
                                        std::vector<std::pair<int, double>> terms);
    static GeneralizedFunction constant(double base);

    Fractal operator()(double x) const { return eval(x); }
    Fractal eval(double x) const;
    double eval_base(double x) const { return eval(x).base; }

    bool is_monomial() const { return std::holds_alternative<MonomialSeries>(rep_); }
    const MonomialSeries& monomial_series() const;

    /// Optional declared domain; eval outside it is a domain error.
    void set_domain(double lo, double hi);
    const std::optional<std::pair<double, double>>& domain() const { return domain_; }

  private:
    std::variant<MonomialSeries, BaseMapped, Tabulated> rep_;
    std::optional<std::pair<double, double>> domain_;
};

/// Requested on representations that do not support an operation
/// (e.g. the local fractional derivative of a tabulated function).
class unsupported_representation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Local fractional derivative on generalized monomials:
/// (x-o)^{k alpha} -> Gamma(1+k a)/Gamma(1+(k-1) a) (x-o)^{(k-1) alpha}.
/// At alpha = 1 this is the classical derivative of the base polynomial.
GeneralizedFunction lf_derivative(const GeneralizedFunction& f, Alpha alpha);

/// The h weight of the convexity class: a nonnegative map (0,1) -> R^alpha.
class HFunction {
  public:
    enum class Kind { PowerAlpha, PowerSAlpha, Constant, Custom };

    static HFunction power_alpha();              // h(g) = g^alpha, base g
    static HFunction power_s_alpha(double s);    // h(g) = g^{s alpha}, base g^s
    static HFunction constant();                 // h = 1^alpha
    static HFunction custom(std::function<Fractal(double)> fn);

    Fractal operator()(double g) const;
    double base(double g) const { return (*this)(g).base; }
    Fractal at_half() const { return (*this)(0.5); }

    Kind kind() const { return kind_; }
    double s() const { return s_; }
    /// Exponent e such that h has base g^e, when h is a pure power.
    std::optional<double> power_exponent() const;

  private:
    HFunction(Kind k, double s, std::function<Fractal(double)> fn)
        : kind_(k), s_(s), fn_(std::move(fn)) {}
    Kind kind_;
    double s_ = 1.0;
    std::function<Fractal(double)> fn_;
};

/// Nonnegative weight on [nu, mu], symmetric about the midpoint.
struct WeightFunction {
    GeneralizedFunction w;
    double symmetry_tol = 1e-9;
};

/// Parameters of generalized (h-m)-convexity on a domain [0, b].
struct ConvexityParams {
    HFunction h;
    double m = 1.0;
    Alpha alpha;
    double b = 1.0;              // domain upper end
    bool allow_m_zero = false;   // checker-only opt-in

    ConvexityParams(HFunction h_, double m_, Alpha a_, double b_,
                    bool allow_m_zero_ = false);
};

struct SamplerConfig {
    int grid_n = 64;                 // deterministic grid per axis
    long random_samples = 100000;    // pseudo-random probes
    std::uint64_t seed = 0x5eedULL;
    double tolerance = 1e-9;         // violation tolerance, base units
    int refine_rounds = 3;           // local refinement before declaring
    // probe window for the endpoint pair; [0, b] when unset (the theorems
    // about an interval [nu, mu] quantify over pairs drawn from it)
    std::optional<std::pair<double, double>> window;
};

struct CheckResult {
    enum class Verdict { NoCounterexampleFound, Counterexample };
    struct Witness {
        double nu, mu, gamma;
    };
    Verdict verdict = Verdict::NoCounterexampleFound;
    std::optional<Witness> witness;
    Fractal margin;          // worst observed slack (negative at a violation)
    long samples = 0;
    long inconclusive = 0;   // probes skipped on domain errors
};

/// Falsification search for the defining inequality
///   G(g nu + m(1-g) mu) <= h(g) G(nu) + m^alpha h(1-g) G(mu)
/// over (nu, mu, g) in [0,b]^2 x [0,1]: deterministic grid, seeded random
/// probes, then local refinement around the worst margin so float noise is
/// never reported as a counterexample.
CheckResult is_hm_convex(const GeneralizedFunction& f, const ConvexityParams& p,
                         const SamplerConfig& sampler = {});

/// sup of W over [nu, mu]: refinement grid tightened by golden-section
/// ascent from the best grid point; never below any sampled value.
Fractal sup_norm(const WeightFunction& w, double nu, double mu);

/// True iff |W(x) - W(nu+mu-x)| <= tol on a symmetric grid.
bool check_symmetry(const WeightFunction& w, double nu, double mu, double tol);

} // namespace lfhh
