#include "lfhh/lfi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace lfhh {

std::string to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::ExactMonomial: return "exact_monomial";
        case SchemeKind::KernelLeft: return "kernel_left";
        case SchemeKind::KernelRight: return "kernel_right";
        case SchemeKind::Classical: return "classical";
    }
    return "?";
}

std::string to_string(Anchor a) {
    switch (a) {
        case Anchor::Lower: return "lower";
        case Anchor::Upper: return "upper";
        case Anchor::Symmetrized: return "symmetrized";
    }
    return "?";
}

namespace {

// Implicit-QL eigenvalue iteration for a symmetric tridiagonal matrix,
// tracking the first component of each eigenvector (Golub-Welsch form).
// d: diagonal, e: subdiagonal (length n, last entry unused), z: in/out.
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    const double prec = std::numeric_limits<double>::epsilon();
    e[n - 1] = 0.0;
    for (int l = 1; l <= n; ++l) {
        int j = 0;
        for (;;) {
            int m;
            for (m = l; m <= n; ++m) {
                if (m == n) break;
                if (std::fabs(e[m - 1]) <=
                    prec * (std::fabs(d[m - 1]) + std::fabs(d[m])))
                    break;
            }
            if (m == l) break;
            if (++j > 40) throw std::runtime_error("imtqlx: QL iteration stalled");
            double p = d[l - 1];
            double g = (d[l] - p) / (2.0 * e[l - 1]);
            double r = std::hypot(g, 1.0);
            g = d[m - 1] - p + e[l - 1] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0;
            p = 0.0;
            for (int ii = 1; ii <= m - l; ++ii) {
                const int i = m - ii;
                double f = s * e[i - 1];
                const double b = c * e[i - 1];
                r = std::hypot(f, g);
                e[i] = r;
                s = f / r;
                c = g / r;
                g = d[i] - p;
                r = (d[i - 1] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i] = g + p;
                g = c * r - b;
                f = z[i];
                z[i] = s * z[i - 1] + c * f;
                z[i - 1] = c * z[i - 1] - s * f;
            }
            d[l - 1] -= p;
            e[l - 1] = g;
            e[m - 1] = 0.0;
        }
    }
    // sort ascending, permuting z alongside
    for (int ii = 1; ii < n; ++ii) {
        int i = ii - 1, k = i;
        double p = d[i];
        for (int jj = ii; jj < n; ++jj)
            if (d[jj] < p) { k = jj; p = d[jj]; }
        if (k != i) {
            std::swap(d[k], d[i]);
            std::swap(z[k], z[i]);
        }
    }
}

// Rule on [0,1] for weight (1-t)^(alpha-1): Jacobi parameters (a, b) =
// (alpha-1, 0) on [-1,1], Golub-Welsch, then the affine shift.
QuadratureRule build_right_rule(int n, double alpha) {
    const double a = alpha - 1.0;  // in (-1, 0]
    std::vector<double> diag(n), sub(n), z(n, 0.0);
    diag[0] = -a / (a + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + a;
        diag[k] = -(a * a) / (t * (t + 2.0));
    }
    if (n > 1) {
        sub[0] = std::sqrt(4.0 * (a + 1.0) / ((a + 2.0) * (a + 2.0) * (a + 3.0)));
        for (int k = 2; k < n; ++k) {
            const double t = 2.0 * k + a;
            sub[k - 1] = std::sqrt(4.0 * k * k * (k + a) * (k + a) /
                                   (t * t * (t + 1.0) * (t - 1.0)));
        }
    }
    z[0] = 1.0;
    imtqlx(diag, sub, z);
    const double mu0 = std::pow(2.0, alpha) / alpha;  // total mass on [-1,1]
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (1.0 + diag[i]);
        rule.weights[i] = mu0 * z[i] * z[i] * std::pow(2.0, -alpha);
    }
    return rule;
}

struct RuleKey {
    int n;
    double alpha;
    RuleSide side;
    bool operator<(const RuleKey& o) const {
        if (n != o.n) return n < o.n;
        if (alpha != o.alpha) return alpha < o.alpha;
        return side < o.side;
    }
};

std::shared_mutex rule_mutex;
std::map<RuleKey, std::shared_ptr<const QuadratureRule>> rule_cache;

std::shared_ptr<const QuadratureRule> cached_rule(int n, double alpha, RuleSide side) {
    const RuleKey key{n, alpha, side};
    {
        std::shared_lock lock(rule_mutex);
        auto it = rule_cache.find(key);
        if (it != rule_cache.end()) return it->second;
    }
    QuadratureRule r = build_right_rule(n, alpha);
    if (side == RuleSide::Left) {
        std::reverse(r.nodes.begin(), r.nodes.end());
        std::reverse(r.weights.begin(), r.weights.end());
        for (double& t : r.nodes) t = 1.0 - t;
    }
    auto sp = std::make_shared<const QuadratureRule>(std::move(r));
    std::unique_lock lock(rule_mutex);
    rule_cache.emplace(key, sp);
    return sp;
}

double eval_anchored(const std::function<double(double)>& f, double a, double b,
                     double alpha, bool lower_anchor, int n) {
    const auto rule = cached_rule(n, alpha, RuleSide::Right);
    const double len = b - a;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double sa = std::pow(rule->nodes[i], alpha);
        const double t = lower_anchor ? a + len * sa : b - len * sa;
        acc += rule->weights[i] * f(t);
    }
    return len / gamma_fn(alpha) * acc;
}

IntegralResult refine_anchored(const std::function<double(double)>& f, double a,
                               double b, double alpha, bool lower_anchor,
                               const IntegralScheme& sc) {
    IntegralResult res;
    res.used = lower_anchor ? SchemeKind::KernelRight : SchemeKind::KernelLeft;
    int n = std::max(2, sc.order);
    double prev = eval_anchored(f, a, b, alpha, lower_anchor, n);
    res.nodes = n;
    double value = prev, err = std::numeric_limits<double>::infinity();
    for (int depth = 1; depth <= sc.max_depth; ++depth) {
        n *= 2;
        value = eval_anchored(f, a, b, alpha, lower_anchor, n);
        res.nodes += n;
        err = std::fabs(value - prev);
        prev = value;
        if (err <= sc.tol * (1.0 + std::fabs(value))) {
            res.value = Fractal{value};
            res.est_error = err;
            res.converged = true;
            return res;
        }
    }
    res.value = Fractal{value};
    res.est_error = err;
    res.converged = false;
    return res;
}

} // namespace

QuadratureRule gauss_jacobi_rule(int n, Alpha alpha, RuleSide side) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi_rule requires n >= 1");
    return *cached_rule(n, alpha.value(), side);
}

IntegralResult integrate_base(const std::function<double(double)>& f_base,
                              double a, double b, Alpha alpha, Anchor anchor,
                              const IntegralScheme& scheme) {
    if (a == b) return IntegralResult{Fractal{0.0}, scheme.kind, 0.0, 0, true};
    if (a > b) {
        IntegralResult r = integrate_base(f_base, b, a, alpha, anchor, scheme);
        r.value = -r.value;
        return r;
    }
    const double al = alpha.value();
    switch (anchor) {
        case Anchor::Lower: return refine_anchored(f_base, a, b, al, true, scheme);
        case Anchor::Upper: return refine_anchored(f_base, a, b, al, false, scheme);
        case Anchor::Symmetrized: {
            IntegralResult lo = refine_anchored(f_base, a, b, al, true, scheme);
            IntegralResult hi = refine_anchored(f_base, a, b, al, false, scheme);
            IntegralResult r;
            r.value = 0.5 * (lo.value + hi.value);
            r.used = scheme.kind;
            r.est_error = 0.5 * (lo.est_error + hi.est_error);
            r.nodes = lo.nodes + hi.nodes;
            r.converged = lo.converged && hi.converged;
            return r;
        }
    }
    return {};
}

IntegralResult classical_integrate(const std::function<double(double)>& f_base,
                                   double a, double b, double tol, int max_depth) {
    IntegralResult res;
    res.used = SchemeKind::Classical;
    if (a == b) return res;
    if (a > b) {
        res = classical_integrate(f_base, b, a, tol, max_depth);
        res.value = -res.value;
        return res;
    }
    const auto rule = cached_rule(16, 1.0, RuleSide::Right);  // Gauss-Legendre
    auto panels_value = [&](int panels) {
        double acc = 0.0;
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            const double x0 = a + p * h;
            for (size_t i = 0; i < rule->nodes.size(); ++i)
                acc += rule->weights[i] * f_base(x0 + h * rule->nodes[i]);
        }
        return acc * h;
    };
    int panels = 1;
    double prev = panels_value(panels);
    res.nodes = 16;
    double value = prev, err = std::numeric_limits<double>::infinity();
    for (int depth = 1; depth <= max_depth; ++depth) {
        panels *= 2;
        value = panels_value(panels);
        res.nodes += 16L * panels;
        err = std::fabs(value - prev);
        prev = value;
        if (err <= tol * (1.0 + std::fabs(value))) {
            res.value = Fractal{value};
            res.est_error = err;
            res.converged = true;
            return res;
        }
    }
    res.value = Fractal{value};
    res.est_error = err;
    res.converged = false;
    return res;
}

namespace {

Fractal exact_monomial_value(const MonomialSeries& s, double a, double b,
                             Alpha alpha, bool lower_anchor) {
    const double len = b - a;
    double acc = 0.0;
    for (const auto& t : s.terms) {
        const double sign = (lower_anchor || t.k % 2 == 0) ? 1.0 : -1.0;
        acc += sign * t.coeff.base * gamma_ratio(t.k, alpha) *
               std::pow(len, double(t.k + 1));
    }
    return Fractal{acc};
}

} // namespace

IntegralResult lfi(const GeneralizedFunction& f, double a, double b, Alpha alpha,
                   const IntegralScheme& scheme) {
    if (a == b) return IntegralResult{Fractal{0.0}, scheme.kind, 0.0, 0, true};
    if (a > b) {
        IntegralResult r = lfi(f, b, a, alpha, scheme);
        r.value = -r.value;
        return r;
    }
    switch (scheme.kind) {
        case SchemeKind::ExactMonomial: {
            if (!f.is_monomial())
                throw configuration_error(
                    "ExactMonomial scheme requires a monomial-series integrand");
            const auto& s = f.monomial_series();
            bool lower;
            if (s.origin == a) lower = true;
            else if (s.origin == b) lower = false;
            else
                throw configuration_error(
                    "ExactMonomial scheme requires the series origin to match an "
                    "integration endpoint");
            return IntegralResult{exact_monomial_value(s, a, b, alpha, lower),
                                  SchemeKind::ExactMonomial, 0.0, 0, true};
        }
        case SchemeKind::KernelRight:
        case SchemeKind::KernelLeft: {
            const Anchor anchor = scheme.kind == SchemeKind::KernelRight
                                      ? Anchor::Lower
                                      : Anchor::Upper;
            IntegralResult r = integrate_base(
                [&f](double x) { return f.eval_base(x); }, a, b, alpha, anchor,
                scheme);
            if (!r.converged)
                throw convergence_error("kernel quadrature did not reach tolerance " +
                                            std::to_string(scheme.tol),
                                        r);
            return r;
        }
        case SchemeKind::Classical: {
            if (!alpha.is_classical())
                throw configuration_error("Classical scheme is only valid at alpha = 1");
            IntegralResult r = classical_integrate(
                [&f](double x) { return f.eval_base(x); }, a, b, scheme.tol);
            if (!r.converged)
                throw convergence_error("classical quadrature did not reach tolerance",
                                        r);
            return r;
        }
    }
    throw configuration_error("unknown scheme");
}

Fractal exact_power_integral(const std::vector<std::pair<double, Fractal>>& terms,
                             double length, Alpha alpha) {
    double acc = 0.0;
    for (const auto& [r, c] : terms)
        acc += c.base * gamma_ratio(r, alpha) * std::pow(length, r + 1.0);
    return Fractal{acc};
}

Fractal beta_alpha(double n, double u, Alpha alpha, const IntegralScheme& scheme) {
    if (!(n >= 1.0) || !(u >= 1.0))
        throw std::domain_error("beta_alpha requires exponent parameters >= 1");
    const double ga = gamma_fn(1.0 + alpha.value());
    const double ui = std::round(u);
    if (scheme.kind == SchemeKind::ExactMonomial) {
        if (u != ui)
            throw configuration_error(
                "ExactMonomial beta_alpha needs an integer second parameter");
        // (1-g)^{(u-1)a} expanded binomially into powers g^{(n-1+j)a}
        std::vector<std::pair<double, Fractal>> terms;
        double binc = 1.0;
        const int e = static_cast<int>(ui) - 1;
        for (int j = 0; j <= e; ++j) {
            if (j > 0) binc = binc * double(e - j + 1) / double(j);
            terms.emplace_back(n - 1.0 + j, Fractal{(j % 2 ? -1.0 : 1.0) * binc});
        }
        return ga * exact_power_integral(terms, 1.0, alpha);
    }
    IntegralResult r = integrate_base(
        [n, u](double g) {
            return std::pow(g, n - 1.0) * std::pow(1.0 - g, u - 1.0);
        },
        0.0, 1.0, alpha, Anchor::Lower, scheme);
    if (!r.converged)
        throw convergence_error("beta_alpha quadrature did not reach tolerance", r);
    return ga * r.value;
}

std::pair<Fractal, Fractal> holder_bound(const GeneralizedFunction& f,
                                         const GeneralizedFunction& g, double a,
                                         double b, Alpha alpha, double eta,
                                         double sigma,
                                         const IntegralScheme& scheme) {
    if (!(eta > 1.0) || !(sigma > 1.0) ||
        std::fabs(1.0 / eta + 1.0 / sigma - 1.0) > 1e-12)
        throw configuration_error("holder_bound requires conjugate exponents "
                                  "eta, sigma > 1 with 1/eta + 1/sigma = 1");
    auto prod = [&](double x) { return std::fabs(f.eval_base(x) * g.eval_base(x)); };
    auto fp = [&](double x) { return std::pow(std::fabs(f.eval_base(x)), eta); };
    auto gp = [&](double x) { return std::pow(std::fabs(g.eval_base(x)), sigma); };
    const Fractal lhs = integrate_base(prod, a, b, alpha, Anchor::Lower, scheme).value;
    const Fractal If = integrate_base(fp, a, b, alpha, Anchor::Lower, scheme).value;
    const Fractal Ig = integrate_base(gp, a, b, alpha, Anchor::Lower, scheme).value;
    const Fractal rhs = fa_pow(If, 1.0 / eta) * fa_pow(Ig, 1.0 / sigma);
    return {lhs, rhs};
}

RiemannGapDiagnostic riemann_gap_diagnostic(const GeneralizedFunction& f, double a,
                                            double b, Alpha alpha,
                                            const IntegralScheme& scheme) {
    RiemannGapDiagnostic d;
    d.gamma_ratio_value =
        integrate_base([&f](double x) { return f.eval_base(x); }, a, b, alpha,
                       Anchor::Lower, scheme)
            .value;
    const Fractal classical =
        classical_integrate([&f](double x) { return f.eval_base(x); }, a, b).value;
    d.fractal_riemann_value = classical / gamma_fn(1.0 + alpha.value());
    return d;
}

} // namespace lfhh
