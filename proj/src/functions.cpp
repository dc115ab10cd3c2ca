#include "lfhh/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace lfhh {

namespace {

double ipow(double x, int k) {
    double r = 1.0, b = x;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

double binom(int n, int j) {
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r *= double(n - j + i) / double(i);
    return r;
}

// Uniform double in [0,1) from raw 64-bit output; the distribution adapters
// in <random> are not bit-portable, this is.
double next_uniform(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

} // namespace

int MonomialSeries::degree() const {
    int d = 0;
    for (const auto& t : terms) d = std::max(d, t.k);
    return d;
}

MonomialSeries MonomialSeries::re_anchored(double new_origin) const {
    const double d = new_origin - origin;  // (x - o) = (x - o') + d
    std::vector<double> out(static_cast<size_t>(degree()) + 1, 0.0);
    for (const auto& t : terms)
        for (int j = 0; j <= t.k; ++j)
            out[j] += t.coeff.base * binom(t.k, j) * ipow(d, t.k - j);
    MonomialSeries r;
    r.origin = new_origin;
    for (int j = 0; j < static_cast<int>(out.size()); ++j)
        if (out[j] != 0.0) r.terms.push_back({j, Fractal{out[j]}});
    if (r.terms.empty()) r.terms.push_back({0, Fractal{0.0}});
    return r;
}

MonomialSeries MonomialSeries::multiplied(const MonomialSeries& other) const {
    const MonomialSeries rhs =
        (other.origin == origin) ? other : other.re_anchored(origin);
    std::vector<double> out(static_cast<size_t>(degree() + rhs.degree()) + 1, 0.0);
    for (const auto& a : terms)
        for (const auto& b : rhs.terms) out[a.k + b.k] += a.coeff.base * b.coeff.base;
    MonomialSeries r;
    r.origin = origin;
    for (int j = 0; j < static_cast<int>(out.size()); ++j)
        if (out[j] != 0.0) r.terms.push_back({j, Fractal{out[j]}});
    if (r.terms.empty()) r.terms.push_back({0, Fractal{0.0}});
    return r;
}

MonomialSeries MonomialSeries::scaled(Fractal c) const {
    MonomialSeries r = *this;
    for (auto& t : r.terms) t.coeff = t.coeff * c;
    return r;
}

MonomialSeries MonomialSeries::argument_scaled(double m) const {
    if (m == 0.0) throw std::domain_error("argument_scaled: m must be nonzero");
    MonomialSeries r;
    r.origin = m * origin;
    for (const auto& t : terms)
        r.terms.push_back({t.k, Fractal{t.coeff.base / ipow(m, t.k)}});
    return r;
}

GeneralizedFunction::GeneralizedFunction(Tabulated t) : rep_(std::move(t)) {
    const auto& tab = std::get<Tabulated>(rep_);
    if (tab.grid.size() < 2 || tab.grid.size() != tab.values.size())
        throw std::invalid_argument("Tabulated: need matching grid/values, size >= 2");
    for (size_t i = 1; i < tab.grid.size(); ++i)
        if (!(tab.grid[i] > tab.grid[i - 1]))
            throw std::invalid_argument("Tabulated: grid must be strictly increasing");
    domain_ = {tab.grid.front(), tab.grid.back()};
}

GeneralizedFunction GeneralizedFunction::monomial(
    double origin, std::vector<std::pair<int, double>> terms) {
    MonomialSeries s;
    s.origin = origin;
    for (auto& [k, c] : terms) {
        if (k < 0) throw std::invalid_argument("monomial term exponent must be >= 0");
        s.terms.push_back({k, Fractal{c}});
    }
    return GeneralizedFunction(std::move(s));
}

GeneralizedFunction GeneralizedFunction::constant(double base) {
    return monomial(0.0, {{0, base}});
}

Fractal GeneralizedFunction::eval(double x) const {
    if (domain_ && (x < domain_->first - 1e-12 || x > domain_->second + 1e-12))
        throw std::domain_error("evaluation point " + std::to_string(x) +
                                " outside domain [" + std::to_string(domain_->first) +
                                ", " + std::to_string(domain_->second) + "]");
    if (const auto* s = std::get_if<MonomialSeries>(&rep_)) {
        double acc = 0.0;
        for (const auto& t : s->terms) acc += t.coeff.base * ipow(x - s->origin, t.k);
        return Fractal{acc};
    }
    if (const auto* b = std::get_if<BaseMapped>(&rep_)) return Fractal{b->f(x)};
    const auto& tab = std::get<Tabulated>(rep_);
    // domain_ check above guarantees x within the grid up to tolerance
    const double xc = std::clamp(x, tab.grid.front(), tab.grid.back());
    auto it = std::upper_bound(tab.grid.begin(), tab.grid.end(), xc);
    size_t hi = std::min<size_t>(tab.grid.size() - 1,
                                 static_cast<size_t>(it - tab.grid.begin()));
    if (hi == 0) hi = 1;
    const size_t lo = hi - 1;
    const double w = (xc - tab.grid[lo]) / (tab.grid[hi] - tab.grid[lo]);
    return Fractal{(1.0 - w) * tab.values[lo] + w * tab.values[hi]};
}

const MonomialSeries& GeneralizedFunction::monomial_series() const {
    if (const auto* s = std::get_if<MonomialSeries>(&rep_)) return *s;
    throw unsupported_representation("operation requires a monomial series");
}

void GeneralizedFunction::set_domain(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("domain requires lo < hi");
    domain_ = {lo, hi};
}

GeneralizedFunction lf_derivative(const GeneralizedFunction& f, Alpha alpha) {
    const MonomialSeries& s = f.monomial_series();  // throws otherwise
    const double a = alpha.value();
    MonomialSeries d;
    d.origin = s.origin;
    for (const auto& t : s.terms) {
        if (t.k == 0) continue;  // constants vanish
        const double factor = gamma_fn(1.0 + t.k * a) / gamma_fn(1.0 + (t.k - 1) * a);
        d.terms.push_back({t.k - 1, Fractal{t.coeff.base * factor}});
    }
    if (d.terms.empty()) d.terms.push_back({0, Fractal{0.0}});
    return GeneralizedFunction(std::move(d));
}

HFunction HFunction::power_alpha() {
    return HFunction(Kind::PowerAlpha, 1.0, nullptr);
}

HFunction HFunction::power_s_alpha(double s) {
    if (!(s > 0.0) || s > 1.0)
        throw std::domain_error("power_s_alpha requires s in (0, 1]");
    return HFunction(Kind::PowerSAlpha, s, nullptr);
}

HFunction HFunction::constant() { return HFunction(Kind::Constant, 0.0, nullptr); }

HFunction HFunction::custom(std::function<Fractal(double)> fn) {
    if (!fn) throw std::invalid_argument("custom h requires a callable");
    return HFunction(Kind::Custom, 1.0, std::move(fn));
}

Fractal HFunction::operator()(double g) const {
    switch (kind_) {
        case Kind::PowerAlpha: return Fractal{g};
        case Kind::PowerSAlpha:
            return Fractal{g >= 0.0 ? std::pow(g, s_) : -std::pow(-g, s_)};
        case Kind::Constant: return Fractal{1.0};
        case Kind::Custom: return fn_(g);
    }
    return Fractal{0.0};
}

std::optional<double> HFunction::power_exponent() const {
    switch (kind_) {
        case Kind::PowerAlpha: return 1.0;
        case Kind::PowerSAlpha: return s_;
        case Kind::Constant: return 0.0;
        case Kind::Custom: return std::nullopt;
    }
    return std::nullopt;
}

ConvexityParams::ConvexityParams(HFunction h_, double m_, Alpha a_, double b_,
                                 bool allow_m_zero_)
    : h(std::move(h_)), m(m_), alpha(a_), b(b_), allow_m_zero(allow_m_zero_) {
    const double lo = allow_m_zero ? 0.0 : std::numeric_limits<double>::min();
    if (m < lo || m > 1.0)
        throw std::domain_error(allow_m_zero ? "m must lie in [0, 1]"
                                             : "m must lie in (0, 1]");
    if (!(b > 0.0)) throw std::domain_error("domain bound b must be positive");
}

namespace {

struct ProbeState {
    double worst = std::numeric_limits<double>::infinity();
    double wnu = 0, wmu = 0, wg = 0;
    long samples = 0;
    long inconclusive = 0;
};

// margin = h(g) G(nu) + m^a h(1-g) G(mu) - G(g nu + m(1-g) mu), in bases
void probe(const GeneralizedFunction& f, const ConvexityParams& p, double nu,
           double mu, double g, ProbeState& st) {
    ++st.samples;
    try {
        const double lhs = f.eval_base(g * nu + p.m * (1.0 - g) * mu);
        const double rhs =
            p.h.base(g) * f.eval_base(nu) + p.m * p.h.base(1.0 - g) * f.eval_base(mu);
        const double margin = rhs - lhs;
        if (margin < st.worst) {
            st.worst = margin;
            st.wnu = nu;
            st.wmu = mu;
            st.wg = g;
        }
    } catch (const std::domain_error&) {
        ++st.inconclusive;
    }
}

} // namespace

CheckResult is_hm_convex(const GeneralizedFunction& f, const ConvexityParams& p,
                         const SamplerConfig& sampler) {
    ProbeState st;
    const int n = std::max(2, sampler.grid_n);
    const double lo = sampler.window ? sampler.window->first : 0.0;
    const double hi = sampler.window ? sampler.window->second : p.b;
    const double len = hi - lo;
    for (int i = 0; i < n; ++i) {
        const double nu = lo + len * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double mu = lo + len * j / (n - 1);
            for (int l = 0; l < n; ++l) probe(f, p, nu, mu, double(l) / (n - 1), st);
        }
    }
    std::mt19937_64 rng(sampler.seed);
    for (long i = 0; i < sampler.random_samples; ++i) {
        const double nu = lo + len * next_uniform(rng);
        const double mu = lo + len * next_uniform(rng);
        probe(f, p, nu, mu, next_uniform(rng), st);
    }

    // Local refinement around the worst margin: a violation must survive a
    // shrinking neighbourhood search before it is reported.
    if (st.worst < -sampler.tolerance) {
        double rad_x = len / n, rad_g = 1.0 / n;
        for (int round = 0; round < sampler.refine_rounds; ++round) {
            ProbeState local = st;
            for (int i = -4; i <= 4; ++i)
                for (int j = -4; j <= 4; ++j)
                    for (int l = -4; l <= 4; ++l) {
                        const double nu =
                            std::clamp(st.wnu + rad_x * i / 4.0, lo, hi);
                        const double mu =
                            std::clamp(st.wmu + rad_x * j / 4.0, lo, hi);
                        const double g =
                            std::clamp(st.wg + rad_g * l / 4.0, 0.0, 1.0);
                        probe(f, p, nu, mu, g, local);
                    }
            st = local;
            rad_x /= 4.0;
            rad_g /= 4.0;
        }
    }

    CheckResult res;
    res.margin = Fractal{st.worst};
    res.samples = st.samples;
    res.inconclusive = st.inconclusive;
    if (st.worst < -sampler.tolerance) {
        res.verdict = CheckResult::Verdict::Counterexample;
        res.witness = CheckResult::Witness{st.wnu, st.wmu, st.wg};
    }
    return res;
}

Fractal sup_norm(const WeightFunction& w, double nu, double mu) {
    if (!(nu < mu)) throw std::domain_error("sup_norm requires nu < mu");
    const int n = 1025;
    double best = -std::numeric_limits<double>::infinity();
    int besti = 0;
    for (int i = 0; i < n; ++i) {
        const double x = nu + (mu - nu) * i / (n - 1);
        const double v = w.w.eval_base(x);
        if (v > best) {
            best = v;
            besti = i;
        }
    }
    // golden-section ascent on the bracket around the best grid point
    const double h = (mu - nu) / (n - 1);
    double a = std::max(nu, nu + (mu - nu) * besti / (n - 1) - h);
    double b = std::min(mu, nu + (mu - nu) * besti / (n - 1) + h);
    const double gr_ratio = 0.6180339887498949;
    double x1 = b - gr_ratio * (b - a), x2 = a + gr_ratio * (b - a);
    double f1 = w.w.eval_base(x1), f2 = w.w.eval_base(x2);
    for (int it = 0; it < 80 && (b - a) > 1e-14 * (1.0 + std::fabs(b)); ++it) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr_ratio * (b - a);
            f2 = w.w.eval_base(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr_ratio * (b - a);
            f1 = w.w.eval_base(x1);
        }
        best = std::max(best, std::max(f1, f2));
    }
    return Fractal{best};
}

bool check_symmetry(const WeightFunction& w, double nu, double mu, double tol) {
    if (!(nu < mu)) throw std::domain_error("check_symmetry requires nu < mu");
    const int n = 513;
    for (int i = 0; i < n; ++i) {
        const double x = nu + (mu - nu) * i / (n - 1);
        if (std::fabs(w.w.eval_base(x) - w.w.eval_base(nu + mu - x)) > tol)
            return false;
    }
    return true;
}

} // namespace lfhh
