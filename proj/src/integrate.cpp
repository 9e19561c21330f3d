#include "ostar/integrate.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ostar/detail/numeric.hpp"

namespace ostar {

namespace {

std::vector<double> node_values(const StarBody& k, const SphericalRule& rule,
                                int power) {
    if (k.dimension != rule.dimension())
        throw std::invalid_argument("quadrature: body/rule dimension mismatch");
    std::vector<double> v;
    v.reserve(rule.size());
    for (const Direction& u : rule.nodes())
        v.push_back(std::pow(k.rho(u), power));
    return v;
}

std::string node_error(const char* what, size_t i, const Direction& u) {
    std::ostringstream os;
    os << what << " at node " << i << " (";
    for (int j = 0; j < u.dim(); ++j) os << (j ? "," : "") << u[j];
    os << ")";
    return os.str();
}

} // namespace

double volume(const StarBody& k, const SphericalRule& rule) {
    const int n = k.dimension;
    std::vector<double> terms = node_values(k, rule, n);
    for (size_t i = 0; i < terms.size(); ++i) terms[i] *= rule.weights()[i];
    return detail::pairwise_sum(terms) / n;
}

double volume_standard_error(const StarBody& k, const SphericalRule& rule) {
    if (rule.kind() != RuleKind::MonteCarlo) return 0.0;
    const int n = k.dimension;
    const std::vector<double> f = node_values(k, rule, n);
    const double area = detail::pairwise_sum(rule.weights());
    const double mean = detail::pairwise_sum(f) / static_cast<double>(f.size());
    std::vector<double> sq(f.size());
    for (size_t i = 0; i < f.size(); ++i) sq[i] = (f[i] - mean) * (f[i] - mean);
    const double var =
        f.size() > 1 ? detail::pairwise_sum(sq) / static_cast<double>(f.size() - 1) : 0.0;
    // V = (area/n) * mean(f); SE scales accordingly.
    return area / n * std::sqrt(var / static_cast<double>(f.size()));
}

double dual_cone_integral(const StarBody& k,
                          const std::function<double(const Direction&)>& f,
                          const SphericalRule& rule) {
    const int n = k.dimension;
    std::vector<double> rho_n = node_values(k, rule, n);
    std::vector<double> num(rho_n.size()), den(rho_n.size());
    for (size_t i = 0; i < rho_n.size(); ++i) {
        den[i] = rule.weights()[i] * rho_n[i];
        num[i] = den[i] * f(rule.nodes()[i]);
    }
    const double vol_n = detail::pairwise_sum(den); // n * V_n(K)
    if (!(vol_n > 0.0))
        throw std::invalid_argument("dual_cone_integral: zero-volume body");
    return detail::pairwise_sum(num) / vol_n;
}

MixedIntegrand make_mixed_integrand(const OrliczFunction& phi, int n) {
    if (phi.arity() != 1)
        throw std::invalid_argument("make_mixed_integrand: unary function required");
    MixedIntegrand m;
    const OrliczFunction fn = phi;
    m.f = [fn](double t) { return fn.eval1(t); };
    m.defined_at_zero = phi.fn_class() == FnClass::Phi;
    m.name = phi.name();
    m.phi0_curvature = phi.phi0_curvature();
    (void)n;
    return m;
}

MixedIntegrand make_mixed_integrand(const std::string& descriptor, int n) {
    if (descriptor == "log") {
        MixedIntegrand m;
        m.f = [](double t) { return std::log(t); };
        m.defined_at_zero = false;
        m.name = "log";
        m.phi0_curvature = Curvature::StrictlyConcave; // (1/n) log t
        return m;
    }
    if (descriptor.rfind("power:", 0) == 0) {
        const double p = std::stod(descriptor.substr(6));
        if (p == 0.0) throw std::invalid_argument("power: p must be nonzero");
        MixedIntegrand m;
        m.f = [p](double t) { return std::pow(t, p); };
        m.defined_at_zero = p > 0.0;
        m.name = descriptor;
        if (std::abs(p - n) <= 1e-12)
            m.phi0_curvature = Curvature::Concave;
        else if (p > 0.0 && p < n)
            m.phi0_curvature = Curvature::StrictlyConcave;
        else
            m.phi0_curvature = Curvature::StrictlyConvex;
        return m;
    }
    return make_mixed_integrand(make_registry_function(descriptor, 1, n), n);
}

MixedVolumeReport dual_orlicz_mixed_volume(const MixedIntegrand& phi,
                                           const StarBody& k, const StarBody& l,
                                           const SphericalRule& rule) {
    if (k.dimension != l.dimension || k.dimension != rule.dimension())
        throw std::invalid_argument("dual_orlicz_mixed_volume: dimension mismatch");
    const int n = k.dimension;
    std::vector<double> terms(rule.size());
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (size_t i = 0; i < rule.size(); ++i) {
        const Direction& u = rule.nodes()[i];
        const double a = k.rho(u);
        const double b = l.rho(u);
        if (!(a > 0.0))
            throw std::domain_error(node_error(
                "dual_orlicz_mixed_volume: rho_K must be positive", i, u));
        if (!phi.defined_at_zero && !(b > 0.0))
            throw std::domain_error(node_error(
                "dual_orlicz_mixed_volume: rho_L must be positive for this phi", i, u));
        const double ratio = b / a;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        terms[i] = rule.weights()[i] * phi.f(ratio) * std::pow(a, n);
    }
    MixedVolumeReport rep;
    rep.value = detail::pairwise_sum(terms) / n;
    rep.rule = rule.descriptor();
    rep.ratio_min = rmin;
    rep.ratio_max = rmax;
    return rep;
}

double dual_p_mixed_volume(const StarBody& k, const StarBody& l, double p,
                           const SphericalRule& rule) {
    if (k.dimension != l.dimension || k.dimension != rule.dimension())
        throw std::invalid_argument("dual_p_mixed_volume: dimension mismatch");
    const int n = k.dimension;
    std::vector<double> terms(rule.size());
    for (size_t i = 0; i < rule.size(); ++i) {
        const Direction& u = rule.nodes()[i];
        const double a = k.rho(u);
        const double b = l.rho(u);
        if (p > n && !(a > 0.0))
            throw std::domain_error(
                node_error("dual_p_mixed_volume: rho_K must be positive for p > n", i, u));
        if (p < 0.0 && !(b > 0.0))
            throw std::domain_error(
                node_error("dual_p_mixed_volume: rho_L must be positive for p < 0", i, u));
        terms[i] = rule.weights()[i] * std::pow(a, n - p) * std::pow(b, p);
    }
    return detail::pairwise_sum(terms) / n;
}

IntersectionRadial intersection_body_radial_power(const StarBody& k, double p,
                                                  const Direction& u,
                                                  const SphericalRule& rule,
                                                  double eta) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument(
            "intersection_body_radial_power: p must lie in (0,1)");
    if (k.dimension != rule.dimension() || u.dim() != k.dimension)
        throw std::invalid_argument("intersection_body_radial_power: dimension mismatch");
    const int n = k.dimension;
    // integral over K of (lambda |u.x|)^{-p} dx = lambda^{-p} *
    //   sum_v w_v |u.v|^{-p} rho(v)^{n-p} / (n-p); lambda = sum^{1/p}.
    std::vector<double> terms;
    terms.reserve(rule.size());
    double excluded = 0.0, total = 0.0;
    for (size_t i = 0; i < rule.size(); ++i) {
        const Direction& v = rule.nodes()[i];
        total += rule.weights()[i];
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += u[j] * v[j];
        if (std::abs(dot) < eta) {
            excluded += rule.weights()[i];
            continue;
        }
        const double rho = k.rho(v);
        if (rho == 0.0) continue;
        terms.push_back(rule.weights()[i] * std::pow(std::abs(dot), -p) *
                        std::pow(rho, n - p) / (n - p));
    }
    IntersectionRadial out;
    out.excluded_fraction = excluded / total;
    out.guarded = false;
    const double s = detail::pairwise_sum(terms);
    out.value = s > 0.0 ? std::pow(s, 1.0 / p) : 0.0;
    return out;
}

IntersectionRadial intersection_body_radial(const OrliczFunction& phi,
                                            const StarBody& k,
                                            const Direction& u,
                                            const SphericalRule& rule,
                                            double eta) {
    if (phi.arity() != 1 || phi.fn_class() != FnClass::Phi)
        throw std::invalid_argument("intersection_body_radial: unary Phi required");
    if (k.dimension != rule.dimension() || u.dim() != k.dimension)
        throw std::invalid_argument("intersection_body_radial: dimension mismatch");
    const int n = k.dimension;

    // 32-point Gauss-Legendre on [-1,1]; magic-static init is thread-safe.
    static const auto gl = [] {
        std::vector<double> x, w;
        gauss_legendre(32, x, w);
        return std::make_pair(std::move(x), std::move(w));
    }();
    const std::vector<double>& gx = gl.first;
    const std::vector<double>& gw = gl.second;

    struct Ray {
        double w;
        double absdot;
        double rho;
    };
    std::vector<Ray> rays;
    rays.reserve(rule.size());
    double excluded = 0.0, total = 0.0;
    for (size_t i = 0; i < rule.size(); ++i) {
        const Direction& v = rule.nodes()[i];
        total += rule.weights()[i];
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += u[j] * v[j];
        if (std::abs(dot) < eta) {
            excluded += rule.weights()[i];
            continue;
        }
        const double rho = k.rho(v);
        if (rho > 0.0) rays.push_back(Ray{rule.weights()[i], std::abs(dot), rho});
    }
    IntersectionRadial out;
    out.excluded_fraction = excluded / total;
    out.guarded = true;
    if (rays.empty()) {
        out.value = 0.0;
        return out;
    }

    const OrliczFunction fn = phi;
    auto body_integral = [&](double lambda) {
        std::vector<double> terms(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            const Ray& ray = rays[i];
            double inner = 0.0;
            for (size_t g = 0; g < gx.size(); ++g) {
                const double r = 0.5 * ray.rho * (gx[g] + 1.0); // [0, rho]
                if (!(r > 0.0)) continue;
                inner += gw[g] * fn.eval1(1.0 / (lambda * r * ray.absdot)) *
                         std::pow(r, n - 1);
            }
            terms[i] = ray.w * 0.5 * ray.rho * inner;
        }
        return detail::pairwise_sum(terms);
    };

    // body_integral is decreasing in lambda; find the level-1 crossing.
    double lo = 1.0, hi = 1.0;
    double vhi = body_integral(hi);
    int guard = 0;
    while (vhi > 1.0) {
        hi *= 2.0;
        vhi = body_integral(hi);
        if (++guard > 200)
            throw std::runtime_error(
                "intersection_body_radial: no finite level crossing (diverges); "
                "excluded_fraction=" + std::to_string(out.excluded_fraction));
    }
    double vlo = body_integral(lo);
    guard = 0;
    while (vlo < 1.0) {
        lo *= 0.5;
        vlo = body_integral(lo);
        if (++guard > 200)
            throw std::runtime_error(
                "intersection_body_radial: level stays below 1 (degenerate)");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double v = body_integral(mid);
        if (v == 1.0) { lo = hi = mid; break; }
        if (v > 1.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * mid) break;
    }
    out.value = 0.5 * (lo + hi);
    return out;
}

} // namespace ostar
