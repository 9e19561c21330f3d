#include "ostar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ostar/detail/numeric.hpp"
#include "ostar/quadrature.hpp"

namespace ostar {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

// ---- Direction -------------------------------------------------------------

Direction::Direction(std::vector<double> coords) : c_(std::move(coords)) {
    if (c_.size() < 2)
        throw std::invalid_argument("Direction: dimension must be at least 2");
    if (std::abs(norm2(c_) - 1.0) > 1e-14)
        throw std::invalid_argument("Direction: vector is not unit length");
}

Direction Direction::from_vector(std::vector<double> v) {
    const double n = norm2(v);
    if (!(n > 0.0))
        throw std::invalid_argument("Direction: cannot normalize zero vector");
    for (double& x : v) x /= n;
    // One renormalization pass is enough to reach the 1e-14 gate.
    const double n2 = norm2(v);
    for (double& x : v) x /= n2;
    return Direction(std::move(v));
}

Direction Direction::from_vector(const Eigen::VectorXd& v) {
    return from_vector(std::vector<double>(v.data(), v.data() + v.size()));
}

Direction Direction::angle_2d(double theta) {
    return from_vector(std::vector<double>{std::cos(theta), std::sin(theta)});
}

Direction Direction::polar_3d(double polar, double azimuth) {
    const double s = std::sin(polar);
    return from_vector(std::vector<double>{
        s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)});
}

Direction Direction::axis(int n, int j) {
    if (n < 2 || j < 0 || j >= n)
        throw std::invalid_argument("Direction::axis: bad index");
    std::vector<double> v(static_cast<size_t>(n), 0.0);
    v[static_cast<size_t>(j)] = 1.0;
    return Direction(std::move(v));
}

double Direction::theta() const {
    if (dim() != 2)
        throw std::logic_error("Direction::theta: only defined for n = 2");
    double t = std::atan2(c_[1], c_[0]);
    if (t < 0.0) t += 2.0 * M_PI;
    return t;
}

double StarBody::rho(const Direction& u) const {
    if (u.dim() != dimension)
        throw std::invalid_argument("StarBody: direction dimension mismatch");
    return radial(u);
}

double ConvexBodySupport::h(const Direction& u) const {
    if (u.dim() != dimension)
        throw std::invalid_argument("ConvexBodySupport: dimension mismatch");
    return support(u);
}

// ---- LinearMap --------------------------------------------------------------

LinearMap::LinearMap(Eigen::MatrixXd a) : mat_(std::move(a)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 2)
        throw std::invalid_argument("LinearMap: matrix must be square, n >= 2");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(mat_);
    if (!lu.isInvertible())
        throw std::invalid_argument("LinearMap: singular matrix");
    inv_ = lu.inverse();
    const double err =
        (mat_ * inv_ - Eigen::MatrixXd::Identity(mat_.rows(), mat_.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (err > 1e-10)
        throw std::invalid_argument("LinearMap: inverse check failed");
}

LinearMap::LinearMap(Eigen::MatrixXd a, Eigen::MatrixXd inverse)
    : mat_(std::move(a)), inv_(std::move(inverse)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 2 ||
        inv_.rows() != mat_.rows() || inv_.cols() != mat_.cols())
        throw std::invalid_argument("LinearMap: shape mismatch");
    const double err =
        (mat_ * inv_ - Eigen::MatrixXd::Identity(mat_.rows(), mat_.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (err > 1e-10)
        throw std::invalid_argument("LinearMap: inverse check failed");
}

LinearMap LinearMap::identity(int n) {
    return LinearMap(Eigen::MatrixXd::Identity(n, n),
                     Eigen::MatrixXd::Identity(n, n));
}

LinearMap LinearMap::scaling(int n, double r) {
    if (!(r != 0.0))
        throw std::invalid_argument("LinearMap::scaling: r must be nonzero");
    return LinearMap(r * Eigen::MatrixXd::Identity(n, n),
                     (1.0 / r) * Eigen::MatrixXd::Identity(n, n));
}

LinearMap LinearMap::diagonal(const std::vector<double>& d) {
    const int n = static_cast<int>(d.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (!(d[static_cast<size_t>(i)] != 0.0))
            throw std::invalid_argument("LinearMap::diagonal: zero entry");
        a(i, i) = d[static_cast<size_t>(i)];
        b(i, i) = 1.0 / d[static_cast<size_t>(i)];
    }
    return LinearMap(std::move(a), std::move(b));
}

LinearMap LinearMap::random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = detail::uniform(rng, -1.0, 1.0) + (i == j ? 1.5 : 0.0);
        if (std::abs(a.determinant()) > 0.3) return LinearMap(std::move(a));
    }
    throw std::runtime_error("LinearMap::random: no well-conditioned sample");
}

double LinearMap::abs_det() const { return std::abs(mat_.determinant()); }

LinearMap LinearMap::compose_after(const LinearMap& other) const {
    return LinearMap(mat_ * other.mat_, other.inv_ * inv_);
}

// ---- constructors -----------------------------------------------------------

StarBody make_ball(int n, double r) {
    if (n < 2) throw std::invalid_argument("make_ball: n must be at least 2");
    if (r < 0.0) throw std::invalid_argument("make_ball: negative radius");
    StarBody b;
    b.dimension = n;
    b.radial = [r](const Direction&) { return r; };
    b.positive = r > 0.0;
    b.continuous = true;
    b.label = "ball(" + std::to_string(r) + ")";
    b.upper_bound = r;
    b.lower_bound = r;
    return b;
}

StarBody make_fourier_star(double base,
                           const std::vector<std::pair<int, double>>& amps) {
    double total = 0.0;
    for (const auto& [k, a] : amps) {
        if (k <= 0) throw std::invalid_argument("make_fourier_star: k must be positive");
        total += std::abs(a);
    }
    if (!(base - total > 0.0))
        throw std::invalid_argument("make_fourier_star: base - sum|a| must be positive");
    StarBody b;
    b.dimension = 2;
    b.radial = [base, amps](const Direction& u) {
        const double t = u.theta();
        double r = base;
        for (const auto& [k, a] : amps) r += a * std::cos(k * t);
        return r;
    };
    b.positive = true;
    b.continuous = true;
    b.label = "fourier";
    b.upper_bound = base + total;
    b.lower_bound = base - total;
    return b;
}

StarBody make_random_smooth_star(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("make_random_smooth_star: n >= 2");
    std::mt19937_64 rng(seed);
    const double scale = detail::uniform(rng, 0.5, 2.0);
    if (n == 2) {
        std::vector<std::pair<int, double>> amps;
        const int terms = 2 + static_cast<int>(rng() % 3); // 2..4 harmonics
        double budget = 0.55;
        for (int i = 0; i < terms; ++i) {
            const int k = 1 + static_cast<int>(rng() % 6);
            const double a = detail::uniform(rng, -1.0, 1.0) * budget / terms;
            amps.emplace_back(k, a);
        }
        StarBody b = make_fourier_star(1.0, amps);
        b = scale_body(b, scale);
        b.label = "star2(" + std::to_string(seed) + ")";
        return b;
    }
    // rho(u) = scale * (1 + sum a_i (u . v_i)^{d_i}) with sum |a_i| <= 0.55.
    struct Term {
        std::vector<double> v;
        double a;
        int d;
    };
    std::vector<Term> terms;
    const int m = 3;
    for (int i = 0; i < m; ++i) {
        std::vector<double> v(static_cast<size_t>(n));
        for (double& x : v) x = detail::gaussian(rng);
        const double nv = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        for (double& x : v) x /= nv;
        Term t;
        t.v = std::move(v);
        t.a = detail::uniform(rng, -1.0, 1.0) * 0.55 / m;
        t.d = 1 + static_cast<int>(rng() % 3);
        terms.push_back(std::move(t));
    }
    double total = 0.0;
    for (const auto& t : terms) total += std::abs(t.a);
    StarBody b;
    b.dimension = n;
    b.radial = [scale, terms](const Direction& u) {
        double r = 1.0;
        for (const auto& t : terms) {
            double dot = 0.0;
            for (int i = 0; i < u.dim(); ++i) dot += u[i] * t.v[static_cast<size_t>(i)];
            r += t.a * std::pow(dot, t.d);
        }
        return scale * r;
    };
    b.positive = true;
    b.continuous = true;
    b.label = "star" + std::to_string(n) + "(" + std::to_string(seed) + ")";
    b.upper_bound = scale * (1.0 + total);
    b.lower_bound = scale * (1.0 - total);
    return b;
}

StarBody scale_body(const StarBody& k, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("scale_body: c must be positive");
    StarBody b = k;
    auto base = k.radial;
    b.radial = [base, c](const Direction& u) { return c * base(u); };
    b.upper_bound = c * k.upper_bound;
    b.lower_bound = c * k.lower_bound;
    b.label = k.label + "*" + std::to_string(c);
    return b;
}

ConvexBodySupport make_ellipsoid_support(const Eigen::MatrixXd& b) {
    if (b.rows() != b.cols() || b.rows() < 2)
        throw std::invalid_argument("make_ellipsoid_support: square matrix, n >= 2");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    if (!lu.isInvertible())
        throw std::invalid_argument("make_ellipsoid_support: singular matrix");
    const Eigen::MatrixXd binv = lu.inverse();
    ConvexBodySupport c;
    c.dimension = static_cast<int>(b.rows());
    Eigen::MatrixXd bt = b.transpose();
    c.support = [bt](const Direction& u) {
        Eigen::VectorXd x(u.dim());
        for (int i = 0; i < u.dim(); ++i) x(i) = u[i];
        return (bt * x).norm();
    };
    c.label = "ellipsoid-support";
    // h(u) = |B^T u| >= 1/|B^{-T}|_op >= 1/|B^{-1}|_F.
    c.support_lower = 1.0 / binv.norm();
    c.support_upper = b.norm();
    return c;
}

ConvexBodySupport make_ellipsoid_support(const std::vector<double>& semiaxes) {
    const int n = static_cast<int>(semiaxes.size());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) b(i, i) = semiaxes[static_cast<size_t>(i)];
    return make_ellipsoid_support(b);
}

ConvexBodySupport make_polytope_support(
    const std::vector<std::vector<double>>& vertices) {
    if (vertices.empty())
        throw std::invalid_argument("make_polytope_support: no vertices");
    const size_t n = vertices.front().size();
    if (n < 2) throw std::invalid_argument("make_polytope_support: n >= 2");
    for (const auto& v : vertices)
        if (v.size() != n)
            throw std::invalid_argument("make_polytope_support: ragged vertex list");
    ConvexBodySupport c;
    c.dimension = static_cast<int>(n);
    double vmax = 0.0;
    for (const auto& v : vertices)
        vmax = std::max(vmax, norm2(v));
    c.support = [vertices](const Direction& u) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& v : vertices) {
            double dot = 0.0;
            for (int i = 0; i < u.dim(); ++i) dot += u[i] * v[static_cast<size_t>(i)];
            best = std::max(best, dot);
        }
        return best;
    };
    c.label = "polytope-support";
    c.support_lower = 0.0; // unknown without a hull computation
    c.support_upper = vmax;
    return c;
}

// ---- operations -------------------------------------------------------------

StarBody linear_image(const StarBody& k, const LinearMap& a) {
    if (k.dimension != a.dim())
        throw std::invalid_argument("linear_image: dimension mismatch");
    StarBody b;
    b.dimension = k.dimension;
    auto base = k.radial;
    const Eigen::MatrixXd inv = a.inverse();
    b.radial = [base, inv](const Direction& u) {
        Eigen::VectorXd x(u.dim());
        for (int i = 0; i < u.dim(); ++i) x(i) = u[i];
        const Eigen::VectorXd y = inv * x;
        const double ny = y.norm();
        // rho_{AK}(u) = rho_K(A^{-1}u) = rho_K(y/|y|) / |y|.
        return base(Direction::from_vector(y / ny)) / ny;
    };
    b.positive = k.positive;
    b.continuous = k.continuous;
    b.label = "A(" + k.label + ")";
    b.upper_bound = k.upper_bound * a.norm_bound();
    b.lower_bound = k.positive ? k.lower_bound / a.inverse_norm_bound() : 0.0;
    return b;
}

StarBody pth_radial_combination(double alpha, const StarBody& k, double p,
                                double beta, const StarBody& l) {
    if (k.dimension != l.dimension)
        throw std::invalid_argument("pth_radial_combination: dimension mismatch");
    if (alpha < 0.0 || beta < 0.0)
        throw std::invalid_argument("pth_radial_combination: negative coefficient");
    if (p == 0.0)
        throw std::invalid_argument(
            "pth_radial_combination: p = 0 is the log combination; use log_combination");
    StarBody b;
    b.dimension = k.dimension;
    auto rk = k.radial;
    auto rl = l.radial;
    if (p == 1.0) {
        b.radial = [rk, rl, alpha, beta](const Direction& u) {
            return alpha * rk(u) + beta * rl(u);
        };
    } else if (p < 0.0) {
        b.radial = [rk, rl, alpha, beta, p](const Direction& u) {
            const double a = rk(u), c = rl(u);
            if (a * c == 0.0) return 0.0; // paper's convention for p < 0
            return std::pow(alpha * std::pow(a, p) + beta * std::pow(c, p), 1.0 / p);
        };
    } else {
        b.radial = [rk, rl, alpha, beta, p](const Direction& u) {
            const double s = alpha * std::pow(rk(u), p) + beta * std::pow(rl(u), p);
            return s == 0.0 ? 0.0 : std::pow(s, 1.0 / p);
        };
    }
    b.positive = k.positive && l.positive && (alpha > 0.0 || beta > 0.0);
    b.continuous = k.continuous && l.continuous;
    b.label = "(" + k.label + " +~_" + std::to_string(p) + " " + l.label + ")";
    if (p > 0.0) {
        b.upper_bound = std::pow(alpha * std::pow(k.upper_bound, p) +
                                     beta * std::pow(l.upper_bound, p),
                                 1.0 / p);
        b.lower_bound =
            b.positive ? std::pow(alpha * std::pow(k.lower_bound, p) +
                                      beta * std::pow(l.lower_bound, p),
                                  1.0 / p)
                       : 0.0;
    } else if (b.positive) {
        b.upper_bound = std::pow(alpha * std::pow(k.upper_bound, p) +
                                     beta * std::pow(l.upper_bound, p),
                                 1.0 / p);
        b.lower_bound = std::pow(alpha * std::pow(k.lower_bound, p) +
                                     beta * std::pow(l.lower_bound, p),
                                 1.0 / p);
    } else {
        b.upper_bound = 0.0;
        b.lower_bound = 0.0;
        if (alpha > 0.0) b.upper_bound = std::pow(alpha, 1.0 / p) * k.upper_bound;
        if (beta > 0.0)
            b.upper_bound = b.upper_bound == 0.0
                                ? std::pow(beta, 1.0 / p) * l.upper_bound
                                : std::min(b.upper_bound,
                                           std::pow(beta, 1.0 / p) * l.upper_bound);
    }
    return b;
}

double radial_metric(const StarBody& k, const StarBody& l,
                     const SphericalRule& probe) {
    if (k.dimension != l.dimension)
        throw std::invalid_argument("radial_metric: dimension mismatch");
    double m = 0.0;
    for (const Direction& u : probe.nodes())
        m = std::max(m, std::abs(k.rho(u) - l.rho(u)));
    return m;
}

StarBody restrict_to_coordinate_subspace(const StarBody& k,
                                         const std::vector<int>& axes) {
    if (axes.size() < 2)
        throw std::invalid_argument(
            "restrict_to_coordinate_subspace: need at least two axes");
    for (int a : axes)
        if (a < 0 || a >= k.dimension)
            throw std::invalid_argument(
                "restrict_to_coordinate_subspace: axis out of range");
    StarBody b;
    b.dimension = static_cast<int>(axes.size());
    auto base = k.radial;
    const int full = k.dimension;
    b.radial = [base, axes, full](const Direction& v) {
        std::vector<double> x(static_cast<size_t>(full), 0.0);
        for (size_t i = 0; i < axes.size(); ++i)
            x[static_cast<size_t>(axes[i])] = v[static_cast<int>(i)];
        return base(Direction(std::move(x)));
    };
    b.positive = k.positive;
    b.continuous = k.continuous;
    b.label = k.label + "|section";
    b.upper_bound = k.upper_bound;
    b.lower_bound = k.lower_bound;
    return b;
}

StarBody polar_star_body(const ConvexBodySupport& c) {
    StarBody b;
    b.dimension = c.dimension;
    auto h = c.support;
    b.radial = [h](const Direction& u) {
        const double v = h(u);
        if (!(v > 0.0))
            throw std::domain_error("polar_star_body: nonpositive support value");
        return 1.0 / v;
    };
    b.positive = true;
    b.continuous = true;
    b.label = "polar(" + c.label + ")";
    b.upper_bound = c.support_lower > 0.0
                        ? 1.0 / c.support_lower
                        : std::numeric_limits<double>::infinity();
    b.lower_bound = c.support_upper > 0.0 ? 1.0 / c.support_upper : 0.0;
    return b;
}

} // namespace ostar
