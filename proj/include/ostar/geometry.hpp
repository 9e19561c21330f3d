#ifndef OSTAR_GEOMETRY_HPP
#define OSTAR_GEOMETRY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ostar {

/// A unit vector in R^n, n >= 2. Construction checks |u| = 1 to 1e-14.
class Direction {
public:
    explicit Direction(std::vector<double> coords);

    /// Normalizes v and returns the resulting direction. Throws on v = 0.
    static Direction from_vector(std::vector<double> v);
    static Direction from_vector(const Eigen::VectorXd& v);

    /// (cos theta, sin theta) on S^1.
    static Direction angle_2d(double theta);

    /// Polar angle from +z and azimuth, on S^2.
    static Direction polar_3d(double polar, double azimuth);

    static Direction axis(int n, int j);

    int dim() const { return static_cast<int>(c_.size()); }
    double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<double>& coords() const { return c_; }

    /// Angle in [0, 2pi) for n = 2 directions.
    double theta() const;

private:
    std::vector<double> c_;
};

/// A star set represented by its radial function on the unit sphere plus
/// metadata. The oracle must be pure: same u, bit-identical value.
struct StarBody {
    int dimension = 0;
    std::function<double(const Direction&)> radial;
    bool positive = false;    // rho > 0 everywhere (class S^n_+)
    bool continuous = false;  // class S^n_c
    std::string label;
    double upper_bound = 0.0; // rho <= upper_bound everywhere
    double lower_bound = 0.0; // rho >= lower_bound everywhere; > 0 iff positive

    double rho(const Direction& u) const;
};

/// Invertible linear map A together with its inverse. A * A^{-1} is checked
/// against the identity entrywise to 1e-10 at construction.
class LinearMap {
public:
    explicit LinearMap(Eigen::MatrixXd a);
    LinearMap(Eigen::MatrixXd a, Eigen::MatrixXd inverse);

    static LinearMap identity(int n);
    static LinearMap scaling(int n, double r);
    static LinearMap diagonal(const std::vector<double>& d);
    /// Random well-conditioned map, deterministic in the seed.
    static LinearMap random(int n, std::uint64_t seed);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXd& matrix() const { return mat_; }
    const Eigen::MatrixXd& inverse() const { return inv_; }
    double abs_det() const;
    /// Frobenius norms, used as cheap operator-norm upper bounds.
    double norm_bound() const { return mat_.norm(); }
    double inverse_norm_bound() const { return inv_.norm(); }

    LinearMap compose_after(const LinearMap& other) const; // this * other

private:
    Eigen::MatrixXd mat_, inv_;
};

/// A convex body given by its support function oracle, h > 0 (origin
/// interior). Only constructors that guarantee sublinearity are provided.
struct ConvexBodySupport {
    int dimension = 0;
    std::function<double(const Direction&)> support;
    std::string label;
    double support_lower = 0.0; // h >= support_lower > 0 when known
    double support_upper = 0.0;

    double h(const Direction& u) const;
};

// ---- constructors ----------------------------------------------------------

StarBody make_ball(int n, double r);

/// rho(theta) = base + sum a_k cos(k theta) on S^1. Requires base - sum|a| > 0.
StarBody make_fourier_star(double base,
                           const std::vector<std::pair<int, double>>& amps);

/// Smooth positive star body with pseudo-random shape, deterministic in the
/// seed. Intended as a test-body generator for sweeps.
StarBody make_random_smooth_star(int n, std::uint64_t seed);

/// Dilatate c * K.
StarBody scale_body(const StarBody& k, double c);

ConvexBodySupport make_ellipsoid_support(const Eigen::MatrixXd& b);
ConvexBodySupport make_ellipsoid_support(const std::vector<double>& semiaxes);
ConvexBodySupport make_polytope_support(const std::vector<std::vector<double>>& vertices);

// ---- operations ------------------------------------------------------------

/// Image A K, using rho_{AK}(x) = rho_K(A^{-1} x) and degree -1 homogeneity.
StarBody linear_image(const StarBody& k, const LinearMap& a);

/// rho^p = alpha rho_K^p + beta rho_L^p. For p < 0, nodes where
/// rho_K * rho_L = 0 get radial 0. p = 0 is rejected; use log_combination.
StarBody pth_radial_combination(double alpha, const StarBody& k, double p,
                                double beta, const StarBody& l);

class SphericalRule; // quadrature.hpp

/// max over probe nodes of |rho_K - rho_L|; a lower bound for the true sup.
double radial_metric(const StarBody& k, const StarBody& l,
                     const SphericalRule& probe);

/// Section by the coordinate subspace spanned by the given axes (0-based,
/// at least two). The radial at v is rho_K(embed(v)).
StarBody restrict_to_coordinate_subspace(const StarBody& k,
                                         const std::vector<int>& axes);

/// Polar body as a star body: rho(u) = 1 / h(u).
StarBody polar_star_body(const ConvexBodySupport& c);

} // namespace ostar

#endif // OSTAR_GEOMETRY_HPP
