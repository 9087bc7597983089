#ifndef CRITCURV_PROJECTIVE_HPP
#define CRITCURV_PROJECTIVE_HPP

// Fubini-Study geometry of complex projective space (holomorphic sectional
// curvature 4), algebraic curves in the projective plane, bounds along
// minimizing sequences of surfaces, and the two-sheet desingularization of a
// node z1 z2 = 0 -> z1 z2 = eps.
//
// Quantities that are integer multiples of pi are carried as the integer
// coefficient so that identities between them can be checked exactly.

#include <cmath>
#include <cstdint>
#include <numbers>

#include <Eigen/Core>

namespace critcurv {

// ---------------------------------------------------------------------------
// Tangent-space model: R^{2n} = C^n with J(x, y) = (-y, x) blockwise.
// ---------------------------------------------------------------------------

/// Complex structure on R^{2n}; coordinates are (Re z_1, Im z_1, Re z_2, ...).
Eigen::VectorXd complex_structure(const Eigen::VectorXd& v);

struct TangentPairFS {
    Eigen::VectorXd u;
    Eigen::VectorXd v;

    /// Validates orthonormality to tol; throws std::invalid_argument otherwise.
    static TangentPairFS make(Eigen::VectorXd u, Eigen::VectorXd v, double tol = 1e-10);
};

/// K(u, v) = 1 + 3 <u, Jv>^2
double fs_sectional(const TangentPairFS& pair);

/// v = cos(t) v0 + sin(t) J u with v0 orthogonal to u and J u.
struct FsDecomposition {
    double t = 0.0;
    Eigen::VectorXd v0;  // zero when cos t = 0
};

FsDecomposition fs_decompose(const TangentPairFS& pair);

/// R(v,u)u = cos(t) v0 + 4 sin(t) J u. Throws std::invalid_argument when t is
/// not the angle of the pair's own decomposition.
Eigen::VectorXd fs_curvature_vector(const TangentPairFS& pair, double t);

// ---------------------------------------------------------------------------
// Algebraic curves S_d in the projective plane
// ---------------------------------------------------------------------------

struct CurveInvariants {
    int d = 1;
    std::int64_t pi_coeff = 0;     // Pi(S_d) / pi = 4 d (d - 1)
    std::int64_t theta_coeff = 0;  // Theta(S_d) / pi = 8 d
    std::int64_t genus = 0;        // (d - 1)(d - 2) / 2
    std::int64_t area_coeff = 0;   // area / pi = d
    std::int64_t c1_dot = 0;       // c1(S_d) . [S_d] = (3 - d) d

    double pi_value() const { return std::numbers::pi * static_cast<double>(pi_coeff); }
    double theta_value() const { return std::numbers::pi * static_cast<double>(theta_coeff); }
    double area() const { return std::numbers::pi * static_cast<double>(area_coeff); }
    std::int64_t euler_characteristic() const { return 2 - 2 * genus; }

    /// Pi = Theta - 4 pi chi, exactly.
    bool gauss_bonnet_closes() const { return pi_coeff == theta_coeff - 4 * euler_characteristic(); }
};

CurveInvariants curve_invariants(int d);

/// |alpha|^2 = 4m(m+1) - s_g for a complex m-dimensional submanifold.
double intrinsic_alpha_norm(int m, double s_g);

/// |alpha|^2 of the flat totally real torus in the projective plane.
inline constexpr double totally_real_torus_alpha_norm = 2.0;

/// Genus bound g >= (d-1)(d-2)/2 for embedded surfaces in the class d[H].
bool genus_lower_bound(int d, int g);

struct MinimizingBounds {
    double genus_max = 0.0;
    double area_min = 0.0;
    double area_max = 0.0;
};

MinimizingBounds minimizing_bounds(int d);

struct BubbleData {
    double area = 0.0;    // A_p
    double energy = 0.0;  // E_p
};

/// A_p (64 A_p + E_p) >= 8 pi^2
bool bubble_inequality(const BubbleData& b);

/// floor( sqrt(64 C1^2 + C1 C2) / (2 sqrt 2 pi) )
std::int64_t max_bubbles(double c1, double c2);

// ---------------------------------------------------------------------------
// Desingularization area
// ---------------------------------------------------------------------------

/// Fubini-Study area density (w.r.t. dx dy on the z-plane) of the sheet
/// z -> (z, eps / z), i.e. the pullback of the Kaehler form, at |z| = rho.
double sheet_area_density(double rho, double eps);

struct DesingArea {
    double quadrature = 0.0;    // 8 x FS area of {z1 z2 = eps, |z| <= r}
    double closed_form = 0.0;   // 8 pi 2r^2/(2 + r^2) at eps = 0, else 8 pi + 8 pi r^2/(1 + r^2)
    double two_disc_exact = 0.0;  // 16 pi r^2 / (1 + r^2), the eps = 0 value
};

/// Throws std::runtime_error when the adaptive quadrature does not converge.
DesingArea desing_area(double r, double eps, double tol = 1e-10);

/// 8 x area by composite Simpson on `panels` radial panels; used to measure
/// the convergence order of the quadrature.
double desing_area_composite(double r, double eps, int panels);

// ---------------------------------------------------------------------------
// Diagonal of S^2 x S^2
// ---------------------------------------------------------------------------

struct DiagonalConstants {
    double volume = 8.0 * std::numbers::pi;
    double ambient_sectional_on_diagonal = 0.5;
    double scalar_curvature = 1.0;
    int euler_characteristic = 2;

    /// 2 K vol - 4 pi chi, which is the integral of |alpha|^2 and must vanish.
    double closure() const { return 2.0 * ambient_sectional_on_diagonal * volume - 4.0 * std::numbers::pi * euler_characteristic; }
};

DiagonalConstants diagonal_constants();

/// Sectional curvature of the product of unit spheres on the plane spanned
/// by X = (X1, X2), Y = (Y1, Y2): |X1 ^ Y1|^2 + |X2 ^ Y2|^2 over |X ^ Y|^2.
double product_sphere_sectional(const Eigen::Vector3d& x1, const Eigen::Vector3d& x2,
                                const Eigen::Vector3d& y1, const Eigen::Vector3d& y2);

}  // namespace critcurv

#endif  // CRITCURV_PROJECTIVE_HPP
