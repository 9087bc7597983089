#ifndef CRITCURV_WARPED_HPP
#define CRITCURV_WARPED_HPP

// Doubly warped Ricci-flat backgrounds and their level slices r = const.
//
//  Schwarzschild:   dr^2 + phi(r)^2 dtheta^2 + psi(r)^2 g_{S^2},
//                   psidot^2 = 1 - beta/psi, phi = 2 beta psidot, psi(0) = beta.
//  Eguchi-Hanson:   dr^2 + (phi psi)^2 sigma_3^2 + phi^2 (sigma_1^2 + sigma_2^2),
//                   phidot = psi, phidot^2 = 1 - k phi^-4, phi(0) = k^{1/4}.
//
// The grid stores the state at r = 0 (exact axis values), at the series launch
// point and at every fixed step after it. The first-order constraint is
// re-imposed after every step, so it holds to rounding on all nodes.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "critcurv/extrinsic.hpp"
#include "critcurv/report.hpp"

namespace critcurv {

enum class Background { Schwarzschild, EguchiHanson };

std::string_view to_string(Background b) noexcept;
Background parse_background(std::string_view name);

struct WarpState {
    double r = 0.0;
    double phi = 0.0;
    double psi = 0.0;
    double dphi = 0.0;
    double dpsi = 0.0;
    double ddphi = 0.0;
    double ddpsi = 0.0;
};

/// Natural length: beta for Schwarzschild, k^{1/4} for Eguchi-Hanson.
double background_scale(Background kind, double param);
double default_r_max(Background kind, double param);
inline double default_step(double r_max) { return 1e-4 * r_max; }
inline constexpr double series_launch = 1e-3;  // in units of background_scale

/// Truncated power series about the axis, valid for r << scale.
WarpState series_state(Background kind, double param, double r);

/// All derived quantities from the primary variable (psi, resp. phi) through
/// the first-order constraint on the positive branch.
WarpState state_from_primary(Background kind, double param, double r, double primary);

class WarpedProfile {
public:
    WarpedProfile(Background kind, double param, std::vector<WarpState> nodes, double max_projection);

    Background kind() const noexcept { return kind_; }
    double param() const noexcept { return param_; }
    double r_max() const noexcept { return nodes_.back().r; }
    const std::vector<WarpState>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }

    /// Largest correction applied by the constraint projection over the run.
    double max_projection() const noexcept { return max_projection_; }

    /// Cubic Hermite interpolation of the primary variable, the rest rebuilt
    /// from the constraint. Throws std::out_of_range outside [0, r_max].
    WarpState at(double r) const;

private:
    Background kind_;
    double param_;
    std::vector<WarpState> nodes_;
    double max_projection_;
};

/// Fixed-step RK4 from the series launch point. Throws std::invalid_argument
/// for param <= 0, r_max <= launch, step <= 0, or a step whose per-step
/// constraint drift exceeds drift_tol.
WarpedProfile solve_profile(Background kind, double param, double r_max, double step, double drift_tol = 1e-4);
WarpedProfile solve_profile(Background kind, double param);

/// |psidot^2 - (1 - beta/psi)| + |phi - 2 beta psidot|, resp.
/// |phidot^2 - (1 - k phi^-4)| + |phidot - psi|.
double constraint_residual(Background kind, double param, const WarpState& s);

/// phiddot/phi + 2 psiddot/psi, resp. (phi psi)''/(phi psi) + 2 phiddot/phi.
double ricci_flat_residual(Background kind, const WarpState& s);

struct SliceReport {
    double r = 0.0;
    PrincipalSpectrum spectrum{{0.0, 3}};
    std::vector<double> normal_sectionals;  // K(e_i, nu), one per tangent direction
    double C = 0.0;
    double S = 0.0;
};

SliceReport slice_curvatures(const WarpedProfile& p, double r);

/// Criticality function of the S functional on the slice, in its explicit
/// warp-factor form; equals s_residual_einstein of the slice data.
double criticality_C(const WarpedProfile& p, double r);

/// Scalar-curvature function of the slice, h^2 - |alpha|^2 in warp factors.
double slice_scalar(const WarpedProfile& p, double r);

/// Sum over ordered tangent pairs i != j of the ambient K(e_i, e_j), computed
/// from the warped-product structure (circle x round sphere, resp. Berger
/// sphere) independently of the extrinsic data's Gauss relation.
double tangential_sectional_sum(const WarpedProfile& p, double r);

/// Intrinsic scalar curvature of the slice: 2/psi^2 for the S^1 x S^2 slice,
/// 8/b^2 - 2 a^2/b^4 for the Berger sphere with a = phi psi, b = phi.
double slice_intrinsic_scalar(const WarpedProfile& p, double r);

/// Number of strict sign changes of C over consecutive grid nodes with r > 0.
int count_sign_changes_C(const WarpedProfile& p);

/// The unique zero of C, refined to r_tol. Throws std::runtime_error when C
/// does not change sign on the grid or changes sign more than once.
double find_critical_slice(const WarpedProfile& p, double r_tol = 1e-10);

/// Columns r,phi,psi,dphi,dpsi,C,S over grid nodes r > 0, every `stride`-th
/// node plus the last.
Table profile_table(const WarpedProfile& p, std::size_t stride = 1);

void write_profile_csv(std::ostream& out, const WarpedProfile& p, std::size_t stride = 1);

}  // namespace critcurv

#endif  // CRITCURV_WARPED_HPP
