#include "critcurv/warped.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "critcurv/report.hpp"
#include "critcurv/roots.hpp"

namespace critcurv {

namespace {

void require_param(double param)
{
    if (!(param > 0.0)) throw std::invalid_argument("background parameter must be positive");
}

// Primary second-order equation y'' = g(y): psi for Schwarzschild, phi for
// Eguchi-Hanson.
double primary_accel(Background kind, double param, double y)
{
    return kind == Background::Schwarzschild ? param / (2.0 * y * y) : 2.0 * param / std::pow(y, 5);
}

double primary_speed(Background kind, double param, double y)
{
    const double q = kind == Background::Schwarzschild ? 1.0 - param / y : 1.0 - param / std::pow(y, 4);
    return std::sqrt(std::max(q, 0.0));
}

double primary(Background kind, const WarpState& s) { return kind == Background::Schwarzschild ? s.psi : s.phi; }
double primary_rate(Background kind, const WarpState& s) { return kind == Background::Schwarzschild ? s.dpsi : s.dphi; }

struct SliceData {
    double x = 0.0;  // log-derivative of the multiplicity-1 factor
    double y = 0.0;  // log-derivative of the multiplicity-2 factor
    double xx = 0.0; // second derivative over value, multiplicity-1 factor
    double yy = 0.0; // second derivative over value, multiplicity-2 factor
};

SliceData slice_data(Background kind, const WarpState& s)
{
    if (kind == Background::Schwarzschild) {
        return {s.dphi / s.phi, s.dpsi / s.psi, s.ddphi / s.phi, s.ddpsi / s.psi};
    }
    const double f = s.phi * s.psi;
    const double df = s.dphi * s.psi + s.phi * s.dpsi;
    const double ddf = s.ddphi * s.psi + 2.0 * s.dphi * s.dpsi + s.phi * s.ddpsi;
    return {df / f, s.dphi / s.phi, ddf / f, s.ddphi / s.phi};
}

void require_slice(double r)
{
    if (!(r > 0.0)) throw std::out_of_range("slice radius must be positive");
}

}  // namespace

std::string_view to_string(Background b) noexcept
{
    return b == Background::Schwarzschild ? "schwarzschild" : "eguchi-hanson";
}

Background parse_background(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "schwarzschild" || lower == "schw") return Background::Schwarzschild;
    if (lower == "eguchi-hanson" || lower == "eh") return Background::EguchiHanson;
    throw std::invalid_argument("unknown background '" + std::string(name) + "'");
}

double background_scale(Background kind, double param)
{
    require_param(param);
    return kind == Background::Schwarzschild ? param : std::pow(param, 0.25);
}

double default_r_max(Background kind, double param) { return 1e3 * background_scale(kind, param); }

WarpState series_state(Background kind, double param, double r)
{
    require_param(param);
    const double r2 = r * r;
    if (kind == Background::Schwarzschild) {
        const double b = param;
        const double psi = b + r2 / (4.0 * b) - r2 * r2 / (48.0 * b * b * b) + 11.0 * r2 * r2 * r2 / (2880.0 * std::pow(b, 5));
        return state_from_primary(kind, param, r, psi);
    }
    const double s = std::pow(param, 0.25);  // phi(0)
    const double phi = s + r2 / s - 5.0 / 6.0 * r2 * r2 / (s * s * s) + 23.0 / 18.0 * r2 * r2 * r2 / std::pow(s, 5);
    return state_from_primary(kind, param, r, phi);
}

WarpState state_from_primary(Background kind, double param, double r, double y)
{
    WarpState s;
    s.r = r;
    const double dy = primary_speed(kind, param, y);
    const double ddy = primary_accel(kind, param, y);
    if (kind == Background::Schwarzschild) {
        const double b = param;
        s.psi = y;
        s.dpsi = dy;
        s.ddpsi = ddy;
        s.phi = 2.0 * b * dy;
        s.dphi = b * b / (y * y);
        s.ddphi = -2.0 * b * b * dy / (y * y * y);
    } else {
        const double k = param;
        s.phi = y;
        s.dphi = dy;
        s.ddphi = ddy;
        s.psi = dy;
        s.dpsi = ddy;
        s.ddpsi = -10.0 * k * dy / std::pow(y, 6);
    }
    return s;
}

WarpedProfile::WarpedProfile(Background kind, double param, std::vector<WarpState> nodes, double max_projection)
    : kind_(kind), param_(param), nodes_(std::move(nodes)), max_projection_(max_projection)
{
    if (nodes_.size() < 2) throw std::invalid_argument("profile needs at least two nodes");
}

WarpState WarpedProfile::at(double r) const
{
    if (!(r >= 0.0 && r <= r_max())) {
        throw std::out_of_range("r = " + format_number(r, 17) + " lies outside the profile grid");
    }
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r,
                                     [](double v, const WarpState& s) { return v < s.r; });
    if (it == nodes_.end()) return nodes_.back();
    const WarpState& a = *(it - 1);
    const WarpState& b = *it;
    if (r == a.r) return a;
    const double h = b.r - a.r;
    const double t = (r - a.r) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double y = (2 * t3 - 3 * t2 + 1) * primary(kind_, a) + (t3 - 2 * t2 + t) * h * primary_rate(kind_, a) +
                     (-2 * t3 + 3 * t2) * primary(kind_, b) + (t3 - t2) * h * primary_rate(kind_, b);
    return state_from_primary(kind_, param_, r, y);
}

WarpedProfile solve_profile(Background kind, double param, double r_max, double step, double drift_tol)
{
    require_param(param);
    const double scale = background_scale(kind, param);
    const double r0 = series_launch * scale;
    if (!(step > 0.0)) throw std::invalid_argument("integration step must be positive");
    if (!(r_max > r0)) throw std::invalid_argument("r_max must exceed the series launch point");

    std::vector<WarpState> nodes;
    nodes.push_back(state_from_primary(kind, param, 0.0, kind == Background::Schwarzschild ? param : scale));
    nodes.push_back(series_state(kind, param, r0));

    const auto steps = static_cast<std::size_t>(std::ceil((r_max - r0) / step - 1e-9));
    nodes.reserve(steps + 2);
    double y = primary(kind, nodes.back());
    double v = primary_rate(kind, nodes.back());
    double max_projection = 0.0;
    double r = r0;
    for (std::size_t i = 1; i <= steps; ++i) {
        const double r_next = (i == steps) ? r_max : r0 + static_cast<double>(i) * step;
        const double h = r_next - r;
        const auto acc = [&](double yy) { return primary_accel(kind, param, yy); };
        const double k1y = v;
        const double k1v = acc(y);
        const double k2y = v + 0.5 * h * k1v;
        const double k2v = acc(y + 0.5 * h * k1y);
        const double k3y = v + 0.5 * h * k2v;
        const double k3v = acc(y + 0.5 * h * k2y);
        const double k4y = v + h * k3v;
        const double k4v = acc(y + h * k3y);
        y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
        v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
        // Project onto the constraint, keeping the positive branch.
        const double projected = primary_speed(kind, param, y);
        const double drift = std::abs(projected - v);
        max_projection = std::max(max_projection, drift);
        if (drift > drift_tol) {
            throw std::invalid_argument("step " + format_number(step, 6) + " too large: constraint drift " +
                                        format_number(drift, 3) + " at r = " + format_number(r_next, 6));
        }
        v = projected;
        r = r_next;
        nodes.push_back(state_from_primary(kind, param, r, y));
    }
    return WarpedProfile(kind, param, std::move(nodes), max_projection);
}

WarpedProfile solve_profile(Background kind, double param)
{
    const double r_max = default_r_max(kind, param);
    return solve_profile(kind, param, r_max, default_step(r_max));
}

double constraint_residual(Background kind, double param, const WarpState& s)
{
    if (kind == Background::Schwarzschild) {
        return std::abs(s.dpsi * s.dpsi - (1.0 - param / s.psi)) + std::abs(s.phi - 2.0 * param * s.dpsi);
    }
    return std::abs(s.dphi * s.dphi - (1.0 - param / std::pow(s.phi, 4))) + std::abs(s.dphi - s.psi);
}

double ricci_flat_residual(Background kind, const WarpState& s)
{
    const SliceData d = slice_data(kind, s);
    return d.xx + 2.0 * d.yy;
}

SliceReport slice_curvatures(const WarpedProfile& p, double r)
{
    require_slice(r);
    const SliceData d = slice_data(p.kind(), p.at(r));
    SliceReport out;
    out.r = r;
    out.spectrum = PrincipalSpectrum({{-d.x, 1}, {-d.y, 2}});
    out.normal_sectionals = {-d.xx, -d.yy, -d.yy};
    out.C = 2.0 * (d.x * d.xx + 2.0 * d.y * d.yy) - 6.0 * d.x * d.y * d.y;
    out.S = 2.0 * d.y * (d.y + 2.0 * d.x);
    return out;
}

double criticality_C(const WarpedProfile& p, double r) { return slice_curvatures(p, r).C; }

double slice_scalar(const WarpedProfile& p, double r) { return slice_curvatures(p, r).S; }

double slice_intrinsic_scalar(const WarpedProfile& p, double r)
{
    require_slice(r);
    const WarpState s = p.at(r);
    if (p.kind() == Background::Schwarzschild) {
        return 2.0 / (s.psi * s.psi);
    }
    const double a = s.phi * s.psi;
    const double b = s.phi;
    return 8.0 / (b * b) - 2.0 * a * a / (b * b * b * b);
}

double tangential_sectional_sum(const WarpedProfile& p, double r)
{
    require_slice(r);
    const WarpState s = p.at(r);
    if (p.kind() == Background::Schwarzschild) {
        // K(circle, sphere) = -phidot psidot/(phi psi) twice, K(sphere) = (1 - psidot^2)/psi^2
        return 2.0 * (-2.0 * s.dphi * s.dpsi / (s.phi * s.psi) + (1.0 - s.dpsi * s.dpsi) / (s.psi * s.psi));
    }
    // Gauss relation K_amb(e_i,e_j) = K_int(e_i,e_j) - k_i k_j, summed over
    // ordered pairs, with the Berger-sphere intrinsic curvature.
    const SliceData d = slice_data(p.kind(), s);
    const double kk = 2.0 * (2.0 * d.x * d.y + d.y * d.y);
    return slice_intrinsic_scalar(p, r) - kk;
}

int count_sign_changes_C(const WarpedProfile& p)
{
    int changes = 0;
    bool have_prev = false;
    bool prev_neg = false;
    for (const WarpState& s : p.nodes()) {
        if (s.r <= 0.0) continue;
        const double c = criticality_C(p, s.r);
        if (c == 0.0) continue;
        const bool neg = std::signbit(c);
        if (have_prev && neg != prev_neg) ++changes;
        prev_neg = neg;
        have_prev = true;
    }
    return changes;
}

double find_critical_slice(const WarpedProfile& p, double r_tol)
{
    const auto C = [&p](double r) { return criticality_C(p, r); };
    std::vector<Bracket> brackets;
    const WarpState* prev = nullptr;
    for (const WarpState& s : p.nodes()) {
        if (s.r <= 0.0) continue;
        if (prev != nullptr && std::signbit(C(prev->r)) != std::signbit(C(s.r))) {
            brackets.push_back({prev->r, s.r});
        }
        prev = &s;
    }
    if (brackets.empty()) {
        throw std::runtime_error("criticality function does not change sign on (0, " + format_number(p.r_max(), 6) + "]");
    }
    if (brackets.size() > 1) {
        throw std::runtime_error("criticality function changes sign " + std::to_string(brackets.size()) + " times");
    }
    return bisect(C, brackets.front(), r_tol);
}

Table profile_table(const WarpedProfile& p, std::size_t stride)
{
    if (stride == 0) throw std::invalid_argument("stride must be >= 1");
    Table t;
    t.columns = {"r", "phi", "psi", "dphi", "dpsi", "C", "S"};
    const auto& nodes = p.nodes();
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if ((i - 1) % stride != 0 && i + 1 != nodes.size()) continue;
        const WarpState& s = nodes[i];
        const SliceReport rep = slice_curvatures(p, s.r);
        t.add_row({s.r, s.phi, s.psi, s.dphi, s.dpsi, rep.C, rep.S});
    }
    return t;
}

void write_profile_csv(std::ostream& out, const WarpedProfile& p, std::size_t stride)
{
    emit_report(out, profile_table(p, stride), Format::Csv);
}

}  // namespace critcurv
