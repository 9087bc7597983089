#ifndef CRITCURV_EXTRINSIC_HPP
#define CRITCURV_EXTRINSIC_HPP

// Scalar invariants of a principal-curvature spectrum and the Euler-Lagrange
// residuals of the functionals
//
//   Pi(M)  = int |alpha|^2,   Psi(M) = int |H|^2,   S(M) = Pi(M) - Psi(M)
//
// for hypersurfaces with constant principal curvatures (so that the
// Laplacian of the mean curvature drops out of every equation).

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace critcurv {

// Sectionals are taken in a non-deduced context so that std::vector and
// arrays convert to a span once Scalar is fixed by the spectrum.
template <typename Scalar>
using SectionalList = std::type_identity_t<std::span<const Scalar>>;

template <typename Scalar>
struct CurvatureEntry {
    Scalar curvature{};
    int multiplicity = 1;
};

/// Multiset of principal curvatures, stored with exact multiplicities.
template <typename Scalar>
class BasicSpectrum {
public:
    using Entry = CurvatureEntry<Scalar>;

    BasicSpectrum(std::initializer_list<Entry> entries)
        : BasicSpectrum(std::vector<Entry>(entries))
    {
    }

    explicit BasicSpectrum(std::vector<Entry> entries) : entries_(std::move(entries))
    {
        for (const auto& e : entries_) {
            if (e.multiplicity < 1) {
                throw std::invalid_argument("spectrum multiplicity must be >= 1, got " +
                                            std::to_string(e.multiplicity));
            }
            dimension_ += e.multiplicity;
        }
        if (dimension_ < 1) {
            throw std::invalid_argument("spectrum must have dimension >= 1");
        }
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    int dimension() const noexcept { return dimension_; }

    /// One curvature per principal direction.
    std::vector<Scalar> expanded() const
    {
        std::vector<Scalar> out;
        out.reserve(static_cast<std::size_t>(dimension_));
        for (const auto& e : entries_) {
            out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.curvature);
        }
        return out;
    }

    /// Orientation reversal: every k becomes -k.
    BasicSpectrum flipped() const
    {
        auto out = entries_;
        for (auto& e : out) {
            e.curvature = -e.curvature;
        }
        return BasicSpectrum(std::move(out));
    }

    template <typename Other>
    BasicSpectrum<Other> cast() const
    {
        std::vector<CurvatureEntry<Other>> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) {
            out.push_back({static_cast<Other>(e.curvature), e.multiplicity});
        }
        return BasicSpectrum<Other>(std::move(out));
    }

private:
    std::vector<Entry> entries_;
    int dimension_ = 0;
};

using PrincipalSpectrum = BasicSpectrum<double>;

namespace detail {

template <typename Scalar>
Scalar power_sum(const BasicSpectrum<Scalar>& spectrum, int power)
{
    Scalar sum(0);
    for (const auto& e : spectrum.entries()) {
        Scalar term(e.multiplicity);
        for (int i = 0; i < power; ++i) {
            term = term * e.curvature;
        }
        sum = sum + term;
    }
    return sum;
}

// Sectional curvatures K(e_i, nu) given either per principal direction or per
// spectrum entry; returns them per entry together with the multiplicities.
template <typename Scalar>
std::vector<std::pair<Scalar, Scalar>> pair_with_sectionals(const BasicSpectrum<Scalar>& spectrum,
                                                            std::span<const Scalar> sectionals)
{
    const auto& entries = spectrum.entries();
    std::vector<std::pair<Scalar, Scalar>> out;  // (m_i k_i K_i, m_i K_i)
    if (sectionals.size() == entries.size()) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const Scalar m(entries[i].multiplicity);
            out.emplace_back(m * entries[i].curvature * sectionals[i], m * sectionals[i]);
        }
        return out;
    }
    if (sectionals.size() == static_cast<std::size_t>(spectrum.dimension())) {
        std::size_t pos = 0;
        for (const auto& e : entries) {
            for (int j = 0; j < e.multiplicity; ++j, ++pos) {
                out.emplace_back(e.curvature * sectionals[pos], sectionals[pos]);
            }
        }
        return out;
    }
    throw std::invalid_argument("expected " + std::to_string(entries.size()) + " or " +
                                std::to_string(spectrum.dimension()) +
                                " normal sectional curvatures, got " +
                                std::to_string(sectionals.size()));
}

}  // namespace detail

/// h = sum of principal curvatures.
template <typename Scalar>
Scalar mean_curvature(const BasicSpectrum<Scalar>& spectrum)
{
    return detail::power_sum(spectrum, 1);
}

template <typename Scalar>
Scalar alpha_norm_sq(const BasicSpectrum<Scalar>& spectrum)
{
    return detail::power_sum(spectrum, 2);
}

/// trace of the cubed shape operator.
template <typename Scalar>
Scalar trace_a3(const BasicSpectrum<Scalar>& spectrum)
{
    return detail::power_sum(spectrum, 3);
}

/// Right-hand side of the Pi equation in an Einstein ambient:
/// 2 sum k_i K(e_i,nu) - h|alpha|^2 + 2 tr A^3.
template <typename Scalar>
Scalar pi_residual_einstein(const BasicSpectrum<Scalar>& spectrum, SectionalList<Scalar> normal_sectionals)
{
    Scalar weighted(0);
    for (const auto& [kk, k] : detail::pair_with_sectionals(spectrum, normal_sectionals)) {
        weighted = weighted + kk;
    }
    const Scalar h = mean_curvature(spectrum);
    return Scalar(2) * weighted - h * alpha_norm_sq(spectrum) + Scalar(2) * trace_a3(spectrum);
}

/// Right-hand side of the Psi equation: 2h sum K(e_i,nu) + 2h|alpha|^2 - h^3.
template <typename Scalar>
Scalar psi_residual_einstein(const BasicSpectrum<Scalar>& spectrum, SectionalList<Scalar> normal_sectionals)
{
    Scalar total(0);
    for (const auto& [kk, k] : detail::pair_with_sectionals(spectrum, normal_sectionals)) {
        total = total + k;
    }
    const Scalar h = mean_curvature(spectrum);
    return Scalar(2) * h * total + Scalar(2) * h * alpha_norm_sq(spectrum) - h * h * h;
}

/// Critical point equation of S = Pi - Psi in an Einstein ambient:
/// 2 sum k_i K_i - 2h sum K_i + 2 tr A^3 - 3|alpha|^2 h + h^3.
template <typename Scalar>
Scalar s_residual_einstein(const BasicSpectrum<Scalar>& spectrum, SectionalList<Scalar> normal_sectionals)
{
    Scalar weighted(0);
    Scalar total(0);
    for (const auto& [kk, k] : detail::pair_with_sectionals(spectrum, normal_sectionals)) {
        weighted = weighted + kk;
        total = total + k;
    }
    const Scalar h = mean_curvature(spectrum);
    return Scalar(2) * weighted - Scalar(2) * h * total + Scalar(2) * trace_a3(spectrum) -
           Scalar(3) * alpha_norm_sq(spectrum) * h + h * h * h;
}

/// Pi residual in the space form of curvature c: 2ch - h|alpha|^2 + 2 tr A^3.
template <typename Scalar>
Scalar pi_residual_spaceform(const BasicSpectrum<Scalar>& spectrum, std::type_identity_t<Scalar> c)
{
    const Scalar h = mean_curvature(spectrum);
    return Scalar(2) * c * h - h * alpha_norm_sq(spectrum) + Scalar(2) * trace_a3(spectrum);
}

/// Psi residual in the space form of curvature c: 2cnh + 2h|alpha|^2 - h^3,
/// n being the hypersurface dimension.
template <typename Scalar>
Scalar psi_residual_spaceform(const BasicSpectrum<Scalar>& spectrum, std::type_identity_t<Scalar> c)
{
    const Scalar h = mean_curvature(spectrum);
    const Scalar n(spectrum.dimension());
    return Scalar(2) * c * n * h + Scalar(2) * h * alpha_norm_sq(spectrum) - h * h * h;
}

template <typename Scalar>
Scalar s_residual_spaceform(const BasicSpectrum<Scalar>& spectrum, std::type_identity_t<Scalar> c)
{
    const std::vector<Scalar> sectionals(spectrum.entries().size(), c);
    return s_residual_einstein(spectrum, std::span<const Scalar>(sectionals));
}

/// Gauss equation traced twice: s_g = sum_{i,j} K(e_i,e_j) + h^2 - |alpha|^2.
template <typename Scalar>
Scalar gauss_scalar(const BasicSpectrum<Scalar>& spectrum, std::type_identity_t<Scalar> tangential_sectional_sum)
{
    const Scalar h = mean_curvature(spectrum);
    return tangential_sectional_sum + h * h - alpha_norm_sq(spectrum);
}

template <typename Scalar>
struct BasicCriticalityReport {
    Scalar h{};
    Scalar alpha_norm_sq{};
    Scalar trace_a3{};
    Scalar pi_residual{};
    Scalar psi_residual{};
    Scalar s_residual{};
};

using CriticalityReport = BasicCriticalityReport<double>;

template <typename Scalar>
BasicCriticalityReport<Scalar> criticality_report(const BasicSpectrum<Scalar>& spectrum,
                                                  SectionalList<Scalar> normal_sectionals)
{
    return {mean_curvature(spectrum),
            alpha_norm_sq(spectrum),
            trace_a3(spectrum),
            pi_residual_einstein(spectrum, normal_sectionals),
            psi_residual_einstein(spectrum, normal_sectionals),
            s_residual_einstein(spectrum, normal_sectionals)};
}

/// Report for a hypersurface of the space form of curvature c.
template <typename Scalar>
BasicCriticalityReport<Scalar> criticality_report(const BasicSpectrum<Scalar>& spectrum, std::type_identity_t<Scalar> c)
{
    const std::vector<Scalar> sectionals(spectrum.entries().size(), c);
    return criticality_report(spectrum, std::span<const Scalar>(sectionals));
}

// ---------------------------------------------------------------------------
// Arbitrary codimension: second fundamental form given by its q shape
// operators A_k (symmetric n x n, components h^k_ij).
// ---------------------------------------------------------------------------

template <typename Scalar>
using ShapeOperator = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
void check_shape_operators(std::span<const ShapeOperator<Scalar>> alpha, int m)
{
    using std::abs;
    if (alpha.empty()) {
        throw std::invalid_argument("second fundamental form needs at least one normal");
    }
    if (m < 0 || m >= static_cast<int>(alpha.size())) {
        throw std::out_of_range("normal index " + std::to_string(m) + " out of range");
    }
    const auto n = alpha.front().rows();
    for (const auto& a : alpha) {
        if (a.rows() != n || a.cols() != n) {
            throw std::invalid_argument("shape operators must all be square of the same size");
        }
        const Scalar scale = a.cwiseAbs().maxCoeff();
        const Scalar asym = (a - a.transpose()).cwiseAbs().maxCoeff();
        if (asym > Scalar(1e-12) * (Scalar(1) + scale)) {
            throw std::invalid_argument("shape operator is not symmetric");
        }
    }
}

}  // namespace detail

/// <alpha(e_i,e_j), alpha(e_l,e_j)> <alpha(e_l,e_i), nu_m> by direct summation
/// over i, j, l and the normal index.
template <typename Scalar>
Scalar cubic_contraction(std::span<const ShapeOperator<Scalar>> alpha, int m)
{
    detail::check_shape_operators(alpha, m);
    const auto n = alpha.front().rows();
    const auto& am = alpha[static_cast<std::size_t>(m)];
    Scalar sum(0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index l = 0; l < n; ++l) {
                Scalar inner(0);
                for (const auto& ak : alpha) {
                    inner += ak(i, j) * ak(l, j);
                }
                sum += inner * am(l, i);
            }
        }
    }
    return sum;
}

/// Same contraction as trace(A_m sum_k A_k^2).
template <typename Scalar>
Scalar cubic_contraction_trace(std::span<const ShapeOperator<Scalar>> alpha, int m)
{
    detail::check_shape_operators(alpha, m);
    const auto n = alpha.front().rows();
    ShapeOperator<Scalar> squares = ShapeOperator<Scalar>::Zero(n, n);
    for (const auto& ak : alpha) {
        squares.noalias() += ak * ak;
    }
    return (alpha[static_cast<std::size_t>(m)] * squares).trace();
}

}  // namespace critcurv

#endif  // CRITCURV_EXTRINSIC_HPP
