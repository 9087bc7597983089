#ifndef CRITCURV_QUATERNION_HPP
#define CRITCURV_QUATERNION_HPP

#include <cmath>

namespace critcurv {

/// q = w + x i + y j + z k, with the full ring structure (Eigen::Quaternion
/// only models unit rotations and has no addition).
template <typename Scalar>
struct Quaternion {
    Scalar w{}, x{}, y{}, z{};

    static constexpr Quaternion real(Scalar a) { return {a, Scalar(0), Scalar(0), Scalar(0)}; }
    static constexpr Quaternion i() { return {Scalar(0), Scalar(1), Scalar(0), Scalar(0)}; }
    static constexpr Quaternion j() { return {Scalar(0), Scalar(0), Scalar(1), Scalar(0)}; }
    static constexpr Quaternion k() { return {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr Quaternion imag() const { return {Scalar(0), x, y, z}; }
    constexpr Scalar re() const { return w; }
    constexpr Scalar norm_sq() const { return w * w + x * x + y * y + z * z; }
    Scalar norm() const
    {
        using std::sqrt;
        return sqrt(norm_sq());
    }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion& operator+=(const Quaternion& o)
    {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) { return *this += -o; }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator*(Scalar s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
    friend constexpr Quaternion operator*(const Quaternion& q, Scalar s) { return s * q; }

    /// Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b)
    {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

using Quaterniond = Quaternion<double>;

template <typename Scalar>
constexpr Quaternion<Scalar> qmul(const Quaternion<Scalar>& a, const Quaternion<Scalar>& b)
{
    return a * b;
}

/// Re(conj(a) b), the Euclidean inner product on R^4.
template <typename Scalar>
constexpr Scalar re_conj_mul(const Quaternion<Scalar>& a, const Quaternion<Scalar>& b)
{
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

}  // namespace critcurv

#endif  // CRITCURV_QUATERNION_HPP
