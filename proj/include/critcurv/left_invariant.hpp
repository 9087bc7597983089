#ifndef CRITCURV_LEFT_INVARIANT_HPP
#define CRITCURV_LEFT_INVARIANT_HPP

// Levi-Civita connection and curvature of a left-invariant metric on a Lie
// group, computed from the structure constants of its Lie algebra through the
// Koszul formula
//
//   <nabla_U V, W> = 1/2 ( <[U,V],W> - <[V,W],U> + <[W,U],V> ).
//
// Everything is expressed in a fixed basis e_1..e_D of the algebra. The basis
// need not be orthonormal; the metric enters through its Gram matrix.

#include <array>
#include <cstddef>

#include <Eigen/Dense>

namespace critcurv {

template <typename Scalar, int Dim>
class LeftInvariantGeometry {
public:
    using Vector = Eigen::Matrix<Scalar, Dim, 1>;
    using Matrix = Eigen::Matrix<Scalar, Dim, Dim>;
    using Operators = std::array<Matrix, static_cast<std::size_t>(Dim)>;

    /// ad[a] is the matrix of ad(e_a): column b holds [e_a, e_b].
    LeftInvariantGeometry(const Operators& ad, const Matrix& gram) : ad_(ad), gram_(gram)
    {
        const Matrix gram_inv = gram_.inverse();
        // lowered(a)(c, b) = <nabla_{e_a} e_b, e_c>
        for (int a = 0; a < Dim; ++a) {
            Matrix lowered;
            for (int b = 0; b < Dim; ++b) {
                for (int c = 0; c < Dim; ++c) {
                    const Scalar ab_c = gram_.row(c).dot(ad_[a].col(b));
                    const Scalar bc_a = gram_.row(a).dot(ad_[b].col(c));
                    const Scalar ca_b = gram_.row(b).dot(ad_[c].col(a));
                    lowered(c, b) = Scalar(0.5) * (ab_c - bc_a + ca_b);
                }
            }
            nabla_[a] = gram_inv * lowered;
        }
    }

    const Matrix& gram() const noexcept { return gram_; }

    Scalar inner(const Vector& x, const Vector& y) const { return x.dot(gram_ * y); }

    Vector bracket(const Vector& x, const Vector& y) const { return ad_operator(x) * y; }

    Matrix ad_operator(const Vector& x) const
    {
        Matrix out = Matrix::Zero();
        for (int a = 0; a < Dim; ++a) {
            out += x(a) * ad_[a];
        }
        return out;
    }

    /// Matrix of Y -> nabla_X Y on left-invariant fields.
    Matrix connection_operator(const Vector& x) const
    {
        Matrix out = Matrix::Zero();
        for (int a = 0; a < Dim; ++a) {
            out += x(a) * nabla_[a];
        }
        return out;
    }

    Vector connection(const Vector& x, const Vector& y) const { return connection_operator(x) * y; }

    /// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]
    Matrix curvature_operator(const Vector& x, const Vector& y) const
    {
        const Matrix nx = connection_operator(x);
        const Matrix ny = connection_operator(y);
        return nx * ny - ny * nx - connection_operator(bracket(x, y));
    }

    Vector curvature(const Vector& x, const Vector& y, const Vector& z) const
    {
        return curvature_operator(x, y) * z;
    }

    /// <R(X,Y)Z, W>
    Scalar curvature4(const Vector& x, const Vector& y, const Vector& z, const Vector& w) const
    {
        return inner(curvature(x, y, z), w);
    }

    /// <R(X,Y)Y, X>, the sectional curvature times |X ^ Y|^2.
    Scalar unnormalized_sectional(const Vector& x, const Vector& y) const
    {
        const Matrix nx = connection_operator(x);
        const Matrix ny = connection_operator(y);
        const Vector nyy = ny * y;
        const Vector rxy_y = nx * nyy - ny * (nx * y) - connection_operator(bracket(x, y)) * y;
        return inner(rxy_y, x);
    }

    Scalar sectional(const Vector& x, const Vector& y) const
    {
        const Scalar xy = inner(x, y);
        return unnormalized_sectional(x, y) / (inner(x, x) * inner(y, y) - xy * xy);
    }

    /// Ric(Y,Z) = trace(X -> R(X,Y)Z)
    Matrix ricci() const
    {
        Matrix ric;
        for (int b = 0; b < Dim; ++b) {
            for (int c = 0; c < Dim; ++c) {
                Scalar tr(0);
                for (int a = 0; a < Dim; ++a) {
                    tr += curvature(Vector::Unit(a), Vector::Unit(b), Vector::Unit(c))(a);
                }
                ric(b, c) = tr;
            }
        }
        return ric;
    }

    Scalar scalar_curvature() const { return (gram_.inverse() * ricci()).trace(); }

private:
    Operators ad_;
    Matrix gram_;
    Operators nabla_;  // nabla_[a] column b = nabla_{e_a} e_b
};

}  // namespace critcurv

#endif  // CRITCURV_LEFT_INVARIANT_HPP
