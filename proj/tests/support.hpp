#ifndef CRITCURV_TESTS_SUPPORT_HPP
#define CRITCURV_TESTS_SUPPORT_HPP

// Test-only helpers: an exact rational scalar, hand-rolled generators and
// expanded-list oracles that never touch the library's own summation code.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "critcurv/extrinsic.hpp"
#include "critcurv/random.hpp"

namespace testing {

/// Exact rational arithmetic on 128-bit numerators/denominators, enough for
/// short polynomial identities in small integers.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}  // NOLINT: implicit by design, mirrors Scalar(int)
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Raw{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_, Raw{});
    }
    Rational operator-() const { return Rational(-num_, den_, Raw{}); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r)
    {
        return os << static_cast<long long>(r.num_) << '/' << static_cast<long long>(r.den_);
    }

private:
    using Int = __int128;
    struct Raw {};
    Rational(Int n, Int d, Raw) : num_(n), den_(d) { normalize(); }

    static Int gcd(Int a, Int b)
    {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize()
    {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const Int g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_ = 0;
    Int den_ = 1;
};

/// Random spectrum with 1..max_entries entries, curvatures in [-range, range].
inline critcurv::PrincipalSpectrum random_spectrum(critcurv::Rng& rng, int max_entries = 4, double range = 3.0)
{
    const int entries = 1 + static_cast<int>(rng.canonical() * max_entries);
    std::vector<critcurv::CurvatureEntry<double>> e;
    for (int i = 0; i < entries; ++i) {
        e.push_back({rng.uniform(-range, range), 1 + static_cast<int>(rng.canonical() * 3)});
    }
    return critcurv::PrincipalSpectrum(std::move(e));
}

/// Sum of k^p over a list that repeats each curvature by hand.
inline double expanded_power_sum(const std::vector<double>& k, int p)
{
    double s = 0.0;
    for (const double v : k) {
        double t = 1.0;
        for (int i = 0; i < p; ++i) t *= v;
        s += t;
    }
    return s;
}

inline std::vector<double> expand_by_hand(const critcurv::PrincipalSpectrum& spectrum)
{
    std::vector<double> out;
    for (const auto& e : spectrum.entries()) {
        for (int j = 0; j < e.multiplicity; ++j) out.push_back(e.curvature);
    }
    return out;
}

}  // namespace testing

#endif  // CRITCURV_TESTS_SUPPORT_HPP
