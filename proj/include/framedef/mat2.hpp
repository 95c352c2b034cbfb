#pragma once

#include <string>
#include <utility>

#include "framedef/errors.hpp"

namespace framedef {

namespace detail {

template <class R>
bool ring_is_zero(const R& a) {
    return is_zero(a);
}
template <class R>
R ring_zero_like(const R& a) {
    return zero_like(a);
}
template <class R>
R ring_one_like(const R& a) {
    return one_like(a);
}
template <class R>
R ring_unit_inverse(const R& a) {
    return unit_inverse(a);
}
template <class R>
std::string ring_str(const R& a) {
    return to_canonical(a);
}

}  // namespace detail

/// 2x2 matrix ((a11, a12), (a21, a22)) over a commutative ring R.
///
/// R supplies the hooks is_zero, zero_like, one_like, unit_inverse and
/// to_canonical, found by argument-dependent lookup.
template <class R>
class Mat2 {
public:
    Mat2() = default;
    Mat2(R a11, R a12, R a21, R a22) : a11(std::move(a11)), a12(std::move(a12)), a21(std::move(a21)), a22(std::move(a22)) {}

    /// Identity matrix over the ring of `sample`.
    static Mat2 identity(const R& sample) {
        R z = detail::ring_zero_like(sample);
        R o = detail::ring_one_like(sample);
        return {o, z, z, o};
    }
    /// Scalar matrix s * I.
    static Mat2 scalar(const R& s) {
        R z = detail::ring_zero_like(s);
        return {s, z, z, s};
    }

    [[nodiscard]] R det() const { return a11 * a22 - a12 * a21; }
    [[nodiscard]] R trace() const { return a11 + a22; }
    [[nodiscard]] Mat2 adj() const { return {a22, -a12, -a21, a11}; }

    /// adj / det, with det inverted by the ring; throws NotAUnit if det is not invertible.
    [[nodiscard]] Mat2 inverse() const {
        R d = det();
        if (detail::ring_is_zero(d)) throw NotAUnit("matrix determinant is zero");
        R dinv = detail::ring_unit_inverse(d);
        Mat2 m = adj();
        return {dinv * m.a11, dinv * m.a12, dinv * m.a21, dinv * m.a22};
    }

    [[nodiscard]] Mat2 pow(unsigned e) const {
        Mat2 r = identity(a11);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    [[nodiscard]] bool is_zero() const {
        return detail::ring_is_zero(a11) && detail::ring_is_zero(a12) && detail::ring_is_zero(a21) &&
               detail::ring_is_zero(a22);
    }

    template <class F>
    [[nodiscard]] auto map(F&& f) const -> Mat2<decltype(f(std::declval<const R&>()))> {
        return {f(a11), f(a12), f(a21), f(a22)};
    }

    Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22, a.a21 * b.a11 + a.a22 * b.a21,
                a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend Mat2 operator*(const R& s, const Mat2& a) { return {s * a.a11, s * a.a12, s * a.a21, s * a.a22}; }
    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
    }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

    /// "[[a11,a12],[a21,a22]]" with canonical entry strings.
    [[nodiscard]] std::string str() const {
        return "[[" + detail::ring_str(a11) + "," + detail::ring_str(a12) + "],[" + detail::ring_str(a21) + "," +
               detail::ring_str(a22) + "]]";
    }

    R a11, a12, a21, a22;
};

/// A B A^-1 B^-1.
template <class R>
Mat2<R> commutator(const Mat2<R>& a, const Mat2<R>& b) {
    return a * b * a.inverse() * b.inverse();
}

/// X^2 Y^4 [Y, Z].
template <class R>
Mat2<R> group_word(const Mat2<R>& x, const Mat2<R>& y, const Mat2<R>& z) {
    Mat2<R> x2 = x * x;
    Mat2<R> y2 = y * y;
    return x2 * (y2 * y2) * commutator(y, z);
}

/// All 2x2 minors of ((a11-a22, a12, a21), (b11-b22, b12, b21)) vanish.
/// Over a commutative ring this is equivalent to AB = BA.
template <class R>
bool commute_criterion(const Mat2<R>& a, const Mat2<R>& b) {
    R u1 = a.a11 - a.a22;
    R v1 = b.a11 - b.a22;
    return detail::ring_is_zero(u1 * b.a12 - a.a12 * v1) && detail::ring_is_zero(u1 * b.a21 - a.a21 * v1) &&
           detail::ring_is_zero(a.a12 * b.a21 - a.a21 * b.a12);
}

}  // namespace framedef
