#pragma once

#include <array>
#include <ostream>
#include <string>

#include "framedef/rational.hpp"

namespace framedef {

/// 2-adic valuation value: a rational number or +infinity (the valuation of zero).
class Val {
public:
    Val() = default;
    explicit Val(Rational v) : value_(std::move(v)), infinite_(false) {}
    static Val infinity() { return Val(); }

    [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
    /// Finite value; throws on +infinity.
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] std::string str() const;

    friend Val operator+(const Val& a, const Val& b);
    friend bool operator==(const Val& a, const Val& b) noexcept;
    friend bool operator!=(const Val& a, const Val& b) noexcept { return !(a == b); }
    friend bool operator<(const Val& a, const Val& b);
    friend bool operator<=(const Val& a, const Val& b) { return !(b < a); }
    friend bool operator>(const Val& a, const Val& b) { return b < a; }
    friend bool operator>=(const Val& a, const Val& b) { return !(a < b); }

    [[nodiscard]] bool positive() const { return infinite_ || value_.sign() > 0; }

private:
    Rational value_;
    bool infinite_ = true;
};

Val min(const Val& a, const Val& b);

/// Element of Q(zeta8) = Q[w]/(w^4 + 1), stored as c0 + c1 w + c2 w^2 + c3 w^3.
class CycloElem {
public:
    CycloElem() = default;
    CycloElem(long long n) : c_{Rational(n), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    CycloElem(Rational r) : c_{std::move(r), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    CycloElem(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    /// The primitive eighth root of unity w.
    static CycloElem zeta8() { return {0, 1, 0, 0}; }
    /// i = zeta8^2.
    static CycloElem imag() { return {0, 0, 1, 0}; }

    [[nodiscard]] const Rational& operator[](std::size_t k) const { return c_[k]; }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_rational() const noexcept;

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& rhs);
    CycloElem& operator-=(const CycloElem& rhs);
    CycloElem& operator*=(const CycloElem& rhs);
    CycloElem& operator/=(const CycloElem& rhs);

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
    friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
    friend bool operator==(const CycloElem& a, const CycloElem& b) noexcept { return a.c_ == b.c_; }
    friend bool operator!=(const CycloElem& a, const CycloElem& b) noexcept { return !(a == b); }

    [[nodiscard]] CycloElem pow(unsigned e) const;

    /// Canonical quadruple form "[c0,c1,c2,c3]" with entries "num/den".
    [[nodiscard]] std::string str() const;

private:
    std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const CycloElem& a);

/// Inverse in Q(zeta8); throws DivisionByZero for 0.
CycloElem field_inverse(const CycloElem& a);

/// Field norm to Q (equal to the resultant of w^4 + 1 and the representative of a).
Rational norm(const CycloElem& a);

/// Unique extension of v2 to Q2(zeta8), normalized by v(2) = 1.
Val val2(const CycloElem& a);

// Ring hooks used by the generic matrix and polynomial code.
inline bool is_zero(const CycloElem& a) { return a.is_zero(); }
inline CycloElem zero_like(const CycloElem&) { return {}; }
inline CycloElem one_like(const CycloElem&) { return {1}; }
inline CycloElem unit_inverse(const CycloElem& a) { return field_inverse(a); }
inline std::string to_canonical(const CycloElem& a) { return a.str(); }
/// Unit of the valuation ring Z2[zeta8]: valuation exactly 0.
inline bool is_integral_unit(const CycloElem& a) { return !a.is_zero() && val2(a) == Val(Rational(0)); }

}  // namespace framedef
