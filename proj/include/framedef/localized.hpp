#pragma once

#include <string>
#include <utility>
#include <vector>

#include "framedef/cyclo.hpp"

namespace framedef {

/// Dense univariate polynomial in t over Q(zeta8); coefficient k belongs to t^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<CycloElem> coeffs);
    static UPoly constant(CycloElem c);
    static UPoly t();
    /// c0 + c1 t
    static UPoly linear(CycloElem c0, CycloElem c1);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] const std::vector<CycloElem>& coeffs() const noexcept { return c_; }
    [[nodiscard]] CycloElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : CycloElem(); }
    [[nodiscard]] CycloElem eval(const CycloElem& x) const;
    [[nodiscard]] UPoly pow(unsigned e) const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const CycloElem& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) noexcept { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) noexcept { return !(a == b); }

    /// Euclidean division: (quotient, remainder) with deg remainder < deg divisor.
    [[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;

    /// "[..]*t^0 + [..]*t^1 ..." over nonzero coefficients; "0" for zero.
    [[nodiscard]] std::string str() const;

private:
    void trim();
    std::vector<CycloElem> c_;
};

/// Element numerator * unit^(-power) of Q(zeta8)[t][1/unit].
///
/// The unit must have constant term of valuation 0. The representation is
/// normalized so that unit does not divide the numerator when power > 0.
class LocalizedPoly {
public:
    LocalizedPoly() = default;
    LocalizedPoly(UPoly numerator, UPoly unit, unsigned power = 0);

    [[nodiscard]] const UPoly& numerator() const noexcept { return num_; }
    [[nodiscard]] const UPoly& unit() const noexcept { return unit_; }
    [[nodiscard]] unsigned power() const noexcept { return power_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

    /// Value at t = x; the unit must not vanish there.
    [[nodiscard]] CycloElem eval(const CycloElem& x) const;

    /// Inverse when the element is c * unit^m; throws NotAUnit otherwise.
    [[nodiscard]] LocalizedPoly inverse() const;

    /// Constant value if numerator == c * unit^power, i.e. the element is constant.
    [[nodiscard]] bool is_constant(CycloElem* value = nullptr) const;

    LocalizedPoly operator-() const;
    friend LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b);
    friend LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b);
    friend LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b);
    friend LocalizedPoly operator*(const CycloElem& s, const LocalizedPoly& a);

    /// Decided by clearing denominators: p * u^k == q * u^j.
    friend bool operator==(const LocalizedPoly& a, const LocalizedPoly& b);
    friend bool operator!=(const LocalizedPoly& a, const LocalizedPoly& b) { return !(a == b); }

    [[nodiscard]] std::string str() const;

private:
    void normalize();
    static void check(const LocalizedPoly& a, const LocalizedPoly& b);

    UPoly num_;
    UPoly unit_ = UPoly::constant(1);
    unsigned power_ = 0;
};

inline bool is_zero(const LocalizedPoly& a) { return a.is_zero(); }
inline LocalizedPoly zero_like(const LocalizedPoly& a) { return {UPoly(), a.unit()}; }
inline LocalizedPoly one_like(const LocalizedPoly& a) { return {UPoly::constant(1), a.unit()}; }
inline LocalizedPoly unit_inverse(const LocalizedPoly& a) { return a.inverse(); }
inline std::string to_canonical(const LocalizedPoly& a) { return a.str(); }

}  // namespace framedef
