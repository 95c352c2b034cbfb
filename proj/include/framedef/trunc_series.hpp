#pragma once

#include <map>
#include <string>

#include "framedef/errors.hpp"
#include "framedef/sparse_poly.hpp"

namespace framedef {

namespace detail {

template <class C>
bool coeff_is_integral_unit(const C& c) {
    return is_integral_unit(c);
}

}  // namespace detail

/// Power series truncated at total degree `cap`: the quotient of the
/// power-series ring by all monomials of degree > cap.
template <class C>
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(const SparsePoly<C>& poly, unsigned cap) : poly_(poly.truncated(cap)), cap_(cap) {}

    static TruncSeries constant(VarSetPtr vars, C c, unsigned cap) {
        return TruncSeries(SparsePoly<C>::constant(std::move(vars), std::move(c)), cap);
    }
    static TruncSeries variable(VarSetPtr vars, const std::string& name, unsigned cap) {
        return TruncSeries(SparsePoly<C>::variable(std::move(vars), name), cap);
    }

    [[nodiscard]] const SparsePoly<C>& poly() const noexcept { return poly_; }
    [[nodiscard]] unsigned cap() const noexcept { return cap_; }
    [[nodiscard]] const VarSetPtr& vars() const noexcept { return poly_.vars(); }
    [[nodiscard]] bool is_zero() const noexcept { return poly_.is_zero(); }
    [[nodiscard]] C constant_term() const { return poly_.constant_term(); }
    [[nodiscard]] C coefficient_of(Monomial m) const { return poly_.coefficient_of(m); }

    /// Image in the coarser truncation at `lower` <= cap.
    [[nodiscard]] TruncSeries truncated_to(unsigned lower) const {
        if (lower > cap_) throw PreconditionViolation("cannot raise truncation cap");
        return TruncSeries(poly_, lower);
    }

    TruncSeries operator-() const { return TruncSeries(-poly_, cap_, Raw{}); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check(a, b);
        return TruncSeries(a.poly_ + b.poly_, a.cap_, Raw{});
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        check(a, b);
        return TruncSeries(a.poly_ - b.poly_, a.cap_, Raw{});
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check(a, b);
        return TruncSeries(SparsePoly<C>::multiply(a.poly_, b.poly_, a.cap_), a.cap_, Raw{});
    }
    friend TruncSeries operator*(const C& s, const TruncSeries& a) { return TruncSeries(s * a.poly_, a.cap_, Raw{}); }
    TruncSeries& operator+=(const TruncSeries& b) { return *this = *this + b; }
    TruncSeries& operator-=(const TruncSeries& b) { return *this = *this - b; }
    TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.cap_ == b.cap_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    [[nodiscard]] std::string str() const { return poly_.str() + " + O(deg>" + std::to_string(cap_) + ")"; }

private:
    struct Raw {};
    TruncSeries(SparsePoly<C> poly, unsigned cap, Raw) : poly_(std::move(poly)), cap_(cap) {}

    static void check(const TruncSeries& a, const TruncSeries& b) {
        if (a.cap_ != b.cap_) throw IncompatibleRings("truncated series with different caps");
        if (!same_ring(a.vars(), b.vars())) throw IncompatibleRings("truncated series over different variables");
    }

    SparsePoly<C> poly_;
    unsigned cap_ = 0;
};

template <class C>
TruncSeries<C> mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    return a * b;
}

/// Inverse of a series whose constant term is a unit of the coefficient ring's
/// valuation ring, by the geometric series in (1 - a/a0). Throws NotAUnit otherwise.
template <class C>
TruncSeries<C> invert_unit(const TruncSeries<C>& a) {
    C a0 = a.constant_term();
    if (!detail::coeff_is_integral_unit(a0)) throw NotAUnit("constant term is not a unit");
    C inv0 = C(1) / a0;
    const VarSetPtr& vars = a.vars();
    TruncSeries<C> one = TruncSeries<C>::constant(vars, C(1), a.cap());
    TruncSeries<C> u = one - inv0 * a;  // no constant term
    // Horner: 1 + u(1 + u(1 + ...)), cap+1 levels
    TruncSeries<C> r = one;
    for (unsigned k = 0; k < a.cap(); ++k) r = one + u * r;
    return inv0 * r;
}

/// Substitution into a polynomial with series values, all products truncated at `cap`.
template <class C>
TruncSeries<C> substitute(const SparsePoly<C>& a, const std::map<std::string, TruncSeries<C>>& assignment,
                          unsigned cap) {
    std::map<std::string, SubstValue<C>> values;
    VarSetPtr target = a.vars();
    for (const auto& [name, s] : assignment) {
        if (s.cap() < cap) throw IncompatibleRings("substitution value truncated below target cap");
        values.emplace(name, s.poly().truncated(cap));
        target = s.vars();
    }
    auto poly = detail::substitute_with(a, values, target, [cap](const SparsePoly<C>& x, const SparsePoly<C>& y) {
        return SparsePoly<C>::multiply(x, y, cap);
    });
    return TruncSeries<C>(poly, cap);
}

template <class C>
bool is_zero(const TruncSeries<C>& a) {
    return a.is_zero();
}
template <class C>
TruncSeries<C> zero_like(const TruncSeries<C>& a) {
    return TruncSeries<C>(SparsePoly<C>(a.vars()), a.cap());
}
template <class C>
TruncSeries<C> one_like(const TruncSeries<C>& a) {
    return TruncSeries<C>::constant(a.vars(), C(1), a.cap());
}
template <class C>
TruncSeries<C> unit_inverse(const TruncSeries<C>& a) {
    return invert_unit(a);
}
template <class C>
std::string to_canonical(const TruncSeries<C>& a) {
    return a.str();
}

}  // namespace framedef
