#include "framedef/localized.hpp"

#include "framedef/errors.hpp"

namespace framedef {

UPoly::UPoly(std::vector<CycloElem> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(CycloElem c) { return UPoly(std::vector<CycloElem>{std::move(c)}); }

UPoly UPoly::t() { return UPoly({CycloElem(0), CycloElem(1)}); }

UPoly UPoly::linear(CycloElem c0, CycloElem c1) { return UPoly({std::move(c0), std::move(c1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloElem UPoly::eval(const CycloElem& x) const {
    CycloElem r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r = constant(1);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<CycloElem> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CycloElem> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const CycloElem& s, const UPoly& a) {
    std::vector<CycloElem> c = a.c_;
    for (auto& x : c) x = s * x;
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<CycloElem> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {UPoly(), *this};
    std::vector<CycloElem> quot(static_cast<std::size_t>(degree() - dd + 1));
    CycloElem lead_inv = field_inverse(divisor.c_.back());
    for (int k = degree(); k >= dd; --k) {
        const CycloElem& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        CycloElem q = top * lead_inv;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
        }
        quot[static_cast<std::size_t>(k - dd)] = std::move(q);
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::string UPoly::str() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[k].str() + "*t^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

LocalizedPoly::LocalizedPoly(UPoly numerator, UPoly unit, unsigned power)
    : num_(std::move(numerator)), unit_(std::move(unit)), power_(power) {
    if (unit_.is_zero() || !is_integral_unit(unit_.coeff(0))) {
        throw PreconditionViolation("localizing unit must have a constant term of valuation 0");
    }
    normalize();
}

void LocalizedPoly::normalize() {
    if (num_.is_zero()) {
        power_ = 0;
        return;
    }
    if (unit_.degree() == 0) {
        // constant unit: fold it into the numerator
        num_ = field_inverse(unit_.coeff(0)).pow(power_) * num_;
        power_ = 0;
        return;
    }
    while (power_ > 0) {
        auto [q, r] = num_.divmod(unit_);
        if (!r.is_zero()) break;
        num_ = std::move(q);
        --power_;
    }
}

void LocalizedPoly::check(const LocalizedPoly& a, const LocalizedPoly& b) {
    if (a.unit_ != b.unit_) throw IncompatibleRings("localized polynomials with different units");
}

CycloElem LocalizedPoly::eval(const CycloElem& x) const {
    CycloElem u = unit_.eval(x);
    if (u.is_zero()) throw DivisionByZero("localizing unit vanishes at evaluation point");
    return num_.eval(x) * field_inverse(u).pow(power_);
}

LocalizedPoly LocalizedPoly::inverse() const {
    if (num_.is_zero()) throw NotAUnit("zero is not a unit");
    UPoly rest = num_;
    unsigned m = 0;
    if (unit_.degree() > 0) {
        while (true) {
            auto [q, r] = rest.divmod(unit_);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++m;
        }
    }
    if (rest.degree() != 0) throw NotAUnit("element is not a constant times a power of the unit");
    CycloElem c_inv = field_inverse(rest.coeff(0));
    // (c u^m u^-k)^-1 = c^-1 u^(k-m)
    if (power_ >= m) return {c_inv * unit_.pow(power_ - m), unit_, 0};
    return {UPoly::constant(c_inv), unit_, m - power_};
}

bool LocalizedPoly::is_constant(CycloElem* value) const {
    if (num_.is_zero()) {
        if (value) *value = CycloElem();
        return true;
    }
    // numerator = c * unit^power exactly
    UPoly up = unit_.pow(power_);
    if (num_.degree() != up.degree()) return false;
    CycloElem c = num_.coeffs().back() * field_inverse(up.coeffs().back());
    if (c * up != num_) return false;
    if (value) *value = c;
    return true;
}

LocalizedPoly LocalizedPoly::operator-() const { return {-num_, unit_, power_}; }

LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b) {
    LocalizedPoly::check(a, b);
    unsigned k = std::max(a.power_, b.power_);
    UPoly n = a.num_ * a.unit_.pow(k - a.power_) + b.num_ * b.unit_.pow(k - b.power_);
    return {std::move(n), a.unit_, k};
}

LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b) { return a + (-b); }

LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b) {
    LocalizedPoly::check(a, b);
    return {a.num_ * b.num_, a.unit_, a.power_ + b.power_};
}

LocalizedPoly operator*(const CycloElem& s, const LocalizedPoly& a) { return {s * a.num_, a.unit_, a.power_}; }

bool operator==(const LocalizedPoly& a, const LocalizedPoly& b) {
    if (a.unit_ != b.unit_) return false;
    return a.num_ * a.unit_.pow(b.power_) == b.num_ * b.unit_.pow(a.power_);
}

std::string LocalizedPoly::str() const {
    std::string s = "(" + num_.str() + ")";
    if (power_ > 0) s += "*(" + unit_.str() + ")^-" + std::to_string(power_);
    return s;
}

}  // namespace framedef
