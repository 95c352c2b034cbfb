#include "framedef/cyclo.hpp"

#include "framedef/errors.hpp"

namespace framedef {

const Rational& Val::value() const {
    if (infinite_) throw std::domain_error("valuation is +infinity");
    return value_;
}

std::string Val::str() const { return infinite_ ? "inf" : value_.str(); }

Val operator+(const Val& a, const Val& b) {
    if (a.infinite_ || b.infinite_) return Val::infinity();
    return Val(a.value_ + b.value_);
}

bool operator==(const Val& a, const Val& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

bool operator<(const Val& a, const Val& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
}

Val min(const Val& a, const Val& b) { return b < a ? b : a; }

bool CycloElem::is_zero() const noexcept {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool CycloElem::is_rational() const noexcept { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

CycloElem CycloElem::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

CycloElem& CycloElem::operator+=(const CycloElem& rhs) {
    for (std::size_t k = 0; k < 4; ++k) {
        if (!rhs.c_[k].is_zero()) c_[k] += rhs.c_[k];
    }
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& rhs) {
    for (std::size_t k = 0; k < 4; ++k) {
        if (!rhs.c_[k].is_zero()) c_[k] -= rhs.c_[k];
    }
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& rhs) {
    if (rhs.is_rational()) {
        if (rhs.c_[0].is_one()) return *this;
        for (auto& c : c_) {
            if (!c.is_zero()) c *= rhs.c_[0];
        }
        return *this;
    }
    if (is_rational()) {
        Rational s = c_[0];
        *this = rhs;
        for (auto& c : c_) {
            if (!c.is_zero()) c *= s;
        }
        return *this;
    }
    std::array<Rational, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            if (rhs.c_[j].is_zero()) continue;
            Rational p = c_[i] * rhs.c_[j];
            // w^4 = -1
            if (i + j < 4) {
                out[i + j] += p;
            } else {
                out[i + j - 4] -= p;
            }
        }
    }
    c_ = std::move(out);
    return *this;
}

CycloElem& CycloElem::operator/=(const CycloElem& rhs) { return *this *= field_inverse(rhs); }

CycloElem CycloElem::pow(unsigned e) const {
    CycloElem result(1);
    CycloElem base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::string CycloElem::str() const {
    return "[" + c_[0].fraction_str() + "," + c_[1].fraction_str() + "," + c_[2].fraction_str() + "," +
           c_[3].fraction_str() + "]";
}

std::ostream& operator<<(std::ostream& os, const CycloElem& a) { return os << a.str(); }

namespace {

// Gaussian rational x + y i.
struct Gauss {
    Rational x, y;
};

Gauss gmul(const Gauss& a, const Gauss& b) { return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x}; }

// Write a = alpha + w beta with alpha, beta in Q(i), using w^2 = i.
void split(const CycloElem& a, Gauss& alpha, Gauss& beta) {
    alpha = {a[0], a[2]};
    beta = {a[1], a[3]};
}

// alpha^2 - i beta^2 = a * sigma(a), where sigma: w -> -w fixes Q(i).
Gauss relative_norm(const Gauss& alpha, const Gauss& beta) {
    Gauss a2 = gmul(alpha, alpha);
    Gauss b2 = gmul(beta, beta);
    // i * (u + v i) = -v + u i
    return {a2.x + b2.y, a2.y - b2.x};
}

}  // namespace

Rational norm(const CycloElem& a) {
    Gauss alpha, beta;
    split(a, alpha, beta);
    Gauss g = relative_norm(alpha, beta);
    return g.x * g.x + g.y * g.y;
}

CycloElem field_inverse(const CycloElem& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta8)");
    if (a.is_rational()) return {a[0].inverse()};
    Gauss alpha, beta;
    split(a, alpha, beta);
    Gauss g = relative_norm(alpha, beta);
    Rational n = g.x * g.x + g.y * g.y;
    // a^{-1} = sigma(a) * conj(g) / n with sigma(a) = alpha - w beta
    Gauss gc{g.x, -g.y};
    Gauss p = gmul(alpha, gc);
    Gauss q = gmul(beta, gc);
    Rational ninv = n.inverse();
    return {p.x * ninv, -q.x * ninv, p.y * ninv, -q.y * ninv};
}

Val val2(const CycloElem& a) {
    if (a.is_zero()) return Val::infinity();
    return Val(Rational(norm(a).two_adic_valuation(), 4));
}

}  // namespace framedef
