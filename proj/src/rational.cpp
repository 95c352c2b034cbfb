#include "framedef/rational.hpp"

#include <limits>

#include "framedef/errors.hpp"

namespace framedef {

namespace {

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_small(__int128 v) { return v >= -static_cast<__int128>(kSmallMax) && v <= kSmallMax; }

mpz_class to_mpz(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

Rational::Rational(long long n) noexcept : num_(n), den_(1) {
    if (n == std::numeric_limits<long long>::min()) {
        big_ = std::make_unique<mpq_class>(to_mpz(n));
        num_ = 0;
    }
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    assign_small(n, d);
}

Rational::Rational(const mpq_class& q) { assign_from(q); }

Rational::Rational(const mpz_class& z) { assign_from(mpq_class(z)); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

void Rational::assign_small(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
    }
    if (n == 0) d = 1;
    if (fits_small(n) && fits_small(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    // Split the 128-bit values through GMP.
    auto from128 = [](__int128 v) {
        bool neg = v < 0;
        u128 m = abs128(v);
        mpz_class hi, lo;
        mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(m >> 64));
        mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(m & ~static_cast<std::uint64_t>(0)));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    };
    mpq_class q(from128(n), from128(d));
    q.canonicalize();
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::assign_from(mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
        long nl = mpz_get_si(n.get_mpz_t());
        long dl = mpz_get_si(d.get_mpz_t());
        if (nl != std::numeric_limits<long>::min()) {
            num_ = nl;
            den_ = dl;
            big_.reset();
            return;
        }
    }
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

long Rational::two_adic_valuation() const {
    if (is_zero()) throw DivisionByZero("2-adic valuation of zero");
    if (!big_) {
        auto n = static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_);
        auto d = static_cast<std::uint64_t>(den_);
        return static_cast<long>(__builtin_ctzll(n)) - static_cast<long>(__builtin_ctzll(d));
    }
    mpz_class n = abs(big_->get_num());
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0)) -
           static_cast<long>(mpz_scan1(big_->get_den_mpz_t(), 0));
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return fraction_str();
}

std::string Rational::fraction_str() const { return numerator().get_str() + "/" + denominator().get_str(); }

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return Rational(mpq_class(-*big_));
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            __int128 s = static_cast<__int128>(num_) + rhs.num_;
            if (fits_small(s)) {
                num_ = static_cast<std::int64_t>(s);
                return *this;
            }
        }
        __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * rhs.den_;
        assign_small(n, d);
        return *this;
    }
    assign_from(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            __int128 p = static_cast<__int128>(num_) * rhs.num_;
            if (fits_small(p)) {
                num_ = static_cast<std::int64_t>(p);
                return *this;
            }
        }
        assign_small(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
        return *this;
    }
    assign_from(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational");
    if (!big_) {
        Rational r;
        r.assign_small(den_, num_);
        return r;
    }
    return Rational(mpq_class(1 / *big_));
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: big values never fit the inline range
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

}  // namespace framedef
