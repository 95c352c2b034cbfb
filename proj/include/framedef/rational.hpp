#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace framedef {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in a machine word are stored
/// inline; anything larger lives in a GMP rational. The representation is
/// canonical (a value is demoted back to the inline form whenever it fits),
/// so equality is a field-by-field comparison.
class Rational {
public:
    Rational() noexcept = default;
    Rational(long long n) noexcept;  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "n" or "n/d".
    static Rational parse(const std::string& text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const noexcept;
    [[nodiscard]] int sign() const noexcept;

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;

    /// 2-adic valuation; the caller must ensure the value is nonzero.
    [[nodiscard]] long two_adic_valuation() const;

    /// "num/den", or just "num" for integers.
    [[nodiscard]] std::string str() const;
    /// Always "num/den".
    [[nodiscard]] std::string fraction_str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    [[nodiscard]] Rational inverse() const;

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept;
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void assign_from(mpq_class q);
    void assign_small(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace framedef
