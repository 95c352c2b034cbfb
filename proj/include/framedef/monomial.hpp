#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace framedef {

/// Ordered list of variable names shared by all polynomials of one ring instance.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    /// Index of a variable; throws UnboundVariable if absent.
    [[nodiscard]] std::size_t index_of(const std::string& name) const;
    [[nodiscard]] bool contains(const std::string& name) const noexcept;

    friend bool operator==(const VarSet& a, const VarSet& b) noexcept { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names);

/// The twelve matrix-entry variables x11 .. z22, shared singleton.
const VarSetPtr& matrix_vars();

/// Same ring instance (pointer-identical or equal name lists).
bool same_ring(const VarSetPtr& a, const VarSetPtr& b) noexcept;

/// Exponent vector packed five bits per variable, variable 0 in the most
/// significant field, so integer order is lexicographic order. Up to twelve
/// variables with exponents at most 31.
class Monomial {
public:
    static constexpr unsigned kBits = 5;
    static constexpr unsigned kMaxVars = 12;
    static constexpr unsigned kMaxExp = (1U << kBits) - 1;

    constexpr Monomial() noexcept = default;
    constexpr explicit Monomial(std::uint64_t bits) noexcept : bits_(bits) {}

    static Monomial from_exponents(std::span<const unsigned> exps);
    static Monomial variable(std::size_t index, unsigned exp = 1);

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] unsigned exponent(std::size_t index) const noexcept {
        return static_cast<unsigned>(bits_ >> shift(index)) & kMaxExp;
    }
    [[nodiscard]] unsigned degree() const noexcept;
    [[nodiscard]] std::vector<unsigned> exponents(std::size_t nvars) const;
    [[nodiscard]] bool is_one() const noexcept { return bits_ == 0; }

    /// Product; the caller guarantees no field overflows (see SparsePoly::max_exponents).
    friend constexpr Monomial operator*(Monomial a, Monomial b) noexcept { return Monomial(a.bits_ + b.bits_); }
    friend constexpr bool operator==(Monomial a, Monomial b) noexcept { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Monomial a, Monomial b) noexcept { return a.bits_ != b.bits_; }
    friend constexpr bool operator<(Monomial a, Monomial b) noexcept { return a.bits_ < b.bits_; }

    [[nodiscard]] bool divides(Monomial other) const noexcept;
    /// other / this; requires divides(other).
    [[nodiscard]] Monomial quotient_of(Monomial other) const noexcept { return Monomial(other.bits_ - bits_); }
    [[nodiscard]] Monomial lcm(Monomial other) const noexcept;
    [[nodiscard]] bool coprime(Monomial other) const noexcept;

    /// "x11^2*y12^1", or "1" for the empty monomial.
    [[nodiscard]] std::string str(const VarSet& vars) const;

private:
    static constexpr unsigned shift(std::size_t index) noexcept {
        return static_cast<unsigned>((kMaxVars - 1 - index) * kBits);
    }

    std::uint64_t bits_ = 0;
};

}  // namespace framedef
