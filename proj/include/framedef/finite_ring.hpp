#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framedef/mat2.hpp"

namespace framedef {

/// Small finite commutative ring: Z/n, or the dual numbers F2[e]/(e^2).
class FiniteRing {
public:
    enum class Kind { IntegersMod, DualF2 };

    static FiniteRing integers_mod(unsigned n);
    static FiniteRing dual_f2() { return FiniteRing(Kind::DualF2, 4); }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] unsigned size() const noexcept { return size_; }
    [[nodiscard]] std::string name() const;

    /// Local with residue field F2: Z/2^k or F2[e]/(e^2).
    [[nodiscard]] bool local_residue_f2() const noexcept;

    // Elements are encoded as 0..size-1; for the dual numbers a + b e is a + 2b.
    [[nodiscard]] unsigned add(unsigned a, unsigned b) const noexcept;
    [[nodiscard]] unsigned neg(unsigned a) const noexcept;
    [[nodiscard]] unsigned mul(unsigned a, unsigned b) const noexcept;
    /// Image in F2 when local_residue_f2().
    [[nodiscard]] unsigned residue(unsigned a) const noexcept;
    [[nodiscard]] bool is_unit(unsigned a) const noexcept;
    /// Throws NotAUnit.
    [[nodiscard]] unsigned inverse(unsigned a) const;

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) noexcept {
        return a.kind_ == b.kind_ && a.size_ == b.size_;
    }

private:
    FiniteRing(Kind k, unsigned n) : kind_(k), size_(n) {}
    Kind kind_;
    unsigned size_;
};

/// Element of a FiniteRing; carries its ring by value.
class FiniteElem {
public:
    FiniteElem(FiniteRing ring, unsigned v);

    [[nodiscard]] const FiniteRing& ring() const noexcept { return ring_; }
    [[nodiscard]] unsigned value() const noexcept { return v_; }

    FiniteElem operator-() const { return {ring_, ring_.neg(v_)}; }
    friend FiniteElem operator+(const FiniteElem& a, const FiniteElem& b);
    friend FiniteElem operator-(const FiniteElem& a, const FiniteElem& b) { return a + (-b); }
    friend FiniteElem operator*(const FiniteElem& a, const FiniteElem& b);
    friend bool operator==(const FiniteElem& a, const FiniteElem& b) noexcept {
        return a.ring_ == b.ring_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FiniteElem& a, const FiniteElem& b) noexcept { return !(a == b); }

private:
    FiniteRing ring_;
    unsigned v_;
};

inline bool is_zero(const FiniteElem& a) { return a.value() == 0; }
inline FiniteElem zero_like(const FiniteElem& a) { return {a.ring(), 0}; }
inline FiniteElem one_like(const FiniteElem& a) { return {a.ring(), 1}; }
inline FiniteElem unit_inverse(const FiniteElem& a) { return {a.ring(), a.ring().inverse(a.value())}; }
std::string to_canonical(const FiniteElem& a);

/// Every 2x2 matrix over the ring, size^4 of them, in a fixed order.
std::vector<Mat2<FiniteElem>> all_matrices(const FiniteRing& ring);

/// Result of enumerating the matrices of GL2(A) reducing to (1 *; 0 1).
struct UnipotentFiber {
    std::uint64_t order = 0;
    bool closed_under_products = false;
    bool closed_under_inverses = false;
    bool power_of_two = false;
};

/// Exhaustive enumeration; requires local_residue_f2(), else PreconditionViolation.
UnipotentFiber unipotent_fiber(const FiniteRing& ring);

/// Order of the fiber subgroup.
std::uint64_t unipotent_fiber_order(const FiniteRing& ring);

}  // namespace framedef
