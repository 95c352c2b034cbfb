#include "framedef/finite_ring.hpp"

#include "framedef/errors.hpp"

namespace framedef {

FiniteRing FiniteRing::integers_mod(unsigned n) {
    if (n < 2 || n > 64) throw PreconditionViolation("modulus out of supported range 2..64");
    return FiniteRing(Kind::IntegersMod, n);
}

std::string FiniteRing::name() const {
    if (kind_ == Kind::DualF2) return "F2[e]/(e^2)";
    return "Z/" + std::to_string(size_);
}

bool FiniteRing::local_residue_f2() const noexcept {
    if (kind_ == Kind::DualF2) return true;
    return (size_ & (size_ - 1)) == 0;
}

unsigned FiniteRing::add(unsigned a, unsigned b) const noexcept {
    if (kind_ == Kind::DualF2) return a ^ b;
    return (a + b) % size_;
}

unsigned FiniteRing::neg(unsigned a) const noexcept {
    if (kind_ == Kind::DualF2) return a;
    return (size_ - a) % size_;
}

unsigned FiniteRing::mul(unsigned a, unsigned b) const noexcept {
    if (kind_ == Kind::DualF2) {
        // (a0 + a1 e)(b0 + b1 e) = a0 b0 + (a0 b1 + a1 b0) e
        unsigned a0 = a & 1U, a1 = a >> 1, b0 = b & 1U, b1 = b >> 1;
        return (a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1);
    }
    return (a * b) % size_;
}

unsigned FiniteRing::residue(unsigned a) const noexcept { return a & 1U; }

bool FiniteRing::is_unit(unsigned a) const noexcept {
    for (unsigned b = 0; b < size_; ++b) {
        if (mul(a, b) == 1) return true;
    }
    return false;
}

unsigned FiniteRing::inverse(unsigned a) const {
    for (unsigned b = 0; b < size_; ++b) {
        if (mul(a, b) == 1) return b;
    }
    throw NotAUnit("element " + std::to_string(a) + " of " + name() + " is not a unit");
}

FiniteElem::FiniteElem(FiniteRing ring, unsigned v) : ring_(ring), v_(v) {
    if (v >= ring.size()) throw PreconditionViolation("finite ring element out of range");
}

FiniteElem operator+(const FiniteElem& a, const FiniteElem& b) {
    if (!(a.ring_ == b.ring_)) throw IncompatibleRings("finite ring elements from different rings");
    return {a.ring_, a.ring_.add(a.v_, b.v_)};
}

FiniteElem operator*(const FiniteElem& a, const FiniteElem& b) {
    if (!(a.ring_ == b.ring_)) throw IncompatibleRings("finite ring elements from different rings");
    return {a.ring_, a.ring_.mul(a.v_, b.v_)};
}

std::string to_canonical(const FiniteElem& a) {
    if (a.ring().kind() == FiniteRing::Kind::DualF2) {
        return std::to_string(a.value() & 1U) + "+" + std::to_string(a.value() >> 1) + "e";
    }
    return std::to_string(a.value());
}

std::vector<Mat2<FiniteElem>> all_matrices(const FiniteRing& ring) {
    const unsigned n = ring.size();
    std::vector<Mat2<FiniteElem>> out;
    out.reserve(static_cast<std::size_t>(n) * n * n * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned d = 0; d < n; ++d) out.emplace_back(FiniteElem(ring, a), FiniteElem(ring, b),
                                                                  FiniteElem(ring, c), FiniteElem(ring, d));
    return out;
}

UnipotentFiber unipotent_fiber(const FiniteRing& ring) {
    if (!ring.local_residue_f2()) throw PreconditionViolation(ring.name() + " is not local with residue field F2");
    auto in_fiber = [&](const Mat2<FiniteElem>& m) {
        return ring.residue(m.a11.value()) == 1 && ring.residue(m.a22.value()) == 1 &&
               ring.residue(m.a21.value()) == 0 && ring.is_unit(m.det().value());
    };
    std::vector<Mat2<FiniteElem>> fiber;
    for (auto& m : all_matrices(ring)) {
        if (in_fiber(m)) fiber.push_back(std::move(m));
    }
    UnipotentFiber r;
    r.order = fiber.size();
    r.power_of_two = r.order != 0 && (r.order & (r.order - 1)) == 0;
    r.closed_under_inverses = true;
    for (const auto& m : fiber) {
        if (!in_fiber(m.inverse()) || m * m.inverse() != Mat2<FiniteElem>::identity(m.a11)) {
            r.closed_under_inverses = false;
        }
    }
    r.closed_under_products = true;
    for (const auto& a : fiber) {
        for (const auto& b : fiber) {
            if (!in_fiber(a * b)) {
                r.closed_under_products = false;
                return r;
            }
        }
    }
    return r;
}

std::uint64_t unipotent_fiber_order(const FiniteRing& ring) { return unipotent_fiber(ring).order; }

}  // namespace framedef
