#pragma once

#include <string>

#include "framedef/deform.hpp"

namespace framedef {

/// punkte1: mu = 0, Y = Z^2 with Z diagonal in roots of unity.
/// punkte2: mu a unit, Z = 1 + (kappa/mu)(Y - 1).
enum class PointFamily { punkte1, punkte2 };
std::string family_name(PointFamily f);
PointFamily parse_point_family(const std::string& s);

struct FramedPoint {
    Mat2<CycloElem> x, y, z;
    CycloElem lambda, mu, kappa;
    PointFamily family = PointFamily::punkte1;
    int n = 1;

    [[nodiscard]] DeformParams params(unsigned cap = 6) const { return {lambda, mu, kappa, cap}; }
};

/// Throws PreconditionViolation on a parameter mismatch (punkte1 needs mu = 0,
/// punkte2 needs mu a unit) or n outside 1..4.
FramedPoint make_point(PointFamily family, int n, const CycloElem& lambda, const CycloElem& mu,
                       const CycloElem& kappa);

struct PointReport {
    bool relation_ok = false;        // X^2 Y^4 [Y, Z] = I
    bool relation_via_framed = false;  // same word through the framed polynomial matrices
    bool reduction_ok = false;       // X, Y, Z reduce to the residual matrices
    bool y4_identity = false;        // Y^4 = I
    bool commutator_trivial = false;  // [Y, Z] = I, and the minor criterion agrees
    bool shortcut_ok = false;        // eps values agree with the family's shortcut formulas
    bool triangular_vanishes = false;  // f11, f22 and the cleared f12 vanish at the point
    CycloElem eps1, eps2, delta;
    int schnitt_case = 0;
    [[nodiscard]] bool all() const {
        return relation_ok && relation_via_framed && reduction_ok && y4_identity && commutator_trivial &&
               shortcut_ok && triangular_vanishes && schnitt_case != 0;
    }
};

PointReport verify_point(const FramedPoint& p);

/// Which of the three conditions on the upper-triangular locus holds, checked
/// in order 1, 2, 3. Throws PreconditionViolation when the point is not on the
/// locus or (1+y11)^4 = (1+y22)^4 = 1 fails, and when no case applies.
int schnitt_case(const FramedPoint& p);

}  // namespace framedef
