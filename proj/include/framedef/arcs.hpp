#pragma once

#include <string>
#include <vector>

#include "framedef/localized.hpp"
#include "framedef/mat2.hpp"
#include "framedef/points.hpp"

namespace framedef {

/// bogen1: unit a(t) = 1 + (zeta8 - 1) t, mu = 0, Y = Z^2.
/// bogen2: unit b(t) = 1 + (i - 1) t, mu a unit, Z = 1 + (kappa/mu)(Y - 1).
enum class ArcFamily { bogen1, bogen2 };
std::string arc_family_name(ArcFamily f);
ArcFamily parse_arc_family(const std::string& s);

/// The localizing unit of a family.
UPoly arc_unit(ArcFamily f);

struct Arc {
    Mat2<LocalizedPoly> x, y, z;
    UPoly unit;
    ArcFamily family = ArcFamily::bogen1;
    int n = 1;
    CycloElem lambda, mu, kappa;

    /// Point family whose points the arc connects.
    [[nodiscard]] PointFamily point_family() const {
        return family == ArcFamily::bogen1 ? PointFamily::punkte1 : PointFamily::punkte2;
    }
    /// Numeric triple at t = value.
    [[nodiscard]] FramedPoint at(const CycloElem& t, int index) const;
};

/// Exact matrices from the family's definition, with the lambda = 0 and
/// lambda != 0 forms of X. Throws PreconditionViolation on a parameter mismatch.
Arc make_arc(ArcFamily family, int n, const CycloElem& lambda, const CycloElem& mu, const CycloElem& kappa);

/// Finite expansion plus analytic tail bound for an entry p(t) u(t)^-k.
struct NilpotenceCertificate {
    unsigned degree_checked = 0;          // M = deg p + ceil(1/w)
    Val min_valuation = Val::infinity();  // over the expansion coefficients of degree 0..M
    Val tail_bound = Val::infinity();     // lower bound for every degree > M
    bool certified = false;
};

/// Requires numerator coefficients of valuation >= 0 and a unit 1 + c t with
/// w = v(c) > 0; throws PreconditionViolation otherwise.
NilpotenceCertificate nilpotence_certificate(const LocalizedPoly& entry);

/// First coefficients of the power series of an entry around t = 0.
std::vector<CycloElem> expand_series(const LocalizedPoly& entry, unsigned degree);

struct ArcReport {
    bool relation_ok = false;       // X^2 Y^4 [Y, Z] = I
    bool power_identities = false;  // X^2 = u^-e I, Y^4 = u^e I (and Z^8 = a^8 I for bogen1)
    bool commutator_ok = false;     // [Y, Z] = I directly and by the minor criterion
    bool start_matches = false;     // t = 0 gives point n
    bool end_matches = false;       // t = 1 gives point n + 2
    bool delta_constant = false;    // delta(t) is the constant +1 (n = 1) or -1 (n = 2)
    bool nilpotent = false;         // every entry of X - base, Y - base, Z - base certified
    CycloElem delta;
    int start_point = 0, end_point = 0;
    std::vector<NilpotenceCertificate> certificates;  // X, Y, Z entries in row-major order
    [[nodiscard]] bool all() const {
        return relation_ok && power_identities && commutator_ok && start_matches && end_matches && delta_constant &&
               nilpotent;
    }
};

ArcReport verify_arc(const Arc& arc);

/// (1 - 6t^2 + 4t^3)^2 + t^2 (1-t)^2 (2+4t)(6-4t) == 1 in Q[t].
bool arc_polynomial_identity();

/// Ordered arcs whose consecutive end and start points agree.
struct Chain {
    std::vector<Arc> arcs;
};

/// True when each arc's value at t = 1 equals the next arc's value at t = 0.
bool validate_chain(const Chain& chain);

}  // namespace framedef
