#include "framedef/points.hpp"

#include "framedef/errors.hpp"

namespace framedef {

namespace {

using M = Mat2<CycloElem>;

const CycloElem kZeta = CycloElem::zeta8();
const CycloElem kI = CycloElem::imag();

bool positive_val(const CycloElem& c) { return val2(c).positive(); }

bool reduces_to(const M& a, const CycloElem& off) {
    return positive_val(a.a11 - CycloElem(1)) && positive_val(a.a12 - off) && positive_val(a.a21) &&
           positive_val(a.a22 - CycloElem(1));
}

}  // namespace

std::string family_name(PointFamily f) { return f == PointFamily::punkte1 ? "punkte1" : "punkte2"; }

PointFamily parse_point_family(const std::string& s) {
    if (s == "punkte1") return PointFamily::punkte1;
    if (s == "punkte2") return PointFamily::punkte2;
    throw PreconditionViolation("unknown point family " + s);
}

FramedPoint make_point(PointFamily family, int n, const CycloElem& lambda, const CycloElem& mu,
                       const CycloElem& kappa) {
    if (n < 1 || n > 4) throw PreconditionViolation("point index must be in 1..4");
    DeformParams{lambda, mu, kappa}.validate();
    FramedPoint p;
    p.lambda = lambda;
    p.mu = mu;
    p.kappa = kappa;
    p.family = family;
    p.n = n;
    p.x = M(1, lambda, 0, -1);
    if (family == PointFamily::punkte1) {
        if (!mu.is_zero()) throw PreconditionViolation("punkte1 requires mu = 0");
        static const CycloElem d11[] = {1, 1, kZeta, kZeta};
        static const CycloElem d22[] = {kZeta, kI, kI, kZeta.pow(3)};
        p.z = M(d11[n - 1], kappa, 0, d22[n - 1]);
        p.y = p.z * p.z;
    } else {
        if (mu.is_zero()) throw PreconditionViolation("punkte2 requires mu to be a unit");
        static const CycloElem d11[] = {1, 1, kI, kI};
        static const CycloElem d22[] = {kI, -1, -1, -kI};
        p.y = M(d11[n - 1], mu, 0, d22[n - 1]);
        M one = M::identity(CycloElem(1));
        p.z = one + (kappa * field_inverse(mu)) * (p.y - one);
    }
    return p;
}

PointReport verify_point(const FramedPoint& p) {
    PointReport r;
    M one = M::identity(CycloElem(1));
    r.relation_ok = group_word(p.x, p.y, p.z) == one;
    DeformParams params = p.params();
    auto values = point_values(params, p.x, p.y, p.z);
    r.relation_via_framed = relation_word_at(params, values) == one;
    r.reduction_ok = reduces_to(p.x, p.lambda) && reduces_to(p.y, p.mu) && reduces_to(p.z, p.kappa);
    r.y4_identity = p.y.pow(4) == one;
    r.commutator_trivial = commutator(p.y, p.z) == one && commute_criterion(p.y, p.z);

    r.eps1 = p.x.a11 * p.y.a11 * p.y.a11;
    r.eps2 = p.x.a22 * p.y.a22 * p.y.a22;
    CycloElem dy = p.y.det();
    r.delta = p.x.det() * dy * dy;
    if (p.family == PointFamily::punkte1) {
        r.shortcut_ok = r.eps1 == p.z.a11.pow(4) && r.eps2 == -p.z.a22.pow(4);
    } else {
        r.shortcut_ok = r.eps1 == p.y.a11 * p.y.a11 && r.eps2 == -(p.y.a22 * p.y.a22);
    }

    // Exact triangular relation pieces evaluated at the point.
    Poly x11 = Poly::constant(matrix_vars(), 1) + Poly::variable(matrix_vars(), "x11");
    Poly x22 = Poly::constant(matrix_vars(), 1) + Poly::variable(matrix_vars(), "x22");
    Poly y11 = Poly::constant(matrix_vars(), 1) + Poly::variable(matrix_vars(), "y11");
    Poly y22 = Poly::constant(matrix_vars(), 1) + Poly::variable(matrix_vars(), "y22");
    Poly z22 = Poly::constant(matrix_vars(), 1) + Poly::variable(matrix_vars(), "z22");
    Poly p11 = x11 * x11 * y11.pow(4);
    Poly p22 = x22 * x22 * y22.pow(4);
    Poly cleared = triangular_q(params) * y22 * z22 + p11 * triangular_n(params);
    r.triangular_vanishes = evaluate(p11, values) == CycloElem(1) && evaluate(p22, values) == CycloElem(1) &&
                            evaluate(cleared, values).is_zero();
    try {
        r.schnitt_case = schnitt_case(p);
    } catch (const PreconditionViolation&) {
        r.schnitt_case = 0;
    }
    return r;
}

int schnitt_case(const FramedPoint& p) {
    const M& x = p.x;
    const M& y = p.y;
    const M& z = p.z;
    bool on_locus = x.a11 == CycloElem(1) && x.a12 == p.lambda && (x.a21 + x.trace()).is_zero() && y.a21.is_zero() &&
                    z.a21.is_zero();
    if (!on_locus) throw PreconditionViolation("point is not on the upper-triangular locus");
    if (y.a11.pow(4) != CycloElem(1) || y.a22.pow(4) != CycloElem(1)) {
        throw PreconditionViolation("diagonal of Y is not a fourth root of unity");
    }
    // y11 - y22 = y~11 - y~22, kappa + z12 = z~12, mu + y12 = y~12, z11 - z22 = z~11 - z~22
    CycloElem dy = y.a11 - y.a22;
    if (!dy.is_zero() && dy * z.a12 == y.a12 * (z.a11 - z.a22)) return 1;
    if (dy.is_zero() && p.mu.is_zero() && (y.a12 - p.mu).is_zero()) return 2;
    if (dy.is_zero() && z.a11 == CycloElem(5) * z.a22) return 3;
    throw PreconditionViolation("none of the three locus conditions holds");
}

}  // namespace framedef
