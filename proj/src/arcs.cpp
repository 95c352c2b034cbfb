#include "framedef/arcs.hpp"

#include "framedef/errors.hpp"

namespace framedef {

namespace {

using LM = Mat2<LocalizedPoly>;

const CycloElem kZeta = CycloElem::zeta8();
const CycloElem kI = CycloElem::imag();

UPoly lin(const CycloElem& c0, const CycloElem& c1) { return UPoly::linear(c0, c1); }

/// p = 1 - 6t^2 + 4t^3, q = t(1-t)(2+4t), r = t(1-t)(6-4t)
UPoly arc_p() { return UPoly({1, 0, -6, 4}); }
UPoly arc_q() { return UPoly::t() * lin(1, -1) * lin(2, 4); }
UPoly arc_r() { return UPoly::t() * lin(1, -1) * lin(6, -4); }

Mat2<CycloElem> eval_matrix(const LM& m, const CycloElem& t) {
    auto ev = [&](const LocalizedPoly& e) { return e.eval(t); };
    return m.map(ev);
}

/// Ceiling of 1/w for a positive rational w.
unsigned ceil_inverse(const Rational& w) {
    mpz_class num = w.denominator(), den = w.numerator();
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return static_cast<unsigned>(q.get_ui());
}

}  // namespace

std::string arc_family_name(ArcFamily f) { return f == ArcFamily::bogen1 ? "bogen1" : "bogen2"; }

ArcFamily parse_arc_family(const std::string& s) {
    if (s == "bogen1") return ArcFamily::bogen1;
    if (s == "bogen2") return ArcFamily::bogen2;
    throw PreconditionViolation("unknown arc family " + s);
}

UPoly arc_unit(ArcFamily f) {
    return f == ArcFamily::bogen1 ? lin(1, kZeta - CycloElem(1)) : lin(1, kI - CycloElem(1));
}

FramedPoint Arc::at(const CycloElem& t, int index) const {
    FramedPoint p;
    p.x = eval_matrix(x, t);
    p.y = eval_matrix(y, t);
    p.z = eval_matrix(z, t);
    p.lambda = lambda;
    p.mu = mu;
    p.kappa = kappa;
    p.family = point_family();
    p.n = index;
    return p;
}

Arc make_arc(ArcFamily family, int n, const CycloElem& lambda, const CycloElem& mu, const CycloElem& kappa) {
    if (n != 1 && n != 2) throw PreconditionViolation("arc index must be 1 or 2");
    DeformParams{lambda, mu, kappa}.validate();
    if (family == ArcFamily::bogen1 && !mu.is_zero()) throw PreconditionViolation("bogen1 requires mu = 0");
    if (family == ArcFamily::bogen2 && mu.is_zero()) throw PreconditionViolation("bogen2 requires mu to be a unit");
    Arc arc;
    arc.family = family;
    arc.n = n;
    arc.lambda = lambda;
    arc.mu = mu;
    arc.kappa = kappa;
    arc.unit = arc_unit(family);
    const UPoly& u = arc.unit;
    auto L = [&](const UPoly& p, unsigned k = 0) { return LocalizedPoly(p, u, k); };
    auto C = [&](const CycloElem& c) { return LocalizedPoly(UPoly::constant(c), u); };
    // X carries u^-e1 on the diagonal and u^-e2 = u^-2e1 below it.
    const unsigned e1 = family == ArcFamily::bogen1 ? 4 : 2;
    if (lambda.is_zero()) {
        arc.x = LM(L(arc_p(), e1), L(arc_q(), e1), L(arc_r(), e1), L(-arc_p(), e1));
    } else {
        UPoly d = lin(1, -2);
        UPoly below = CycloElem(4) * field_inverse(lambda) * (UPoly::t() * lin(1, -1));
        arc.x = LM(L(d, e1), C(lambda), L(below, 2 * e1), L(-d, e1));
    }
    LM one = LM::identity(C(1));
    if (family == ArcFamily::bogen1) {
        CycloElem d22 = n == 1 ? kZeta : kI;
        arc.z = LM(L(u), C(kappa), C(0), L(d22 * u));
        arc.y = arc.z * arc.z;
    } else {
        CycloElem d22 = n == 1 ? kI : CycloElem(-1);
        arc.y = LM(L(u), C(mu), C(0), L(d22 * u));
        arc.z = one + C(kappa * field_inverse(mu)) * (arc.y - one);
    }
    return arc;
}

std::vector<CycloElem> expand_series(const LocalizedPoly& entry, unsigned degree) {
    const UPoly& u = entry.unit();
    CycloElem u0_inv = field_inverse(u.coeff(0));
    // coefficients of u^-1 by the recursion u * g = 1
    std::vector<CycloElem> g(degree + 1);
    g[0] = u0_inv;
    for (unsigned d = 1; d <= degree; ++d) {
        CycloElem s;
        for (int j = 1; j <= u.degree() && static_cast<unsigned>(j) <= d; ++j) s += u.coeff(static_cast<std::size_t>(j)) * g[d - static_cast<unsigned>(j)];
        g[d] = -(s * u0_inv);
    }
    auto conv = [degree](const std::vector<CycloElem>& a, const std::vector<CycloElem>& b) {
        std::vector<CycloElem> c(degree + 1);
        for (unsigned i = 0; i <= degree; ++i) {
            if (i >= a.size() || a[i].is_zero()) continue;
            for (unsigned j = 0; i + j <= degree && j < b.size(); ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    std::vector<CycloElem> s(entry.numerator().coeffs().begin(), entry.numerator().coeffs().end());
    s.resize(degree + 1);
    for (unsigned k = 0; k < entry.power(); ++k) s = conv(s, g);
    return s;
}

NilpotenceCertificate nilpotence_certificate(const LocalizedPoly& entry) {
    NilpotenceCertificate cert;
    if (entry.is_zero()) {
        cert.certified = true;
        return cert;
    }
    const UPoly& u = entry.unit();
    const UPoly& p = entry.numerator();
    Val w = u.degree() >= 1 ? val2(u.coeff(1)) : Val::infinity();
    if (u.degree() > 1 || u.coeff(0) != CycloElem(1) || (entry.power() > 0 && !(w > Val(Rational(0))))) {
        throw PreconditionViolation("unit must be 1 + c t with v(c) > 0");
    }
    Val min_num = Val::infinity();
    for (const auto& c : p.coeffs()) min_num = min(min_num, val2(c));
    if (min_num < Val(Rational(0))) throw PreconditionViolation("numerator has a non-integral coefficient");

    const auto deg_p = static_cast<unsigned>(p.degree());
    if (entry.power() == 0 || w.is_infinite()) {
        // a polynomial: the expansion is finite
        cert.degree_checked = deg_p;
    } else {
        cert.degree_checked = deg_p + ceil_inverse(w.value());
    }
    std::vector<CycloElem> s = expand_series(entry, cert.degree_checked);
    for (const auto& c : s) cert.min_valuation = min(cert.min_valuation, val2(c));
    if (entry.power() > 0 && !w.is_infinite()) {
        // degree m > M: v >= min_j v(p_j) + (m - deg p) w, smallest at m = M + 1
        cert.tail_bound = min_num + Val(w.value() * Rational(static_cast<long long>(cert.degree_checked + 1 - deg_p)));
    }
    cert.certified = cert.min_valuation > Val(Rational(0)) && cert.tail_bound > Val(Rational(0));
    return cert;
}

ArcReport verify_arc(const Arc& arc) {
    ArcReport r;
    const UPoly& u = arc.unit;
    LM one = LM::identity(LocalizedPoly(UPoly::constant(1), u));
    auto upow = [&](int e) {
        return e >= 0 ? LocalizedPoly(u.pow(static_cast<unsigned>(e)), u) : LocalizedPoly(UPoly::constant(1), u, static_cast<unsigned>(-e));
    };
    r.relation_ok = group_word(arc.x, arc.y, arc.z) == one;

    const int e = arc.family == ArcFamily::bogen1 ? 8 : 4;
    bool powers = arc.x * arc.x == LM::scalar(upow(-e)) && arc.y.pow(4) == LM::scalar(upow(e));
    if (arc.family == ArcFamily::bogen1) powers = powers && arc.z.pow(8) == LM::scalar(upow(8));
    r.power_identities = powers;
    r.commutator_ok = commutator(arc.y, arc.z) == one && commute_criterion(arc.y, arc.z);

    r.start_point = arc.n;
    r.end_point = arc.n + 2;
    FramedPoint start_expected = make_point(arc.point_family(), arc.n, arc.lambda, arc.mu, arc.kappa);
    FramedPoint end_expected = make_point(arc.point_family(), arc.n + 2, arc.lambda, arc.mu, arc.kappa);
    FramedPoint s = arc.at(CycloElem(0), arc.n), t = arc.at(CycloElem(1), arc.n + 2);
    r.start_matches = s.x.str() == start_expected.x.str() && s.y.str() == start_expected.y.str() &&
                      s.z.str() == start_expected.z.str();
    r.end_matches = t.x.str() == end_expected.x.str() && t.y.str() == end_expected.y.str() &&
                    t.z.str() == end_expected.z.str();

    LocalizedPoly dy = arc.y.det();
    LocalizedPoly delta = arc.x.det() * dy * dy;
    CycloElem dv;
    r.delta_constant = delta.is_constant(&dv) && dv == CycloElem(arc.n == 1 ? 1 : -1);
    r.delta = dv;

    auto C = [&](const CycloElem& c) { return LocalizedPoly(UPoly::constant(c), u); };
    auto base = [&](const CycloElem& off) { return LM(C(1), C(off), C(0), C(1)); };
    r.nilpotent = true;
    for (const LM& m : {arc.x - base(arc.lambda), arc.y - base(arc.mu), arc.z - base(arc.kappa)}) {
        for (const LocalizedPoly* entry : {&m.a11, &m.a12, &m.a21, &m.a22}) {
            NilpotenceCertificate c = nilpotence_certificate(*entry);
            r.nilpotent = r.nilpotent && c.certified;
            r.certificates.push_back(c);
        }
    }
    return r;
}

bool arc_polynomial_identity() {
    UPoly t = UPoly::t();
    UPoly lhs = arc_p() * arc_p() + t * t * lin(1, -1) * lin(1, -1) * lin(2, 4) * lin(6, -4);
    return lhs == UPoly::constant(1) && arc_q() * arc_r() == t * t * lin(1, -1) * lin(1, -1) * lin(2, 4) * lin(6, -4);
}

bool validate_chain(const Chain& chain) {
    if (chain.arcs.empty()) return false;
    for (std::size_t k = 0; k + 1 < chain.arcs.size(); ++k) {
        FramedPoint end = chain.arcs[k].at(CycloElem(1), 0);
        FramedPoint start = chain.arcs[k + 1].at(CycloElem(0), 0);
        if (end.x != start.x || end.y != start.y || end.z != start.z) return false;
    }
    return true;
}

}  // namespace framedef
