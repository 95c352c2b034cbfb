#include "framedef/deform.hpp"

#include <algorithm>
#include <set>

#include "framedef/errors.hpp"

namespace framedef {

namespace {

const VarSetPtr& V() { return matrix_vars(); }

Poly var(const std::string& name) { return Poly::variable(V(), name); }
Poly cst(const CycloElem& c) { return Poly::constant(V(), c); }
/// 1 + v
Poly tilde(const std::string& name) { return cst(1) + var(name); }

Series ser(const Poly& p, unsigned cap) { return Series(p, cap); }

Mat2<Series> to_series(const Mat2<Poly>& m, unsigned cap) {
    return m.map([cap](const Poly& p) { return Series(p, cap); });
}

/// Identity on every matrix variable except the listed replacements.
std::map<std::string, SubstValue<CycloElem>> assignment_with(
    std::initializer_list<std::pair<const char*, SubstValue<CycloElem>>> replacements) {
    std::map<std::string, SubstValue<CycloElem>> a;
    for (const auto& n : V()->names()) a.emplace(n, var(n));
    for (const auto& [name, value] : replacements) a.insert_or_assign(name, value);
    return a;
}

Poly specialize_triangular(const Poly& p) {
    static const auto kAssign = assignment_with({{"x21", CycloElem(0)}, {"y21", CycloElem(0)}, {"z21", CycloElem(0)}});
    return substitute(p, kAssign);
}

bool in_one_plus_m(const CycloElem& psi) { return val2(psi - CycloElem(1)).positive(); }

}  // namespace

void DeformParams::validate() const {
    for (const auto* c : {&lambda, &mu, &kappa}) {
        if (!c->is_zero() && !is_integral_unit(*c)) {
            throw PreconditionViolation("parameter " + c->str() + " is neither 0 nor a unit");
        }
    }
}

FramedMatrices framed_matrices(const DeformParams& p) {
    return {
        {tilde("x11"), cst(p.lambda) + var("x12"), var("x21"), tilde("x22")},
        {tilde("y11"), cst(p.mu) + var("y12"), var("y21"), tilde("y22")},
        {tilde("z11"), cst(p.kappa) + var("z12"), var("z21"), tilde("z22")},
    };
}

const Series& RelationF::entry(int i, int j) const {
    if (i == 1 && j == 1) return f11;
    if (i == 1 && j == 2) return f12;
    if (i == 2 && j == 1) return f21;
    if (i == 2 && j == 2) return f22;
    throw std::out_of_range("relation entry index");
}

namespace {

// Shift targets such as lambda = 2 are integral but neither 0 nor a unit.
void require_integral(const DeformParams& params) {
    for (const auto* c : {&params.lambda, &params.mu, &params.kappa}) {
        if (!c->is_zero() && val2(*c) < Val(Rational(0))) {
            throw PreconditionViolation("parameter " + c->str() + " is not integral");
        }
    }
}

RelationF relation_unchecked(const DeformParams& params) {
    const unsigned cap = params.cap;
    FramedMatrices m = framed_matrices(params);
    // X~^2 Y~^4 is a polynomial matrix of degree 6; the commutator needs inverses.
    Mat2<Poly> x2 = m.x * m.x;
    Mat2<Poly> y2 = m.y * m.y;
    Mat2<Series> xy = to_series(x2 * (y2 * y2), cap);
    Mat2<Series> ys = to_series(m.y, cap);
    Mat2<Series> zs = to_series(m.z, cap);
    Mat2<Series> w = xy * commutator(ys, zs);
    Series one = Series::constant(V(), CycloElem(1), cap);
    return {w.a11 - one, w.a12, w.a21, w.a22 - one};
}

}  // namespace

RelationF compute_relation(const DeformParams& params) {
    params.validate();
    return relation_unchecked(params);
}

DeltaWitness delta_witness(const DeformParams& params, const RelationF& rel) {
    const unsigned cap = params.cap;
    FramedMatrices m = framed_matrices(params);
    Poly dy = m.y.det();
    DeltaWitness w;
    w.delta = ser(m.x.det() * dy * dy, cap);
    w.combination = rel.f11 + rel.f22 + rel.f11 * rel.f22 - rel.f12 * rel.f21;
    Series one = Series::constant(V(), CycloElem(1), cap);
    w.square_identity = (w.delta * w.delta - one) == w.combination;
    Series h = CycloElem(Rational(1, 2)) * (one + w.delta);
    w.idempotent_identity = (h * h - h) == CycloElem(Rational(1, 4)) * w.combination;
    return w;
}

DeltaWitness delta_witness(const DeformParams& params) { return delta_witness(params, compute_relation(params)); }

ShiftReport shift_isomorphism_check(const DeformParams& from, const RelationF& rel_from, const DeformParams& to,
                                    const RelationF& rel_to) {
    if (from.cap != to.cap) throw IncompatibleRings("shift check between different caps");
    CycloElem dl = to.lambda - from.lambda, dm = to.mu - from.mu, dk = to.kappa - from.kappa;
    for (const auto* d : {&dl, &dm, &dk}) {
        if (!(val2(*d) >= Val(Rational(1)))) {
            throw PreconditionViolation("parameters are not congruent modulo 2: difference " + d->str());
        }
    }
    const unsigned cap = from.cap;
    auto shift = assignment_with({{"x12", var("x12") + cst(dl)}, {"y12", var("y12") + cst(dm)},
                                  {"z12", var("z12") + cst(dk)}});
    ShiftReport r;
    bool ok = true;
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            Poly shifted = substitute(rel_from.entry(i, j).poly(), shift);
            Poly diff = shifted - rel_to.entry(i, j).poly();
            std::set<std::uint64_t> support;
            for (const auto& t : shifted.terms()) support.insert(t.first.bits());
            for (const auto& t : rel_to.entry(i, j).poly().terms()) support.insert(t.first.bits());
            std::set<std::uint64_t> differing;
            for (const auto& [mono, c] : diff.terms()) {
                unsigned d = mono.degree();
                if (d > cap) continue;
                differing.insert(mono.bits());
                ++r.adic_terms_checked;
                Val margin = val2(c) + Val(Rational(-static_cast<long long>(cap + 1 - d)));
                r.min_margin = min(r.min_margin, margin);
                if (margin < Val(Rational(0))) ok = false;
            }
            for (auto b : support) {
                if (Monomial(b).degree() <= cap && !differing.count(b)) ++r.exact_terms_equal;
            }
        }
    }
    r.holds = ok;
    return r;
}

ShiftReport shift_isomorphism_check(const DeformParams& from, const DeformParams& to) {
    require_integral(from);
    require_integral(to);
    return shift_isomorphism_check(from, relation_unchecked(from), to, relation_unchecked(to));
}

Poly triangular_q(const DeformParams& p) {
    Poly x11 = tilde("x11"), x22 = tilde("x22"), y11 = tilde("y11"), y22 = tilde("y22");
    Poly x12 = cst(p.lambda) + var("x12"), y12 = cst(p.mu) + var("y12");
    return x11 * x11 * y12 * (y11 + y22) * (y11 * y11 + y22 * y22) + x12 * (x11 + x22) * y22.pow(4);
}

Poly triangular_n(const DeformParams& p) {
    Poly y11 = tilde("y11"), y22 = tilde("y22"), z11 = tilde("z11"), z22 = tilde("z22");
    Poly y12 = cst(p.mu) + var("y12"), z12 = cst(p.kappa) + var("z12");
    return (y11 - y22) * z12 + y12 * (z22 - z11);
}

TriangularReport triangular_locus(const DeformParams& params, const RelationF& rel) {
    const unsigned cap = params.cap;
    TriangularReport r;
    r.f11 = ser(specialize_triangular(rel.f11.poly()), cap);
    r.f22 = ser(specialize_triangular(rel.f22.poly()), cap);
    r.f12 = ser(specialize_triangular(rel.f12.poly()), cap);
    r.f21_zero = specialize_triangular(rel.f21.poly()).is_zero();

    Poly x11 = tilde("x11"), x22 = tilde("x22"), y11 = tilde("y11"), y22 = tilde("y22"), z22 = tilde("z22");
    Poly p11 = x11 * x11 * y11.pow(4);
    Poly p22 = x22 * x22 * y22.pow(4);
    r.f11_matches = r.f11 == ser(p11 - cst(1), cap);
    r.f22_matches = r.f22 == ser(p22 - cst(1), cap);

    FramedMatrices m = framed_matrices(params);
    auto spec = [](const Poly& p) { return specialize_triangular(p); };
    Mat2<Poly> x = m.x.map(spec), y = m.y.map(spec), z = m.z.map(spec);
    Mat2<Poly> y2 = y * y;
    Mat2<Poly> xy = x * x * y2 * y2;
    Poly q = triangular_q(params);
    r.xy_display_matches = xy.a21.is_zero() && xy.a11 == p11 && xy.a22 == p22 && xy.a12 == q;

    Mat2<Series> c = commutator(to_series(y, cap), to_series(z, cap));
    Series one = Series::constant(V(), CycloElem(1), cap);
    Series denom = ser(y22 * z22, cap);
    Poly n = triangular_n(params);
    r.commutator_matches = c.a11 == one && c.a21.is_zero() && c.a22 == one && c.a12 * denom == ser(n, cap);

    r.f12_cleared_matches = r.f12 * denom == ser(q * y22 * z22 + p11 * n, cap);
    return r;
}

TriangularReport triangular_locus(const DeformParams& params) {
    return triangular_locus(params, compute_relation(params));
}

Poly f_element(const DeformParams& p, int eps1, int eps2) {
    Poly y11 = tilde("y11"), y22 = tilde("y22"), z22 = tilde("z22");
    Poly x12 = cst(p.lambda) + var("x12"), y12 = cst(p.mu) + var("y12");
    CycloElem e1(eps1), e2(eps2);
    return y12 * (y11 + y22) * (y11 * y11 + y22 * y22) * y22 * z22 +
           x12 * y11 * y11 * (e1 * (y22 * y22) + e2 * (y11 * y11)) * y22.pow(3) * z22 + triangular_n(p) * y11.pow(4);
}

bool f_element_cross_check(const DeformParams& params, int eps1, int eps2) {
    const unsigned cap = params.cap;
    Poly y22 = tilde("y22"), z22 = tilde("z22");
    Poly e = triangular_q(params) * y22 * z22 + triangular_n(params);
    Series y11s = ser(tilde("y11"), cap), y22s = ser(y22, cap);
    Series inv11 = invert_unit(y11s), inv22 = invert_unit(y22s);
    Series one = Series::constant(V(), CycloElem(1), cap);
    std::map<std::string, Series> phi;
    for (const auto& n : V()->names()) phi.emplace(n, Series::variable(V(), n, cap));
    phi.insert_or_assign("x11", CycloElem(eps1) * (inv11 * inv11) - one);
    phi.insert_or_assign("x22", CycloElem(eps2) * (inv22 * inv22) - one);
    Series lhs = substitute(e, phi, cap) * y11s * y11s * y11s * y11s;
    return lhs == ser(f_element(params, eps1, eps2), cap);
}

FSubstitutionReport f_substitutions(const DeformParams& p, int eps1, int eps2) {
    Poly f = f_element(p, eps1, eps2);
    Poly y22 = tilde("y22"), z11 = tilde("z11"), z22 = tilde("z22");
    Poly x12 = cst(p.lambda) + var("x12"), y12 = cst(p.mu) + var("y12"), z12 = cst(p.kappa) + var("z12");
    CycloElem es(eps1 + eps2);
    FSubstitutionReport r;
    r.same_diagonal = substitute(f, assignment_with({{"y11", var("y22")}}));
    r.same_expected = es * (x12 * y22.pow(7) * z22) + y12 * (CycloElem(5) * z22 - z11) * y22.pow(4);
    r.opposite_diagonal = substitute(f, assignment_with({{"y11", cst(-2) - var("y22")}}));
    r.opposite_expected =
        (CycloElem(-2) * (y22 * z12) + y12 * (z22 - z11)) * y22.pow(4) + es * (x12 * y22.pow(7) * z22);
    return r;
}

BijektionReport bijektion_specialization(const CycloElem& psi_x, const CycloElem& psi_y, const CycloElem& psi_z,
                                         const DeformParams& params) {
    params.validate();
    if (!in_one_plus_m(psi_x) || !in_one_plus_m(psi_y) || !in_one_plus_m(psi_z)) {
        throw PreconditionViolation("psi values must be congruent to 1 modulo the maximal ideal");
    }
    if (psi_x * psi_x * psi_y.pow(4) != CycloElem(1)) {
        throw PreconditionViolation("psi_x^2 psi_y^4 must equal 1");
    }
    if (params.cap < 4) throw PreconditionViolation("specialization needs cap >= 4");
    const unsigned cap = params.cap;
    BijektionReport r;
    r.vars = make_vars({"y12", "z11"});
    auto c = [&](const CycloElem& v) { return Series::constant(r.vars, v, cap); };
    Series y12 = c(params.mu) + Series::variable(r.vars, "y12", cap);
    Series z11 = c(1) + Series::variable(r.vars, "z11", cap);
    Mat2<Series> x{c(psi_x), c(params.lambda), c(0), c(1)};
    Mat2<Series> y{c(psi_y), y12, c(0), c(1)};
    Mat2<Series> z{z11, c(params.kappa), c(0), psi_z * invert_unit(z11)};
    Mat2<Series> w = group_word(x, y, z);
    r.relation = w.a12.poly();
    r.diagonal_trivial = w.a11 == c(1) && w.a21.is_zero() && w.a22 == c(1);
    r.polynomial_of_degree_3 = r.relation.total_degree() <= 3;

    auto pc = [&](const CycloElem& v) { return Poly::constant(r.vars, v); };
    Poly ty12 = pc(params.mu) + Poly::variable(r.vars, "y12");
    Poly tz11 = pc(1) + Poly::variable(r.vars, "z11");
    CycloElem pz_inv = field_inverse(psi_z);
    r.closed_form = (psi_x * psi_x * (psi_y + CycloElem(1)) * (psi_y * psi_y + CycloElem(1))) * ty12 +
                    pc(params.lambda * (psi_x + CycloElem(1))) + ((psi_y - CycloElem(1)) * params.kappa * pz_inv) * tz11 +
                    ty12 * (pc(1) - pz_inv * (tz11 * tz11));
    r.matches_closed_form = r.relation == r.closed_form.truncated(cap);
    r.constant_in_maximal_ideal = val2(r.relation.constant_term()).positive();
    r.coefficient_y12_z11_2 = r.relation.coefficient_of(monomial_of(*r.vars, {{"y12", 1}, {"z11", 2}}));
    if (r.coefficient_y12_z11_2 == pz_inv) r.sign = 1;
    if (r.coefficient_y12_z11_2 == -pz_inv) r.sign = -1;
    return r;
}

std::string component_name(Component c) { return c == Component::plus ? "plus" : "minus"; }

Component r1_component(const CycloElem& b) {
    CycloElem s = CycloElem(1) + b;
    if (s * s != CycloElem(1)) throw PreconditionViolation("(1+y)^2 != 1 at y = " + b.str());
    if (b.is_zero()) return Component::plus;
    if (b == CycloElem(-2)) return Component::minus;
    throw PreconditionViolation("unreachable: (1+y)^2 = 1 has only the roots 0 and -2");
}

IdempotentReport r1_idempotent_check() {
    UPoly y = UPoly::t();
    UPoly e = CycloElem(Rational(-1, 2)) * y;
    UPoly one = UPoly::constant(1);
    UPoly modulus = (one + y) * (one + y) - one;
    auto [q, rem] = (e * e - e).divmod(modulus);
    return {q, rem.is_zero()};
}

CycloElem evaluate(const Poly& p, const std::map<std::string, CycloElem>& values) {
    const VarSet& vars = *p.vars();
    std::vector<const CycloElem*> v(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = values.find(vars.name(i));
        if (it != values.end()) v[i] = &it->second;
    }
    CycloElem out;
    for (const auto& [m, c] : p.terms()) {
        CycloElem term = c;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (!v[i]) throw UnboundVariable("no value for variable " + vars.name(i));
            term *= v[i]->pow(e);
        }
        out += term;
    }
    return out;
}

Mat2<CycloElem> relation_word_at(const DeformParams& params, const std::map<std::string, CycloElem>& values) {
    FramedMatrices m = framed_matrices(params);
    auto ev = [&](const Poly& p) { return evaluate(p, values); };
    return group_word(m.x.map(ev), m.y.map(ev), m.z.map(ev));
}

std::map<std::string, CycloElem> point_values(const DeformParams& params, const Mat2<CycloElem>& x,
                                              const Mat2<CycloElem>& y, const Mat2<CycloElem>& z) {
    std::map<std::string, CycloElem> v;
    auto put = [&](const std::string& s, const Mat2<CycloElem>& a, const CycloElem& off) {
        v[s + "11"] = a.a11 - CycloElem(1);
        v[s + "12"] = a.a12 - off;
        v[s + "21"] = a.a21;
        v[s + "22"] = a.a22 - CycloElem(1);
    };
    put("x", x, params.lambda);
    put("y", y, params.mu);
    put("z", z, params.kappa);
    return v;
}

}  // namespace framedef
