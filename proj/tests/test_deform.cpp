#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "framedef/deform.hpp"
#include "framedef/points.hpp"

using framedef::CycloElem;
using framedef::DeformParams;
using framedef::Mat2;
using framedef::Poly;
using framedef::Rational;
using framedef::Series;

namespace {

const framedef::VarSetPtr& V() { return framedef::matrix_vars(); }
Poly var(const char* n) { return Poly::variable(V(), n); }
Poly cst(const CycloElem& c) { return Poly::constant(V(), c); }
Poly tl(const char* n) { return cst(1) + var(n); }

std::vector<DeformParams> grid(unsigned cap) {
    std::vector<DeformParams> out;
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m)
            for (int k = 0; k < 2; ++k) out.push_back({l, m, k, cap});
    return out;
}

std::string label(const DeformParams& p) {
    return "lambda=" + p.lambda.str() + " mu=" + p.mu.str() + " kappa=" + p.kappa.str() + " cap=" +
           std::to_string(p.cap);
}

// The f element assembled term by term from its displayed form.
Poly displayed_f(const DeformParams& p, int e1, int e2) {
    Poly y11 = tl("y11"), y22 = tl("y22"), z11 = tl("z11"), z22 = tl("z22");
    Poly x12 = cst(p.lambda) + var("x12"), y12 = cst(p.mu) + var("y12"), z12 = cst(p.kappa) + var("z12");
    return y12 * (y11 + y22) * (y11 * y11 + y22 * y22) * y22 * z22 +
           x12 * y11 * y11 * (CycloElem(e1) * (y22 * y22) + CycloElem(e2) * (y11 * y11)) * y22.pow(3) * z22 +
           ((y11 - y22) * z12 + y12 * (z22 - z11)) * y11.pow(4);
}

}  // namespace

TEST_CASE("relation constant terms on the grid at caps 6 and 8") {
    for (unsigned cap : {6U, 8U}) {
        for (const auto& p : grid(cap)) {
            CAPTURE(label(p));
            auto rel = framedef::compute_relation(p);
            // oracle: the word evaluated numerically at the residual matrices
            Mat2<CycloElem> x(1, p.lambda, 0, 1), y(1, p.mu, 0, 1), z(1, p.kappa, 0, 1);
            Mat2<CycloElem> w = framedef::group_word(x, y, z);
            CHECK(rel.f11.constant_term() == w.a11 - CycloElem(1));
            CHECK(rel.f12.constant_term() == w.a12);
            CHECK(rel.f21.constant_term() == w.a21);
            CHECK(rel.f22.constant_term() == w.a22 - CycloElem(1));
            CHECK(rel.f12.constant_term() == CycloElem(2) * p.lambda + CycloElem(4) * p.mu);
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j) CHECK(framedef::val2(rel.entry(i, j).constant_term()).positive());
        }
    }
    CHECK(framedef::compute_relation({1, 0, 0}).f12.constant_term() == CycloElem(2));
    CHECK_THROWS_AS(framedef::compute_relation({2, 0, 0}), framedef::PreconditionViolation);
}

TEST_CASE("relation first-order terms") {
    // d/dx12 of the (1,2) entry at the origin is 2 (from X^2) for lambda = mu = kappa = 0
    auto rel = framedef::compute_relation({0, 0, 0, 6});
    CHECK(rel.f12.poly().coefficient_of(framedef::Monomial::variable(V()->index_of("x12"))) == CycloElem(2));
    CHECK(rel.f12.poly().coefficient_of(framedef::Monomial::variable(V()->index_of("y12"))) == CycloElem(4));
    CHECK(rel.f11.poly().coefficient_of(framedef::Monomial::variable(V()->index_of("x11"))) == CycloElem(2));
    CHECK(rel.f11.poly().coefficient_of(framedef::Monomial::variable(V()->index_of("y11"))) == CycloElem(4));
}

TEST_CASE("delta witness at caps 6 and 8") {
    for (unsigned cap : {6U, 8U}) {
        for (const auto& p : grid(cap)) {
            CAPTURE(label(p));
            auto rel = framedef::compute_relation(p);
            auto d = framedef::delta_witness(p, rel);
            CHECK(d.square_identity);
            CHECK(d.idempotent_identity);
            // oracle: det of the word through determinant multiplicativity
            auto m = framedef::framed_matrices(p);
            auto ser = [cap](const Poly& e) { return Series(e, cap); };
            Mat2<Series> w = framedef::group_word(m.x.map(ser), m.y.map(ser), m.z.map(ser));
            CHECK(w.det() - Series::constant(V(), 1, cap) == d.combination);
            CHECK(d.delta.constant_term() == CycloElem(1));
        }
    }
}

TEST_CASE("shift isomorphism examples") {
    DeformParams origin{0, 0, 0, 6};
    for (const DeformParams& to : {DeformParams{2, 0, 0, 6}, DeformParams{0, 2, 0, 6}, DeformParams{0, 0, 2, 6}}) {
        auto r = framedef::shift_isomorphism_check(origin, to);
        CHECK(r.holds);
        CHECK(r.adic_terms_checked > 0);
        CHECK(r.min_margin >= framedef::Val(Rational(0)));
    }
    auto same = framedef::shift_isomorphism_check(origin, origin);
    CHECK(same.holds);
    CHECK(same.adic_terms_checked == 0);
    CHECK_THROWS_AS(framedef::shift_isomorphism_check(origin, {1, 0, 0, 6}), framedef::PreconditionViolation);
    CHECK_THROWS_AS(framedef::shift_isomorphism_check(origin, {0, 0, 2, 5}), framedef::IncompatibleRings);
}

TEST_CASE("shift check rejects a perturbed target") {
    // both endpoints are units, so compute_relation accepts them
    DeformParams from{1, 0, 0, 4}, to{-1, 0, 0, 4};
    auto rf = framedef::compute_relation(from);
    auto rt = framedef::compute_relation(to);
    CHECK(framedef::shift_isomorphism_check(from, rf, to, rt).holds);
    rt.f11 = rt.f11 + Series(var("y22") * var("z11"), 4);
    CHECK_FALSE(framedef::shift_isomorphism_check(from, rf, to, rt).holds);
}

TEST_CASE("triangular locus on the grid") {
    for (const auto& p : grid(6)) {
        CAPTURE(label(p));
        auto r = framedef::triangular_locus(p);
        CHECK(r.f21_zero);
        CHECK(r.f11_matches);
        CHECK(r.f22_matches);
        CHECK(r.xy_display_matches);
        CHECK(r.commutator_matches);
        CHECK(r.f12_cleared_matches);
    }
}

TEST_CASE("f element: displayed form, coefficient and cross check") {
    const auto m = framedef::monomial_of(*V(), {{"y12", 1}, {"z11", 1}});
    for (const auto& p : grid(6)) {
        for (int e1 : {1, -1}) {
            for (int e2 : {1, -1}) {
                CAPTURE(label(p));
                CAPTURE(e1);
                CAPTURE(e2);
                Poly f = framedef::f_element(p, e1, e2);
                CHECK(f == displayed_f(p, e1, e2));
                CHECK(f.coefficient_of(m) == CycloElem(-1));
                CHECK(framedef::f_element_cross_check(p, e1, e2));
            }
        }
    }
}

TEST_CASE("f element substitution identities") {
    for (const auto& p : grid(6)) {
        for (int e1 : {1, -1}) {
            for (int e2 : {1, -1}) {
                CAPTURE(label(p));
                auto s = framedef::f_substitutions(p, e1, e2);
                CHECK(s.same_ok());
                CHECK(s.opposite_ok());
                Poly y22 = tl("y22"), z11 = tl("z11"), z22 = tl("z22");
                Poly x12 = cst(p.lambda) + var("x12"), y12 = cst(p.mu) + var("y12"), z12 = cst(p.kappa) + var("z12");
                Poly same = CycloElem(e1 + e2) * x12 * y22.pow(7) * z22 + y12 * (CycloElem(5) * z22 - z11) * y22.pow(4);
                CHECK(s.same_diagonal == same);
                Poly opposite = (CycloElem(-2) * y22 * z12 + y12 * (z22 - z11)) * y22.pow(4);
                if (e1 + e2 == 0) CHECK(s.opposite_diagonal == opposite);
                else CHECK(s.opposite_diagonal != opposite);
            }
        }
    }
}

TEST_CASE("two-variable specialization") {
    const CycloElem i = CycloElem::imag();
    for (const CycloElem& px : {CycloElem(1), CycloElem(-1)}) {
        for (const CycloElem& py : {CycloElem(1), i, CycloElem(-1)}) {
            for (const CycloElem& pz : {CycloElem(1), CycloElem(-1), i, CycloElem::zeta8()}) {
                for (const auto& p : grid(6)) {
                    CAPTURE(label(p));
                    auto r = framedef::bijektion_specialization(px, py, pz, p);
                    CHECK(r.diagonal_trivial);
                    CHECK(r.polynomial_of_degree_3);
                    CHECK(r.matches_closed_form);
                    CHECK(r.constant_in_maximal_ideal);
                    CHECK(r.coefficient_y12_z11_2 == -framedef::field_inverse(pz));
                    CHECK(r.sign == -1);
                    // oracle: the word at numeric values of (y12, z11)
                    for (const auto& [a, b] : {std::pair<Rational, Rational>{Rational(1, 3), Rational(2, 5)},
                                               {Rational(-2), Rational(3)}, {Rational(0), Rational(-1, 2)}}) {
                        CycloElem y12 = p.mu + CycloElem(a), z11 = CycloElem(1) + CycloElem(b);
                        Mat2<CycloElem> x(px, p.lambda, 0, 1), y(py, y12, 0, 1);
                        Mat2<CycloElem> z(z11, p.kappa, 0, pz / z11);
                        auto w = framedef::group_word(x, y, z);
                        CHECK(w.a11 == CycloElem(1));
                        CHECK(w.a21.is_zero());
                        CHECK(w.a22 == CycloElem(1));
                        CHECK(framedef::evaluate(r.relation, {{"y12", CycloElem(a)}, {"z11", CycloElem(b)}}) == w.a12);
                    }
                }
            }
        }
    }
}

TEST_CASE("two-variable specialization preconditions") {
    DeformParams p{0, 0, 0, 6};
    CHECK_THROWS_AS(framedef::bijektion_specialization(2, 1, 1, p), framedef::PreconditionViolation);
    CHECK_THROWS_AS(framedef::bijektion_specialization(CycloElem::zeta8(), 1, 1, p), framedef::PreconditionViolation);
    CHECK_THROWS_AS(framedef::bijektion_specialization(1, 1, 1, {0, 0, 0, 3}), framedef::PreconditionViolation);
    CHECK_NOTHROW(framedef::bijektion_specialization(-1, 1, 1, p));
    auto r = framedef::bijektion_specialization(1, 1, 1, p);
    CHECK((r.coefficient_y12_z11_2 == CycloElem(1) || r.coefficient_y12_z11_2 == CycloElem(-1)));
}

TEST_CASE("r1 components and idempotent") {
    CHECK(framedef::r1_component(0) == framedef::Component::plus);
    CHECK(framedef::r1_component(-2) == framedef::Component::minus);
    CHECK_THROWS_AS(framedef::r1_component(1), framedef::PreconditionViolation);
    CHECK(framedef::component_name(framedef::Component::minus) == "minus");
    auto r = framedef::r1_idempotent_check();
    CHECK(r.divisible);
    // e^2 - e = y^2/4 + y/2 = ((1+y)^2 - 1)/4
    CHECK(r.quotient == framedef::UPoly::constant(Rational(1, 4)));
}

TEST_CASE("parameters must be zero or units") {
    CHECK_NOTHROW(DeformParams({1, 0, CycloElem::zeta8(), 6}).validate());
    CHECK_THROWS_AS(DeformParams({2, 0, 0, 6}).validate(), framedef::PreconditionViolation);
    CHECK_THROWS_AS(DeformParams({Rational(1, 2), 0, 0, 6}).validate(), framedef::PreconditionViolation);
}
