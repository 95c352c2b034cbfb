#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "framedef/localized.hpp"
#include "framedef/trunc_series.hpp"
#include "support.hpp"

using framedef::CycloElem;
using framedef::LocalizedPoly;
using framedef::Rational;
using framedef::UPoly;
using Poly = framedef::SparsePoly<CycloElem>;
using Series = framedef::TruncSeries<CycloElem>;

namespace {

const framedef::VarSetPtr& V() { return framedef::matrix_vars(); }

Poly var(const char* name) { return Poly::variable(V(), name); }
Poly one() { return Poly::constant(V(), CycloElem(1)); }

}  // namespace

TEST_CASE("monomial packing is lexicographic") {
    using framedef::Monomial;
    Monomial a = Monomial::variable(0);
    Monomial b = Monomial::variable(1, 5);
    CHECK(b < a);
    CHECK((a * b).exponent(1) == 5);
    CHECK((a * b).degree() == 6);
    CHECK(a.divides(a * b));
    CHECK(!b.divides(a));
    CHECK(a.coprime(b));
    CHECK((a * b).str(*V()) == "x11^1*x12^5");
    CHECK(Monomial().str(*V()) == "1");
}

TEST_CASE("varset rejects duplicates and unknown names") {
    CHECK_THROWS(framedef::make_vars({"a", "a"}));
    CHECK_THROWS_AS(static_cast<void>(V()->index_of("w")), framedef::UnboundVariable);
}

TEST_CASE("mul truncates by total degree") {
    Series s(one() + var("x11"), 1);
    CHECK((s * s).poly() == one() + CycloElem(2) * var("x11"));
    Series a(one() + var("x11"), 2), b(one() - var("x11"), 2);
    CHECK((a * b).poly() == one() - var("x11") * var("x11"));
    CHECK_THROWS_AS(static_cast<void>(Series(one(), 2) * Series(one(), 3)), framedef::IncompatibleRings);
    auto other = framedef::make_vars({"t"});
    CHECK_THROWS_AS(static_cast<void>(Series(one(), 2) * Series::constant(other, 1, 2)), framedef::IncompatibleRings);
}

TEST_CASE("property: truncation consistency across caps") {
    testsupport::Rng rng(17);
    for (int k = 0; k < 60; ++k) {
        Poly f = testsupport::random_poly(rng, V(), 8, 4);
        Poly g = testsupport::random_poly(rng, V(), 8, 4);
        Series lo = Series(f, 3) * Series(g, 3);
        Series hi = Series(f, 6) * Series(g, 6);
        CHECK(hi.truncated_to(3) == lo);
        CHECK((f * g).truncated(3) == lo.poly());
    }
}

TEST_CASE("invert_unit examples") {
    Series a(one() + var("x11"), 3);
    Poly x = var("x11");
    CHECK(framedef::invert_unit(a).poly() == one() - x + x * x - x * x * x);
    CycloElem c = CycloElem(1) + CycloElem(2) * CycloElem::zeta8();
    CHECK(framedef::invert_unit(Series::constant(V(), c, 4)).poly() == Poly::constant(V(), framedef::field_inverse(c)));
    CHECK_THROWS_AS(static_cast<void>(framedef::invert_unit(Series(Poly::constant(V(), 2) + x, 3))), framedef::NotAUnit);
    CHECK_THROWS_AS(static_cast<void>(framedef::invert_unit(Series(x, 3))), framedef::NotAUnit);
}

TEST_CASE("property: invert_unit gives an exact inverse at the cap") {
    testsupport::Rng rng(23);
    for (int k = 0; k < 200; ++k) {
        Poly p = testsupport::random_poly(rng, V(), 6, 3);
        p = p - Poly::constant(V(), p.constant_term()) + Poly::constant(V(), testsupport::random_integral_unit(rng));
        Series s(p, 5);
        CHECK((s * framedef::invert_unit(s)).poly() == one());
    }
}

TEST_CASE("substitute: identity, errors, and the homomorphism property") {
    testsupport::Rng rng(29);
    std::map<std::string, framedef::SubstValue<CycloElem>> id;
    for (const auto& n : V()->names()) id.emplace(n, Poly::variable(V(), n));
    Poly f = testsupport::random_poly(rng, V(), 10, 4);
    CHECK(framedef::substitute(f, id) == f);

    std::map<std::string, framedef::SubstValue<CycloElem>> partial{{"x11", CycloElem(1)}};
    CHECK_THROWS_AS(static_cast<void>(framedef::substitute(var("x12"), partial)), framedef::UnboundVariable);
    CHECK(framedef::substitute(one() + var("x11"), partial) == Poly::constant(V(), 2));

    auto small = framedef::make_vars({"s", "u"});
    for (int k = 0; k < 40; ++k) {
        std::map<std::string, framedef::SubstValue<CycloElem>> phi;
        for (const auto& n : V()->names()) {
            if (testsupport::uniform(rng, 0, 1) == 0) {
                phi.emplace(n, testsupport::random_cyclo(rng, 3));
            } else {
                phi.emplace(n, testsupport::random_poly(rng, small, 2, 1));
            }
        }
        Poly a = testsupport::random_poly(rng, V(), 5, 2);
        Poly b = testsupport::random_poly(rng, V(), 5, 2);
        Poly sa = framedef::substitute(a, phi);
        Poly sb = framedef::substitute(b, phi);
        CHECK(framedef::substitute(a + b, phi) == sa + sb);
        CHECK(framedef::substitute(a * b, phi) == sa * sb);
    }
}

TEST_CASE("truncated substitution agrees with exact substitution then truncation") {
    testsupport::Rng rng(31);
    for (int k = 0; k < 20; ++k) {
        Poly a = testsupport::random_poly(rng, V(), 6, 3);
        std::map<std::string, Series> phi;
        std::map<std::string, framedef::SubstValue<CycloElem>> exact;
        for (const auto& n : V()->names()) {
            Poly v = testsupport::random_poly(rng, V(), 2, 2);
            v = v - Poly::constant(V(), v.constant_term());
            phi.emplace(n, Series(v, 4));
            exact.emplace(n, v);
        }
        CHECK(framedef::substitute(a, phi, 4).poly() == framedef::substitute(a, exact).truncated(4));
    }
}

TEST_CASE("coefficient_of") {
    Poly p = one() + var("x11");
    CHECK(framedef::coefficient_of(p, framedef::Monomial()) == CycloElem(1));
    CHECK(framedef::coefficient_of(p, framedef::monomial_of(*V(), {{"y12", 1}})) == CycloElem(0));
}

TEST_CASE("canonical serialization orders by degree then lex") {
    Poly p = var("z22") * var("z22") + var("x11") + CycloElem(Rational(1, 2)) * var("y11") - one();
    CHECK(p.str() == "[-1/1,0/1,0/1,0/1] + [1/1,0/1,0/1,0/1]*x11^1 + [1/2,0/1,0/1,0/1]*y11^1 + "
                     "[1/1,0/1,0/1,0/1]*z22^2");
    CHECK(Poly(V()).str() == "0");
}

TEST_CASE("upoly division") {
    UPoly a = UPoly::linear(1, 1).pow(3);
    auto [q, r] = a.divmod(UPoly::linear(1, 1));
    CHECK(q == UPoly::linear(1, 1).pow(2));
    CHECK(r.is_zero());
    auto [q2, r2] = UPoly::t().pow(2).divmod(UPoly::linear(1, 1));
    CHECK(q2 * UPoly::linear(1, 1) + r2 == UPoly::t().pow(2));
    CHECK(r2 == UPoly::constant(1));
}

TEST_CASE("localized polynomials normalize and invert") {
    UPoly a = UPoly::linear(1, CycloElem::zeta8() - CycloElem(1));
    LocalizedPoly x(a.pow(3) * UPoly::t(), a, 5);
    CHECK(x.power() == 2);
    CHECK(x == LocalizedPoly(UPoly::t() * a, a, 3));
    CHECK(x.numerator() == UPoly::t());
    LocalizedPoly u(UPoly::constant(CycloElem(3)) * a.pow(2), a, 7);
    LocalizedPoly inv = u.inverse();
    CHECK(u * inv == LocalizedPoly(UPoly::constant(1), a));
    CHECK_THROWS_AS(static_cast<void>(LocalizedPoly(UPoly::t(), a).inverse()), framedef::NotAUnit);
    CHECK_THROWS_AS(LocalizedPoly(UPoly::t(), UPoly::constant(2)), framedef::PreconditionViolation);
    CycloElem v;
    CHECK(LocalizedPoly(UPoly::constant(-1) * a.pow(4), a, 4).is_constant(&v));
    CHECK(v == CycloElem(-1));
    CHECK(a.eval(CycloElem(1)) == CycloElem::zeta8());
}

TEST_CASE("property: localized arithmetic agrees after clearing denominators") {
    testsupport::Rng rng(37);
    UPoly b = UPoly::linear(1, CycloElem::imag() - CycloElem(1));
    auto rand_upoly = [&](int deg) {
        std::vector<CycloElem> c;
        for (int k = 0; k <= deg; ++k) c.push_back(testsupport::random_cyclo(rng, 4));
        return UPoly(c);
    };
    for (int k = 0; k < 100; ++k) {
        UPoly p = rand_upoly(3), q = rand_upoly(2);
        auto i = static_cast<unsigned>(testsupport::uniform(rng, 0, 4));
        auto j = static_cast<unsigned>(testsupport::uniform(rng, 0, 4));
        LocalizedPoly x(p, b, i), y(q, b, j);
        // p b^-i * q b^-j: numerator times b^(i + j) recovers p q
        LocalizedPoly prod = x * y;
        CHECK(prod.numerator() * b.pow(i + j) == p * q * b.pow(prod.power()));
        LocalizedPoly sum = x + y;
        CHECK(sum.numerator() * b.pow(i + j) == (p * b.pow(j) + q * b.pow(i)) * b.pow(sum.power()));
        CHECK((x - x).is_zero());
        CycloElem t0 = testsupport::random_cyclo(rng, 3);
        if (!b.eval(t0).is_zero()) CHECK(prod.eval(t0) == x.eval(t0) * y.eval(t0));
    }
}
