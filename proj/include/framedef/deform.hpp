#pragma once

#include <array>
#include <map>
#include <string>

#include "framedef/cyclo.hpp"
#include "framedef/localized.hpp"
#include "framedef/mat2.hpp"
#include "framedef/trunc_series.hpp"

namespace framedef {

using Poly = SparsePoly<CycloElem>;
using Series = TruncSeries<CycloElem>;

/// Off-diagonal constants of the framed matrices and the truncation degree.
struct DeformParams {
    CycloElem lambda;
    CycloElem mu;
    CycloElem kappa;
    unsigned cap = 6;

    /// Each of lambda, mu, kappa must be 0 or of valuation exactly 0; throws PreconditionViolation.
    void validate() const;
};

/// X~ = (1+x11, lambda+x12; x21, 1+x22) and likewise Y~ (mu) and Z~ (kappa),
/// as exact polynomial matrices in the twelve matrix variables.
struct FramedMatrices {
    Mat2<Poly> x, y, z;
};
FramedMatrices framed_matrices(const DeformParams& params);

/// X~^2 Y~^4 [Y~, Z~] - I = (f11, f12; f21, f22) at the working cap.
struct RelationF {
    Series f11, f12, f21, f22;

    [[nodiscard]] const Series& entry(int i, int j) const;
};

RelationF compute_relation(const DeformParams& params);

/// delta = det X~ (det Y~)^2 and combination = f11 + f22 + f11 f22 - f12 f21.
struct DeltaWitness {
    Series delta;
    Series combination;
    bool square_identity = false;    // delta^2 - 1 == combination
    bool idempotent_identity = false;  // ((1+delta)/2)^2 - (1+delta)/2 == combination/4
};

DeltaWitness delta_witness(const DeformParams& params, const RelationF& rel);
DeltaWitness delta_witness(const DeformParams& params);

/// Comparison of the shifted relation with the target relation.
///
/// A constant shift by an element of 2O moves monomials of degree above the cap
/// into lower degrees, so the comparison is made modulo a^(cap+1) where
/// a = (2, x11, ..., z22): a term c*m of degree d passes when v(c) >= cap+1-d.
struct ShiftReport {
    bool holds = false;
    unsigned exact_terms_equal = 0;   // monomials where the two sides agree exactly
    unsigned adic_terms_checked = 0;  // monomials of degree <= cap that differ and were valuation-checked
    Val min_margin = Val::infinity();  // min over differing terms of v(c) - (cap+1-d)
};

/// Parameters need only be integral here. Throws PreconditionViolation unless
/// all three differences have valuation >= 1.
ShiftReport shift_isomorphism_check(const DeformParams& from, const DeformParams& to);
ShiftReport shift_isomorphism_check(const DeformParams& from, const RelationF& rel_from, const DeformParams& to,
                                    const RelationF& rel_to);

/// Specialization x21 = y21 = z21 = 0 of the relation.
struct TriangularReport {
    Series f11, f22, f12;
    bool f21_zero = false;
    bool f11_matches = false;          // f11 == x~11^2 y~11^4 - 1
    bool f22_matches = false;          // f22 == x~22^2 y~22^4 - 1
    bool xy_display_matches = false;   // X~^2 Y~^4 upper triangular with the displayed (1,2) entry
    bool commutator_matches = false;   // [Y~,Z~] = (1, N/(y~22 z~22); 0, 1)
    bool f12_cleared_matches = false;  // f12 y~22 z~22 == Q y~22 z~22 + (1 + f11) N
    [[nodiscard]] bool all() const {
        return f21_zero && f11_matches && f22_matches && xy_display_matches && commutator_matches &&
               f12_cleared_matches;
    }
};

TriangularReport triangular_locus(const DeformParams& params, const RelationF& rel);
TriangularReport triangular_locus(const DeformParams& params);

/// Displayed pieces of the upper-triangular relation, exact polynomials.
/// Q is the (1,2) entry of X~^2 Y~^4 with x21 = y21 = 0 and
/// N = (y~11 - y~22) z~12 + y~12 (z~22 - z~11).
Poly triangular_q(const DeformParams& params);
Poly triangular_n(const DeformParams& params);

/// The element f obtained from the off-diagonal relation after x~11 = eps1 y~11^-2,
/// x~22 = eps2 y~22^-2 and multiplying by y~11^4 y~22 z~22. Exact polynomial.
Poly f_element(const DeformParams& params, int eps1, int eps2);

/// Recomputes f from (Q y~22 z~22 + N) by truncated substitution of the two
/// x-diagonal entries, times y~11^4, and compares with f_element at the cap.
bool f_element_cross_check(const DeformParams& params, int eps1, int eps2);

/// The two substitution identities for f: y11 -> y22, and y11 -> -y22 - 2.
struct FSubstitutionReport {
    Poly same_diagonal;       // f with y~11 = y~22
    Poly same_expected;       // (eps1+eps2) x~12 y~22^7 z~22 + y~12 (5 z~22 - z~11) y~22^4
    Poly opposite_diagonal;   // f with y~11 = -y~22
    Poly opposite_expected;   // (-2 y~22 z~12 + y~12 (z~22 - z~11)) y~22^4 + (eps1+eps2) x~12 y~22^7 z~22
    [[nodiscard]] bool same_ok() const { return same_diagonal == same_expected; }
    [[nodiscard]] bool opposite_ok() const { return opposite_diagonal == opposite_expected; }
};
FSubstitutionReport f_substitutions(const DeformParams& params, int eps1, int eps2);

/// Specialization of the relation to the two variables y12, z11.
struct BijektionReport {
    VarSetPtr vars;               // (y12, z11)
    Poly relation;                // f12 computed from the group word in the truncated ring
    Poly closed_form;             // the same relation assembled from its displayed closed form
    bool diagonal_trivial = false;  // f11 = f21 = f22 = 0 in the specialization
    bool polynomial_of_degree_3 = false;  // no term of degree above 3 survives at the cap
    bool matches_closed_form = false;
    bool constant_in_maximal_ideal = false;
    CycloElem coefficient_y12_z11_2;  // coefficient of y12*z11^2
    int sign = 0;                     // +1 or -1 when the coefficient equals sign * psi_z^-1, else 0
};

/// psi values must lie in 1 + m (v(psi - 1) > 0) and satisfy psi_x^2 psi_y^4 = 1.
BijektionReport bijektion_specialization(const CycloElem& psi_x, const CycloElem& psi_y, const CycloElem& psi_z,
                                         const DeformParams& params);

enum class Component { plus, minus };
std::string component_name(Component c);

/// Point of (1+y)^2 = 1: plus for y = 0, minus for y = -2.
Component r1_component(const CycloElem& b);

/// e = -y/2 satisfies e^2 - e = ((1+y)^2 - 1)/4 in Q[y], by exact division.
struct IdempotentReport {
    UPoly quotient;
    bool divisible = false;
};
IdempotentReport r1_idempotent_check();

/// Value of an exact polynomial at a point given by all variable values.
CycloElem evaluate(const Poly& p, const std::map<std::string, CycloElem>& values);

/// The group word of the framed matrices evaluated at a point, which is I
/// exactly when the point satisfies the relation.
Mat2<CycloElem> relation_word_at(const DeformParams& params, const std::map<std::string, CycloElem>& values);

/// Variable values of a numeric triple relative to the framed matrices of `params`.
std::map<std::string, CycloElem> point_values(const DeformParams& params, const Mat2<CycloElem>& x,
                                              const Mat2<CycloElem>& y, const Mat2<CycloElem>& z);

}  // namespace framedef
