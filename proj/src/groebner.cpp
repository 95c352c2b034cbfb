#include "framedef/groebner.hpp"

#include <map>
#include <random>

namespace framedef {

namespace {

template <class F>
using P = SparsePoly<F>;

/// The three 2x2 minors of (a b c; d e f) with entries given as polynomials.
template <class F>
std::vector<P<F>> two_by_three_minors(const std::vector<P<F>>& top, const std::vector<P<F>>& bottom) {
    return {top[0] * bottom[1] - top[1] * bottom[0], top[0] * bottom[2] - top[2] * bottom[0],
            top[1] * bottom[2] - top[2] * bottom[1]};
}

template <class F>
std::vector<P<F>> minor_ideal(const VarSetPtr& vars, const std::vector<std::string>& top,
                              const std::vector<std::string>& bottom) {
    std::vector<P<F>> t, b;
    for (const auto& n : top) t.push_back(P<F>::variable(vars, n));
    for (const auto& n : bottom) b.push_back(P<F>::variable(vars, n));
    return two_by_three_minors(t, b);
}

template <class F>
bool all_reduce_to_zero(const std::vector<P<F>>& polys, const GroebnerBasis<F>& gb) {
    return std::all_of(polys.begin(), polys.end(), [&](const P<F>& p) { return reduce(p, gb).is_zero(); });
}

const std::vector<std::string> kTop = {"x", "y", "z"};
const std::vector<std::string> kBottom = {"x21", "y21", "z21"};
const std::vector<std::string> kShiftedTop = {"x12", "y12", "z12"};

/// I' uses x~12 = lambda + x12 and so on, with residues in F2.
bool shift_holds(const VarSetPtr& ring2, const GroebnerBasis<Fp<2>>& gb2, unsigned residues) {
    using F = Fp<2>;
    VarSetPtr ring1 = make_vars({"x12", "x21", "y12", "y21", "z12", "z21"});
    std::vector<F> shift = {F(residues & 1U), F((residues >> 1) & 1U), F((residues >> 2) & 1U)};

    std::vector<P<F>> top, bottom;
    for (std::size_t k = 0; k < 3; ++k) {
        top.push_back(P<F>::constant(ring1, shift[k]) + P<F>::variable(ring1, kShiftedTop[k]));
        bottom.push_back(P<F>::variable(ring1, kBottom[k]));
    }
    std::vector<P<F>> i1 = two_by_three_minors(top, bottom);
    GroebnerBasis<F> gb1 = buchberger(i1, MonomialOrder::natural(MonomialOrder::Kind::degrevlex, 6));

    // I'' -> I': x |-> x~12
    std::map<std::string, SubstValue<F>> forward, backward;
    for (std::size_t k = 0; k < 3; ++k) {
        forward[kTop[k]] = top[k];
        forward[kBottom[k]] = P<F>::variable(ring1, kBottom[k]);
        // I' -> I'': x12 |-> x - lambda (= x + lambda in characteristic 2)
        backward[kShiftedTop[k]] = P<F>::variable(ring2, kTop[k]) - P<F>::constant(ring2, shift[k]);
        backward[kBottom[k]] = P<F>::variable(ring2, kBottom[k]);
    }
    std::vector<P<F>> pushed, pulled;
    for (const auto& g : gb2.generators) pushed.push_back(substitute(g, forward));
    for (const auto& g : gb1.generators) pulled.push_back(substitute(g, backward));
    return all_reduce_to_zero(pushed, gb1) && all_reduce_to_zero(pulled, gb2) &&
           dim_quotient(gb1, 6) == dim_quotient(gb2, 6);
}

}  // namespace

bool DeterminantalReport::passed() const {
    bool permuted = !permuted_dimensions.empty() &&
                    std::all_of(permuted_dimensions.begin(), permuted_dimensions.end(), [](int d) { return d == 4; });
    return dimension_f2 == 4 && dimension_f3 == 4 && permuted && inputs_reduce_to_zero && criterion_holds &&
           basis_reduced && shift_identification;
}

DeterminantalReport determinantal_report(std::uint64_t seed) {
    DeterminantalReport r;
    VarSetPtr ring = make_vars({"x", "x21", "y", "y21", "z", "z21"});
    const auto drl = MonomialOrder::natural(MonomialOrder::Kind::degrevlex, 6);

    auto i2 = minor_ideal<Fp<2>>(ring, kTop, kBottom);
    GroebnerBasis<Fp<2>> gb2 = buchberger(i2, drl);
    r.dimension_f2 = dim_quotient(gb2, 6);
    r.inputs_reduce_to_zero = all_reduce_to_zero(i2, gb2);
    r.criterion_holds = satisfies_buchberger_criterion(gb2);
    r.basis_reduced = is_reduced(gb2);
    for (const auto& g : gb2.generators) r.basis_f2.push_back(g.str());

    auto i3 = minor_ideal<Fp<3>>(ring, kTop, kBottom);
    GroebnerBasis<Fp<3>> gb3 = buchberger(i3, drl);
    r.dimension_f3 = dim_quotient(gb3, 6);
    r.inputs_reduce_to_zero = r.inputs_reduce_to_zero && all_reduce_to_zero(i3, gb3);
    r.criterion_holds = r.criterion_holds && satisfies_buchberger_criterion(gb3);

    std::vector<P<Fp<2>>> two(i2.begin(), i2.begin() + 2);
    r.dimension_two_minors = dim_quotient(buchberger(two, drl), 6);

    std::mt19937_64 rng(seed);
    for (int k = 0; k < 3; ++k) {
        MonomialOrder o = MonomialOrder::natural(k % 2 == 0 ? MonomialOrder::Kind::deglex : MonomialOrder::Kind::degrevlex, 6);
        std::shuffle(o.variable_order.begin(), o.variable_order.end(), rng);
        GroebnerBasis<Fp<2>> g = buchberger(i2, o);
        bool sound = all_reduce_to_zero(i2, g) && satisfies_buchberger_criterion(g);
        r.permuted_dimensions.push_back(sound ? dim_quotient(g, 6) : -2);
    }

    r.shift_identification = true;
    for (unsigned residues = 0; residues < 8; ++residues) {
        r.shift_identification = r.shift_identification && shift_holds(ring, gb2, residues);
    }
    return r;
}

bool determinantal_check() { return determinantal_report().passed(); }

}  // namespace framedef
