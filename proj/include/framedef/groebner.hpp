#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "framedef/errors.hpp"
#include "framedef/sparse_poly.hpp"

namespace framedef {

/// Prime field Z/P for small P.
template <unsigned P>
class Fp {
    static_assert(P >= 2 && P < (1U << 15), "small prime expected");

public:
    constexpr Fp() noexcept = default;
    constexpr Fp(long long v) noexcept  // NOLINT(google-explicit-constructor)
        : v_(static_cast<unsigned>(((v % static_cast<long long>(P)) + P) % P)) {}

    [[nodiscard]] constexpr unsigned value() const noexcept { return v_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return v_ == 0; }

    /// a^(P-2); throws DivisionByZero on 0.
    [[nodiscard]] Fp inverse() const {
        if (v_ == 0) throw DivisionByZero("inverse of 0 in F_p");
        Fp r(1), b(*this);
        for (unsigned e = P - 2; e > 0; e >>= 1) {
            if (e & 1U) r *= b;
            b *= b;
        }
        return r;
    }

    constexpr Fp operator-() const noexcept { return Fp(static_cast<long long>(P - v_)); }
    constexpr Fp& operator+=(Fp o) noexcept {
        v_ = (v_ + o.v_) % P;
        return *this;
    }
    constexpr Fp& operator-=(Fp o) noexcept {
        v_ = (v_ + P - o.v_) % P;
        return *this;
    }
    constexpr Fp& operator*=(Fp o) noexcept {
        v_ = (v_ * o.v_) % P;
        return *this;
    }
    Fp& operator/=(Fp o) { return *this *= o.inverse(); }

    friend constexpr Fp operator+(Fp a, Fp b) noexcept { return a += b; }
    friend constexpr Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
    friend constexpr Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend constexpr bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Fp a, Fp b) noexcept { return a.v_ != b.v_; }

private:
    unsigned v_ = 0;
};

template <unsigned P>
bool is_zero(const Fp<P>& a) {
    return a.is_zero();
}
template <unsigned P>
std::string to_canonical(const Fp<P>& a) {
    return std::to_string(a.value());
}

/// Graded monomial order: total degree first, then lexicographic (deglex) or
/// reverse lexicographic from the last variable (degrevlex) in `variable_order`.
struct MonomialOrder {
    enum class Kind { degrevlex, deglex };
    Kind kind = Kind::degrevlex;
    std::vector<std::size_t> variable_order;  // ring indices from most to least significant

    static MonomialOrder natural(Kind kind, std::size_t nvars) {
        MonomialOrder o;
        o.kind = kind;
        o.variable_order.resize(nvars);
        std::iota(o.variable_order.begin(), o.variable_order.end(), 0);
        return o;
    }

    /// a > b
    [[nodiscard]] bool greater(Monomial a, Monomial b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        if (kind == Kind::deglex) {
            for (std::size_t i : variable_order) {
                if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
            }
            return false;
        }
        for (auto it = variable_order.rbegin(); it != variable_order.rend(); ++it) {
            if (a.exponent(*it) != b.exponent(*it)) return a.exponent(*it) < b.exponent(*it);
        }
        return false;
    }
};

template <class F>
struct GroebnerBasis {
    std::vector<SparsePoly<F>> generators;
    MonomialOrder order;
    bool reduced = false;
    std::size_t pairs_considered = 0;
    std::size_t pairs_skipped_coprime = 0;
};

namespace gb_detail {

// Polynomial as terms sorted by decreasing order.
template <class F>
using Terms = std::vector<std::pair<Monomial, F>>;

template <class F>
Terms<F> to_terms(const SparsePoly<F>& p, const MonomialOrder& o) {
    Terms<F> t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) { return o.greater(a.first, b.first); });
    return t;
}

template <class F>
SparsePoly<F> from_terms(const Terms<F>& t, const VarSetPtr& vars) {
    return SparsePoly<F>::from_terms(vars, t);
}

/// a - c * m * b, terms kept in order.
template <class F>
Terms<F> sub_scaled(const Terms<F>& a, F c, Monomial m, const Terms<F>& b, const MonomialOrder& o) {
    Terms<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial mb = m * b[j].first;
        if (i == a.size() || o.greater(mb, a[i].first)) {
            out.emplace_back(mb, -(c * b[j].second));
            ++j;
        } else if (o.greater(a[i].first, mb)) {
            out.push_back(a[i++]);
        } else {
            F v = a[i].second - c * b[j].second;
            if (!v.is_zero()) out.emplace_back(mb, v);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Full normal form of f modulo g.
template <class F>
Terms<F> normal_form(Terms<F> f, const std::vector<Terms<F>>& g, const MonomialOrder& o) {
    Terms<F> rem;
    while (!f.empty()) {
        bool divided = false;
        for (const auto& h : g) {
            if (h.empty()) continue;
            if (h[0].first.divides(f[0].first)) {
                F c = f[0].second / h[0].second;
                f = sub_scaled(f, c, h[0].first.quotient_of(f[0].first), h, o);
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem.push_back(f[0]);
            f.erase(f.begin());
        }
    }
    return rem;
}

template <class F>
Terms<F> s_poly(const Terms<F>& a, const Terms<F>& b, const MonomialOrder& o) {
    Monomial l = a[0].first.lcm(b[0].first);
    Terms<F> sa;
    for (const auto& [m, c] : a) sa.emplace_back(a[0].first.quotient_of(l) * m, c / a[0].second);
    return sub_scaled(sa, F(1) / b[0].second, b[0].first.quotient_of(l), b, o);
}

template <class F>
void make_monic(Terms<F>& t) {
    if (t.empty()) return;
    F inv = F(1) / t[0].second;
    for (auto& [m, c] : t) c *= inv;
}

}  // namespace gb_detail

/// Reduced Groebner basis by Buchberger's algorithm with the normal selection
/// strategy and the coprime leading-monomial criterion.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<SparsePoly<F>>& gens, const MonomialOrder& order) {
    using namespace gb_detail;
    VarSetPtr vars = gens.empty() ? nullptr : gens.front().vars();
    GroebnerBasis<F> out;
    out.order = order;
    std::vector<Terms<F>> g;
    for (const auto& p : gens) {
        Terms<F> t = normal_form(to_terms(p, order), g, order);
        if (!t.empty()) {
            make_monic(t);
            g.push_back(std::move(t));
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        // normal selection: smallest lcm of leading monomials
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
            Monomial lp = g[p.first][0].first.lcm(g[p.second][0].first);
            Monomial lq = g[q.first][0].first.lcm(g[q.second][0].first);
            return order.greater(lq, lp);
        });
        auto [i, j] = *best;
        pairs.erase(best);
        ++out.pairs_considered;
        if (g[i][0].first.coprime(g[j][0].first)) {
            ++out.pairs_skipped_coprime;
            continue;
        }
        Terms<F> h = normal_form(s_poly(g[i], g[j], order), g, order);
        if (h.empty()) continue;
        make_monic(h);
        g.push_back(std::move(h));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    // minimize, then interreduce
    std::vector<Terms<F>> minimal;
    for (std::size_t k = 0; k < g.size(); ++k) {
        bool redundant = false;
        for (std::size_t l = 0; l < g.size() && !redundant; ++l) {
            if (l == k) continue;
            bool divides = g[l][0].first.divides(g[k][0].first);
            // equal leading monomials: keep the first one only
            if (divides && (g[l][0].first != g[k][0].first || l < k)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[k]);
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Terms<F>> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        Terms<F> tail(minimal[k].begin() + 1, minimal[k].end());
        Terms<F> r = normal_form(tail, others, order);
        r.insert(r.begin(), minimal[k][0]);
        minimal[k] = std::move(r);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Terms<F>& a, const Terms<F>& b) { return order.greater(b[0].first, a[0].first); });
    for (const auto& t : minimal) out.generators.push_back(from_terms(t, vars));
    out.reduced = true;
    return out;
}

/// Normal form of p modulo the basis.
template <class F>
SparsePoly<F> reduce(const SparsePoly<F>& p, const GroebnerBasis<F>& gb) {
    using namespace gb_detail;
    std::vector<Terms<F>> g;
    for (const auto& q : gb.generators) g.push_back(to_terms(q, gb.order));
    return from_terms(normal_form(to_terms(p, gb.order), g, gb.order), p.vars());
}

/// Leading monomial under the basis order.
template <class F>
Monomial leading_monomial(const SparsePoly<F>& p, const MonomialOrder& o) {
    if (p.is_zero()) throw PreconditionViolation("zero polynomial has no leading monomial");
    Monomial best = p.terms().front().first;
    for (const auto& t : p.terms())
        if (o.greater(t.first, best)) best = t.first;
    return best;
}

/// Every S-polynomial of the basis reduces to zero.
template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
    using namespace gb_detail;
    std::vector<Terms<F>> g;
    for (const auto& q : gb.generators) g.push_back(to_terms(q, gb.order));
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!normal_form(s_poly(g[i], g[j], gb.order), g, gb.order).empty()) return false;
    return true;
}

/// Reduced: monic, and no term of a generator is divisible by another generator's leading monomial.
template <class F>
bool is_reduced(const GroebnerBasis<F>& gb) {
    std::vector<Monomial> lm;
    for (const auto& p : gb.generators) lm.push_back(leading_monomial(p, gb.order));
    for (std::size_t k = 0; k < gb.generators.size(); ++k) {
        if (gb.generators[k].coefficient_of(lm[k]) != F(1)) return false;
        for (const auto& [m, c] : gb.generators[k].terms())
            for (std::size_t l = 0; l < lm.size(); ++l)
                if (l != k && lm[l].divides(m)) return false;
    }
    return true;
}

/// Krull dimension of k[x_1..x_n]/I from the leading ideal: the size of a
/// largest variable set containing the support of no leading monomial.
/// The unit ideal gives -1.
template <class F>
int dim_quotient(const GroebnerBasis<F>& gb, std::size_t num_vars) {
    if (num_vars > Monomial::kMaxVars) throw PreconditionViolation("too many variables");
    std::vector<std::uint32_t> supports;
    for (const auto& p : gb.generators) {
        Monomial m = leading_monomial(p, gb.order);
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < num_vars; ++i)
            if (m.exponent(i) > 0) s |= 1U << i;
        if (s == 0) return -1;
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t set = 0; set < (1U << num_vars); ++set) {
        int size = __builtin_popcount(set);
        if (size <= best) continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [set](std::uint32_t s) { return (s & set) == s; });
        if (independent) best = size;
    }
    return best;
}

/// Outcome of the determinantal-ideal checks.
struct DeterminantalReport {
    int dimension_f2 = 0;
    int dimension_f3 = 0;
    int dimension_two_minors = 0;       // subideal of the first two minors, as computed
    std::vector<int> permuted_dimensions;  // F2, three shuffled variable orders
    bool inputs_reduce_to_zero = false;
    bool criterion_holds = false;
    bool basis_reduced = false;
    bool shift_identification = false;  // I' <-> I'' for all 8 residues of (lambda, mu, kappa)
    std::vector<std::string> basis_f2;  // canonical strings of the F2 basis (degrevlex)
    [[nodiscard]] bool passed() const;
};

/// The 2x2 minors of (x y z; x21 y21 z21) over F2 in six variables.
DeterminantalReport determinantal_report(std::uint64_t seed = 20240601);
bool determinantal_check();

}  // namespace framedef
