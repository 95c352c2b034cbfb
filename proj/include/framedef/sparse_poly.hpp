#pragma once

#include <algorithm>
#include <initializer_list>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "framedef/errors.hpp"
#include "framedef/monomial.hpp"

namespace framedef {

namespace detail {

// Unqualified calls so the coefficient ring's hooks are found by ADL.
template <class C>
bool coeff_is_zero(const C& c) {
    return is_zero(c);
}

template <class C>
std::string coeff_str(const C& c) {
    return to_canonical(c);
}

}  // namespace detail

/// Sparse multivariate polynomial over a commutative coefficient ring C.
///
/// C provides +, -, *, ==, construction from an integer, and the free
/// functions is_zero(c) and to_canonical(c). Terms are kept sorted by packed
/// monomial with no zero coefficients.
template <class C>
class SparsePoly {
public:
    using Term = std::pair<Monomial, C>;

    SparsePoly() = default;
    explicit SparsePoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static SparsePoly constant(VarSetPtr vars, C c) {
        SparsePoly p(std::move(vars));
        if (!detail::coeff_is_zero(c)) p.terms_.emplace_back(Monomial(), std::move(c));
        return p;
    }

    static SparsePoly variable(VarSetPtr vars, const std::string& name) {
        Monomial m = Monomial::variable(vars->index_of(name));
        SparsePoly p(std::move(vars));
        p.terms_.emplace_back(m, C(1));
        return p;
    }

    static SparsePoly monomial(VarSetPtr vars, Monomial m, C c) {
        SparsePoly p(std::move(vars));
        if (!detail::coeff_is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        return p;
    }

    /// Builds from unsorted terms, combining duplicates and dropping zeros.
    static SparsePoly from_terms(VarSetPtr vars, std::vector<Term> terms) {
        SparsePoly p(std::move(vars));
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (detail::coeff_is_zero(p.terms_.back().second)) p.terms_.pop_back();
            } else if (!detail::coeff_is_zero(t.second)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static SparsePoly from_map(VarSetPtr vars, std::unordered_map<std::uint64_t, C>&& acc) {
        SparsePoly p(std::move(vars));
        p.terms_.reserve(acc.size());
        for (auto& [bits, c] : acc) {
            if (!detail::coeff_is_zero(c)) p.terms_.emplace_back(Monomial(bits), std::move(c));
        }
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        return p;
    }

    [[nodiscard]] const VarSetPtr& vars() const noexcept { return vars_; }
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    [[nodiscard]] C coefficient_of(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Monomial key) { return t.first < key; });
        if (it != terms_.end() && it->first == m) return it->second;
        return C(0);
    }

    [[nodiscard]] C constant_term() const { return coefficient_of(Monomial()); }

    /// Largest total degree, or -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const noexcept {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.degree()));
        return d;
    }

    [[nodiscard]] std::array<unsigned, Monomial::kMaxVars> max_exponents() const noexcept {
        std::array<unsigned, Monomial::kMaxVars> m{};
        for (const auto& t : terms_) {
            for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) m[i] = std::max(m[i], t.first.exponent(i));
        }
        return m;
    }

    /// Drops every term of total degree above cap.
    [[nodiscard]] SparsePoly truncated(unsigned cap) const {
        SparsePoly p(vars_);
        for (const auto& t : terms_) {
            if (t.first.degree() <= cap) p.terms_.push_back(t);
        }
        return p;
    }

    SparsePoly operator-() const {
        SparsePoly p(*this);
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }

    SparsePoly& operator+=(const SparsePoly& rhs) { return *this = merge(*this, rhs, false); }
    SparsePoly& operator-=(const SparsePoly& rhs) { return *this = merge(*this, rhs, true); }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b, kNoCap); }

    friend SparsePoly operator*(const C& s, const SparsePoly& a) {
        SparsePoly p(a.vars_);
        if (detail::coeff_is_zero(s)) return p;
        p.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) {
            C c = s * t.second;
            if (!detail::coeff_is_zero(c)) p.terms_.emplace_back(t.first, std::move(c));
        }
        return p;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return same_ring(a.vars_, b.vars_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    [[nodiscard]] SparsePoly pow(unsigned e) const {
        SparsePoly result = constant(vars_, C(1));
        for (unsigned k = 0; k < e; ++k) result = result * *this;
        return result;
    }

    /// Product with all terms of total degree above cap discarded.
    static SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, unsigned cap) {
        if (!same_ring(a.vars_, b.vars_)) throw IncompatibleRings("polynomials from different rings");
        SparsePoly out(a.vars_);
        if (a.is_zero() || b.is_zero()) return out;
        auto ma = a.max_exponents();
        auto mb = b.max_exponents();
        for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) {
            if (ma[i] + mb[i] > Monomial::kMaxExp) throw std::overflow_error("monomial exponent overflow");
        }
        // b's terms ordered by degree so the inner loop can stop at the cap.
        std::vector<std::pair<unsigned, std::size_t>> bdeg;
        bdeg.reserve(b.terms_.size());
        for (std::size_t j = 0; j < b.terms_.size(); ++j) bdeg.emplace_back(b.terms_[j].first.degree(), j);
        std::sort(bdeg.begin(), bdeg.end());

        if (a.terms_.size() == 1 || b.terms_.size() == 1) {
            // Distinct monomials stay distinct under multiplication by one monomial.
            std::vector<Term> terms;
            for (const auto& ta : a.terms_) {
                unsigned da = ta.first.degree();
                for (const auto& [db, j] : bdeg) {
                    if (da + db > cap) break;
                    const auto& tb = b.terms_[j];
                    C c = ta.second * tb.second;
                    if (!detail::coeff_is_zero(c)) terms.emplace_back(ta.first * tb.first, std::move(c));
                }
            }
            std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
            out.terms_ = std::move(terms);
            return out;
        }

        std::unordered_map<std::uint64_t, C> acc;
        acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1U << 20));
        for (const auto& ta : a.terms_) {
            unsigned da = ta.first.degree();
            for (const auto& [db, j] : bdeg) {
                if (da + db > cap) break;
                const auto& tb = b.terms_[j];
                auto [it, inserted] = acc.try_emplace((ta.first * tb.first).bits(), ta.second);
                if (inserted) {
                    it->second *= tb.second;
                } else {
                    it->second += ta.second * tb.second;
                }
            }
        }
        return from_map(a.vars_, std::move(acc));
    }

    /// Canonical text: terms by ascending total degree, then lexicographically
    /// descending exponent vector; "coef*var^e*...". Byte-stable.
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const Term*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_) order.push_back(&t);
        std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
            unsigned dx = x->first.degree(), dy = y->first.degree();
            if (dx != dy) return dx < dy;
            return y->first < x->first;
        });
        std::string out;
        for (const Term* t : order) {
            if (!out.empty()) out += " + ";
            out += detail::coeff_str(t->second);
            if (!t->first.is_one()) out += "*" + t->first.str(*vars_);
        }
        return out;
    }

private:
    static constexpr unsigned kNoCap = ~0U;

    static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
        if (!same_ring(a.vars_, b.vars_)) throw IncompatibleRings("polynomials from different rings");
        SparsePoly out(a.vars_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
                ++j;
            } else {
                C c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
                if (!detail::coeff_is_zero(c)) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }

    VarSetPtr vars_;
    std::vector<Term> terms_;
};

template <class C>
bool is_zero(const SparsePoly<C>& p) {
    return p.is_zero();
}
template <class C>
SparsePoly<C> zero_like(const SparsePoly<C>& p) {
    return SparsePoly<C>(p.vars());
}
template <class C>
SparsePoly<C> one_like(const SparsePoly<C>& p) {
    return SparsePoly<C>::constant(p.vars(), C(1));
}
/// Only nonzero constants are invertible in a polynomial ring over a field.
template <class C>
SparsePoly<C> unit_inverse(const SparsePoly<C>& p) {
    if (p.total_degree() != 0) throw NotAUnit("non-constant polynomial is not a unit");
    return SparsePoly<C>::constant(p.vars(), C(1) / p.constant_term());
}
template <class C>
std::string to_canonical(const SparsePoly<C>& p) {
    return p.str();
}

/// Exponent vector helper: monomial from (variable name, exponent) pairs.
inline Monomial monomial_of(const VarSet& vars, std::initializer_list<std::pair<const char*, unsigned>> powers) {
    std::vector<unsigned> e(vars.size(), 0);
    for (const auto& [name, k] : powers) e[vars.index_of(name)] += k;
    return Monomial::from_exponents(e);
}

template <class C>
C coefficient_of(const SparsePoly<C>& a, Monomial m) {
    return a.coefficient_of(m);
}

/// Value assigned to a variable by substitute: a polynomial or a coefficient constant.
template <class C>
using SubstValue = std::variant<SparsePoly<C>, C>;

namespace detail {

/// Shared substitution driver; `mul` multiplies two polynomials of the target ring.
template <class C, class Mul>
SparsePoly<C> substitute_with(const SparsePoly<C>& a, const std::map<std::string, SubstValue<C>>& assignment,
                              const VarSetPtr& target, Mul mul) {
    const VarSet& src = *a.vars();
    const std::size_t n = src.size();
    std::vector<const SubstValue<C>*> value(n, nullptr);
    std::vector<bool> identity(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = assignment.find(src.name(i));
        if (it == assignment.end()) continue;
        value[i] = &it->second;
        if (const auto* p = std::get_if<SparsePoly<C>>(&it->second)) {
            if (!same_ring(p->vars(), target)) throw IncompatibleRings("substitution values from different rings");
            if (same_ring(a.vars(), target) && p->size() == 1 && p->terms()[0].first == Monomial::variable(i) &&
                p->terms()[0].second == C(1)) {
                identity[i] = true;
            }
        }
    }
    auto max_exp = a.max_exponents();
    for (std::size_t i = 0; i < n; ++i) {
        if (max_exp[i] > 0 && value[i] == nullptr) throw UnboundVariable("no value for variable " + src.name(i));
    }
    // powers[i][e] = value_i^e, built lazily
    std::vector<std::vector<SparsePoly<C>>> powers(n);
    auto power_of = [&](std::size_t i, unsigned e) -> const SparsePoly<C>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(SparsePoly<C>::constant(target, C(1)));
        while (cache.size() <= e) {
            const auto& v = *value[i];
            SparsePoly<C> base = std::holds_alternative<C>(v) ? SparsePoly<C>::constant(target, std::get<C>(v))
                                                              : std::get<SparsePoly<C>>(v);
            cache.push_back(mul(cache.back(), base));
        }
        return cache[e];
    };
    // Group terms by the exponents of the non-identity variables.
    std::map<std::vector<unsigned>, std::vector<std::pair<Monomial, C>>> groups;
    for (const auto& [m, c] : a.terms()) {
        std::vector<unsigned> key(n, 0);
        std::uint64_t rest = 0;
        for (std::size_t i = 0; i < n; ++i) {
            unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (identity[i]) {
                rest += Monomial::variable(i, e).bits();
            } else {
                key[i] = e;
            }
        }
        groups[key].emplace_back(Monomial(rest), c);
    }
    SparsePoly<C> result(target);
    for (auto& [key, rest_terms] : groups) {
        SparsePoly<C> factor = SparsePoly<C>::constant(target, C(1));
        for (std::size_t i = 0; i < n; ++i) {
            if (key[i] != 0) factor = mul(factor, power_of(i, key[i]));
        }
        SparsePoly<C> rest = SparsePoly<C>::from_terms(target, std::move(rest_terms));
        result += mul(rest, factor);
    }
    return result;
}

}  // namespace detail

/// Ring homomorphism sending each variable of a's ring to the assigned value.
/// All polynomial values must live in one common target ring.
template <class C>
SparsePoly<C> substitute(const SparsePoly<C>& a, const std::map<std::string, SubstValue<C>>& assignment) {
    VarSetPtr target = a.vars();
    for (const auto& [name, v] : assignment) {
        if (const auto* p = std::get_if<SparsePoly<C>>(&v)) {
            target = p->vars();
            break;
        }
    }
    return detail::substitute_with(a, assignment, target,
                                   [](const SparsePoly<C>& x, const SparsePoly<C>& y) { return x * y; });
}

}  // namespace framedef
