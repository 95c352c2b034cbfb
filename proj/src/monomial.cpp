#include "framedef/monomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "framedef/errors.hpp"

namespace framedef {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > Monomial::kMaxVars) throw std::invalid_argument("too many variables");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name " + n);
    }
}

std::size_t VarSet::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw UnboundVariable("unknown variable " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

bool VarSet::contains(const std::string& name) const noexcept {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

VarSetPtr make_vars(std::vector<std::string> names) { return std::make_shared<const VarSet>(std::move(names)); }

const VarSetPtr& matrix_vars() {
    static const VarSetPtr vars = make_vars(
        {"x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22", "z11", "z12", "z21", "z22"});
    return vars;
}

bool same_ring(const VarSetPtr& a, const VarSetPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("exponent vector too long");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > kMaxExp) throw std::overflow_error("exponent exceeds monomial field width");
        bits |= static_cast<std::uint64_t>(exps[i]) << shift(i);
    }
    return Monomial(bits);
}

Monomial Monomial::variable(std::size_t index, unsigned exp) {
    if (index >= kMaxVars) throw std::out_of_range("variable index");
    if (exp > kMaxExp) throw std::overflow_error("exponent exceeds monomial field width");
    return Monomial(static_cast<std::uint64_t>(exp) << shift(index));
}

unsigned Monomial::degree() const noexcept {
    unsigned d = 0;
    std::uint64_t b = bits_;
    while (b != 0) {
        d += static_cast<unsigned>(b & kMaxExp);
        b >>= kBits;
    }
    return d;
}

std::vector<unsigned> Monomial::exponents(std::size_t nvars) const {
    std::vector<unsigned> e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = exponent(i);
    return e;
}

bool Monomial::divides(Monomial other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (exponent(i) > other.exponent(i)) return false;
    }
    return true;
}

Monomial Monomial::lcm(Monomial other) const noexcept {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        bits |= static_cast<std::uint64_t>(std::max(exponent(i), other.exponent(i))) << shift(i);
    }
    return Monomial(bits);
}

bool Monomial::coprime(Monomial other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (exponent(i) != 0 && other.exponent(i) != 0) return false;
    }
    return true;
}

std::string Monomial::str(const VarSet& vars) const {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        unsigned e = exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.name(i) + "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

}  // namespace framedef
