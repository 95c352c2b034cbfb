#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "framedef/cyclo.hpp"
#include "framedef/rational.hpp"

namespace framedef {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

/// One executed check.
struct CheckRecord {
    std::string id;
    std::string location;  // which statement of the theory the check reproduces
    json params = json::object();
    bool passed = false;
    json witness = json::object();
    double seconds = 0.0;  // reported in the timing section only
};

/// Records of one run. Serialization sorts by id, then by params.
struct VerificationReport {
    std::string subcommand;
    unsigned cap = 6;
    std::vector<CheckRecord> records;

    void sort();
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::size_t failures() const;
    /// Full document; the "timing" member is the only run-dependent part.
    [[nodiscard]] json to_json(bool with_timing = true) const;
};

json to_json(const Rational& r);   // "num/den"
json to_json(const CycloElem& c);  // four "num/den" strings, coefficients of 1, w, w^2, w^3
json to_json(const Val& v);        // "num/den" or "inf"

}  // namespace framedef
