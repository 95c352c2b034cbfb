#include "framedef/report.hpp"

#include <algorithm>

namespace framedef {

json to_json(const Rational& r) { return r.fraction_str(); }

json to_json(const CycloElem& c) {
    json out = json::array();
    for (std::size_t i = 0; i < 4; ++i) out.push_back(c[i].fraction_str());
    return out;
}

json to_json(const Val& v) { return v.is_infinite() ? std::string("inf") : v.value().fraction_str(); }

void VerificationReport::sort() {
    std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.params.dump() < b.params.dump();
    });
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.passed; }));
}

json VerificationReport::to_json(bool with_timing) const {
    json checks = json::array();
    json timing = json::array();
    for (const auto& r : records) {
        checks.push_back({{"id", r.id},
                          {"location", r.location},
                          {"params", r.params},
                          {"status", r.passed ? "pass" : "fail"},
                          {"witness", r.witness}});
        timing.push_back({{"id", r.id}, {"params", r.params}, {"seconds", r.seconds}});
    }
    json doc = {{"version", kVersion},
                {"subcommand", subcommand},
                {"cap", cap},
                {"summary", {{"total", records.size()}, {"passed", records.size() - failures()}, {"failed", failures()}}},
                {"checks", checks}};
    if (with_timing) doc["timing"] = timing;
    return doc;
}

}  // namespace framedef
