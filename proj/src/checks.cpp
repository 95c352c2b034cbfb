#include "framedef/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "framedef/arcs.hpp"
#include "framedef/deform.hpp"
#include "framedef/errors.hpp"
#include "framedef/finite_ring.hpp"
#include "framedef/groebner.hpp"
#include "framedef/points.hpp"

namespace framedef {

namespace {

struct Tuple {
    long long lambda, mu, kappa;
};

struct Task {
    std::string id;
    std::string location;
    json params;
    std::function<std::vector<CheckRecord>()> run;
};

json tuple_params(const Tuple& t, unsigned cap) {
    return {{"lambda", t.lambda}, {"mu", t.mu}, {"kappa", t.kappa}, {"cap", cap}};
}

DeformParams deform_params(const Tuple& t, unsigned cap) {
    return {CycloElem(t.lambda), CycloElem(t.mu), CycloElem(t.kappa), cap};
}

std::vector<long long> axis(const std::optional<long long>& v) {
    return v ? std::vector<long long>{*v} : std::vector<long long>{0, 1};
}

std::vector<Tuple> grid(const RunOptions& o) {
    std::vector<Tuple> out;
    for (long long l : axis(o.lambda))
        for (long long m : axis(o.mu))
            for (long long k : axis(o.kappa)) out.push_back({l, m, k});
    return out;
}

CheckRecord record(const Task& t, bool passed, json witness) {
    CheckRecord r;
    r.id = t.id;
    r.location = t.location;
    r.params = t.params;
    r.passed = passed;
    r.witness = std::move(witness);
    return r;
}

/// Family index 1 or 2 from a points or arcs family name.
int family_index(const std::string& name) {
    if (name == "punkte1" || name == "bogen1") return 1;
    if (name == "punkte2" || name == "bogen2") return 2;
    throw PreconditionViolation("unknown family " + name);
}

std::vector<int> families(const RunOptions& o) {
    return o.family ? std::vector<int>{family_index(*o.family)} : std::vector<int>{1, 2};
}

/// Point and arc parameters: family 1 has mu = 0, family 2 a unit mu (default 1).
/// An explicit --mu selects the matching family.
std::vector<std::pair<int, long long>> family_mu(const RunOptions& o) {
    std::vector<std::pair<int, long long>> out;
    for (int f : families(o)) {
        if (f == 1 && (!o.mu || *o.mu == 0)) out.emplace_back(1, 0);
        if (f == 2 && (!o.mu || *o.mu != 0)) out.emplace_back(2, o.mu ? *o.mu : 1);
    }
    return out;
}

json report_flags_point(const PointReport& r) {
    return {{"relation", r.relation_ok},
            {"relation_via_framed_matrices", r.relation_via_framed},
            {"reduction", r.reduction_ok},
            {"y4_identity", r.y4_identity},
            {"commutator_trivial", r.commutator_trivial},
            {"shortcut", r.shortcut_ok},
            {"triangular_vanishes", r.triangular_vanishes}};
}

// ---- suites -------------------------------------------------------------

void relation_suite(const RunOptions& o, std::vector<Task>& tasks) {
    for (const Tuple& t : grid(o)) {
        Task task{"relation.origin", "relation word X^2 Y^4 [Y,Z] - I: constant terms", tuple_params(t, o.cap), {}};
        task.run = [task, t, cap = o.cap] {
            RelationF rel = compute_relation(deform_params(t, cap));
            CycloElem c11 = rel.f11.constant_term(), c12 = rel.f12.constant_term();
            CycloElem c21 = rel.f21.constant_term(), c22 = rel.f22.constant_term();
            CycloElem expected = CycloElem(2 * t.lambda + 4 * t.mu);
            bool ok = c11.is_zero() && c21.is_zero() && c22.is_zero() && c12 == expected;
            json w = {{"f11_0", to_json(c11)},
                      {"f12_0", to_json(c12)},
                      {"f21_0", to_json(c21)},
                      {"f22_0", to_json(c22)},
                      {"f12_0_expected", to_json(expected)},
                      {"terms", {rel.f11.poly().size(), rel.f12.poly().size(), rel.f21.poly().size(),
                                 rel.f22.poly().size()}}};
            return std::vector<CheckRecord>{record(task, ok, w)};
        };
        tasks.push_back(task);

        for (int dir = 0; dir < 3; ++dir) {
            Tuple to = t;
            (dir == 0 ? to.lambda : dir == 1 ? to.mu : to.kappa) += 2;
            json p = tuple_params(t, o.cap);
            p["target"] = {to.lambda, to.mu, to.kappa};
            Task shift{"relation.shift", "relation under constant shifts x12, y12, z12 by elements of 2O", p, {}};
            shift.run = [shift, t, to, cap = o.cap] {
                ShiftReport r = shift_isomorphism_check(deform_params(t, cap), deform_params(to, cap));
                json w = {{"exact_terms_equal", r.exact_terms_equal},
                          {"adic_terms_checked", r.adic_terms_checked},
                          {"min_margin", to_json(r.min_margin)},
                          {"modulus", "(2, x11, ..., z22)^(cap+1)"}};
                return std::vector<CheckRecord>{record(shift, r.holds, w)};
            };
            tasks.push_back(shift);
        }
    }
}

void delta_suite(const RunOptions& o, std::vector<Task>& tasks) {
    for (const Tuple& t : grid(o)) {
        Task task{"delta.square", "delta^2 - 1 = f11 + f22 + f11 f22 - f12 f21", tuple_params(t, o.cap), {}};
        task.run = [task, t, cap = o.cap] {
            DeltaWitness d = delta_witness(deform_params(t, cap));
            json w = {{"delta_0", to_json(d.delta.constant_term())},
                      {"delta_terms", d.delta.poly().size()},
                      {"combination_terms", d.combination.poly().size()}};
            Task idem = task;
            idem.id = "delta.idempotent";
            idem.location = "((1+delta)/2)^2 - (1+delta)/2 = (delta^2 - 1)/4";
            return std::vector<CheckRecord>{record(task, d.square_identity, w), record(idem, d.idempotent_identity, w)};
        };
        tasks.push_back(task);
    }
}

void triangular_suite(const RunOptions& o, std::vector<Task>& tasks) {
    for (const Tuple& t : grid(o)) {
        Task task{"triangular.locus", "relation on x21 = y21 = z21 = 0", tuple_params(t, o.cap), {}};
        task.run = [task, t, cap = o.cap] {
            TriangularReport r = triangular_locus(deform_params(t, cap));
            json w = {{"f21_zero", r.f21_zero},
                      {"f11_matches", r.f11_matches},
                      {"f22_matches", r.f22_matches},
                      {"xy_display_matches", r.xy_display_matches},
                      {"commutator_matches", r.commutator_matches},
                      {"f12_cleared_matches", r.f12_cleared_matches}};
            return std::vector<CheckRecord>{record(task, r.all(), w)};
        };
        tasks.push_back(task);

        for (int e1 : {1, -1}) {
            for (int e2 : {1, -1}) {
                json p = tuple_params(t, o.cap);
                p["eps"] = {e1, e2};
                Task fe{"triangular.f_element", "f element: coefficient of y12 z11", p, {}};
                fe.run = [fe, t, e1, e2, cap = o.cap] {
                    DeformParams dp = deform_params(t, cap);
                    Poly f = f_element(dp, e1, e2);
                    CycloElem c = f.coefficient_of(monomial_of(*matrix_vars(), {{"y12", 1}, {"z11", 1}}));
                    bool cross = f_element_cross_check(dp, e1, e2);
                    json w = {{"coefficient_y12_z11", to_json(c)}, {"cross_check", cross}, {"terms", f.size()}};
                    FSubstitutionReport s = f_substitutions(dp, e1, e2);
                    Task sub = fe;
                    sub.id = "triangular.substitutions";
                    sub.location = "f element with y~11 = y~22 and with y~11 = -y~22";
                    json ws = {{"same_diagonal", s.same_ok()},
                               {"opposite_diagonal", s.opposite_ok()},
                               {"same_diagonal_value", s.same_diagonal.str()},
                               {"opposite_diagonal_value", s.opposite_diagonal.str()}};
                    return std::vector<CheckRecord>{record(fe, c == CycloElem(-1) && cross, w),
                                                    record(sub, s.same_ok() && s.opposite_ok(), ws)};
                };
                tasks.push_back(fe);
            }
        }
    }
}

// Expected sign data per index n = 1..4.
const int kEps1[] = {1, 1, -1, -1};
const int kEps2[] = {1, -1, -1, 1};
const int kDelta[] = {1, -1, 1, -1};

std::vector<FramedPoint> family_points(PointFamily fam, long long lambda, long long mu, long long kappa) {
    std::vector<FramedPoint> out;
    for (int n = 1; n <= 4; ++n) out.push_back(make_point(fam, n, CycloElem(lambda), CycloElem(mu), CycloElem(kappa)));
    return out;
}

void points_suite(const RunOptions& o, std::vector<Task>& tasks, bool schnitt_only) {
    for (auto [f, mu] : family_mu(o)) {
        PointFamily fam = f == 1 ? PointFamily::punkte1 : PointFamily::punkte2;
        for (long long l : axis(o.lambda)) {
            for (long long k : axis(o.kappa)) {
                json base = {{"family", family_name(fam)}, {"lambda", l}, {"mu", mu}, {"kappa", k}};
                if (schnitt_only) {
                    for (int n = 1; n <= 4; ++n) {
                        json p = base;
                        p["n"] = n;
                        Task task{"schnitt.case", "condition on the upper-triangular locus met by the point", p, {}};
                        task.run = [task, fam, n, l, mu, k] {
                            int c = schnitt_case(make_point(fam, n, CycloElem(l), CycloElem(mu), CycloElem(k)));
                            return std::vector<CheckRecord>{record(task, c >= 1 && c <= 3, {{"case", c}})};
                        };
                        tasks.push_back(task);
                    }
                    continue;
                }
                Task task{"points.sign_pairs", "the four (eps1, eps2) sign pairs of a point family", base, {}};
                task.run = [task, fam, l, mu, k] {
                    std::vector<CheckRecord> out;
                    std::vector<std::pair<std::string, std::string>> seen;
                    int n = 0;
                    for (const FramedPoint& pt : family_points(fam, l, mu, k)) {
                        ++n;
                        PointReport r = verify_point(pt);
                        bool signs = r.eps1 == CycloElem(kEps1[n - 1]) && r.eps2 == CycloElem(kEps2[n - 1]) &&
                                     r.delta == CycloElem(kDelta[n - 1]);
                        seen.emplace_back(r.eps1.str(), r.eps2.str());
                        Task pt_task = task;
                        pt_task.id = "points.verify";
                        pt_task.location = "framed point: relation, reduction, sign invariants";
                        pt_task.params["n"] = n;
                        json w = report_flags_point(r);
                        w["eps1"] = to_json(r.eps1);
                        w["eps2"] = to_json(r.eps2);
                        w["delta"] = to_json(r.delta);
                        w["schnitt_case"] = r.schnitt_case;
                        w["x"] = pt.x.str();
                        w["y"] = pt.y.str();
                        w["z"] = pt.z.str();
                        out.push_back(record(pt_task, r.all() && signs, w));
                    }
                    std::sort(seen.begin(), seen.end());
                    bool distinct = std::unique(seen.begin(), seen.end()) == seen.end() && seen.size() == 4;
                    out.push_back(record(task, distinct, {{"distinct_pairs", seen.size()}}));
                    return out;
                };
                tasks.push_back(task);
            }
        }
    }
}

json certificate_json(const NilpotenceCertificate& c) {
    return {{"degree_checked", c.degree_checked},
            {"min_valuation", to_json(c.min_valuation)},
            {"tail_bound", to_json(c.tail_bound)},
            {"certified", c.certified}};
}

void arcs_suite(const RunOptions& o, std::vector<Task>& tasks) {
    for (auto [f, mu] : family_mu(o)) {
        ArcFamily fam = f == 1 ? ArcFamily::bogen1 : ArcFamily::bogen2;
        for (int n : {1, 2}) {
            for (long long l : axis(o.lambda)) {
                for (long long k : axis(o.kappa)) {
                    json p = {{"family", arc_family_name(fam)}, {"n", n}, {"lambda", l}, {"mu", mu}, {"kappa", k}};
                    Task task{"arcs.verify", "arc of framed matrices over O[[t]] between two points", p, {}};
                    task.run = [task, fam, n, l, mu, k] {
                        Arc arc = make_arc(fam, n, CycloElem(l), CycloElem(mu), CycloElem(k));
                        ArcReport r = verify_arc(arc);
                        json certs = json::array();
                        for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
                        json w = {{"relation", r.relation_ok},
                                  {"power_identities", r.power_identities},
                                  {"commutator", r.commutator_ok},
                                  {"start_matches", r.start_matches},
                                  {"end_matches", r.end_matches},
                                  {"delta_constant", r.delta_constant},
                                  {"nilpotent", r.nilpotent},
                                  {"delta", to_json(r.delta)},
                                  {"start_point", r.start_point},
                                  {"end_point", r.end_point},
                                  {"certificates", certs}};
                        return std::vector<CheckRecord>{record(task, r.all(), w)};
                    };
                    tasks.push_back(task);
                }
            }
        }
    }
    Task id{"arcs.polynomial_identity", "(1-6t^2+4t^3)^2 + t^2(1-t)^2(2+4t)(6-4t) = 1", json::object(), {}};
    id.run = [id] { return std::vector<CheckRecord>{record(id, arc_polynomial_identity(), json::object())}; };
    tasks.push_back(id);
}

void groebner_suite(std::vector<Task>& tasks) {
    Task task{"groebner.determinantal", "2x2 minors of (x y z; x21 y21 z21): dimension of the quotient",
              json::object(), {}};
    task.run = [task] {
        DeterminantalReport r = determinantal_report();
        json w = {{"dimension_f2", r.dimension_f2},
                  {"dimension_f3", r.dimension_f3},
                  {"permuted_dimensions", r.permuted_dimensions},
                  {"inputs_reduce_to_zero", r.inputs_reduce_to_zero},
                  {"buchberger_criterion", r.criterion_holds},
                  {"reduced", r.basis_reduced},
                  {"shift_identification", r.shift_identification},
                  {"basis_f2", r.basis_f2}};
        Task sub = task;
        sub.id = "groebner.two_minors";
        sub.location = "subideal of the first two minors: computed dimension";
        // contained in the full ideal, so its zero set can only be larger
        return std::vector<CheckRecord>{record(task, r.passed(), w),
                                        record(sub, r.dimension_two_minors >= r.dimension_f2,
                                               {{"dimension", r.dimension_two_minors}})};
    };
    tasks.push_back(task);
}

void bijektion_suite(const RunOptions& o, std::vector<Task>& tasks) {
    const unsigned cap = std::max(o.cap, 4U);
    const CycloElem i = CycloElem::imag();
    const std::vector<std::pair<std::string, CycloElem>> psi_x = {{"1", 1}, {"-1", -1}};
    const std::vector<std::pair<std::string, CycloElem>> psi_y = {{"1", 1}, {"i", i}};
    const std::vector<std::pair<std::string, CycloElem>> psi_z = {{"1", 1}, {"-1", -1}, {"i", i}};
    for (const Tuple& t : grid(o)) {
        for (const auto& px : psi_x) {
            for (const auto& py : psi_y) {
                for (const auto& pz : psi_z) {
                    json p = tuple_params(t, cap);
                    p["psi"] = {px.first, py.first, pz.first};
                    Task task{"bijektion.coefficient", "two-variable specialization: coefficient of y12 z11^2", p, {}};
                    task.run = [task, t, cap, x = px.second, y = py.second, z = pz.second] {
                        BijektionReport r = bijektion_specialization(x, y, z, deform_params(t, cap));
                        json w = {{"coefficient_y12_z11_2", to_json(r.coefficient_y12_z11_2)},
                                  {"psi_z_inverse", to_json(field_inverse(z))},
                                  {"sign", r.sign},
                                  {"diagonal_trivial", r.diagonal_trivial},
                                  {"degree_at_most_3", r.polynomial_of_degree_3},
                                  {"matches_closed_form", r.matches_closed_form},
                                  {"constant_in_maximal_ideal", r.constant_in_maximal_ideal},
                                  {"relation", r.relation.str()}};
                        bool ok = r.sign != 0 && r.diagonal_trivial && r.polynomial_of_degree_3 &&
                                  r.matches_closed_form && r.constant_in_maximal_ideal;
                        return std::vector<CheckRecord>{record(task, ok, w)};
                    };
                    tasks.push_back(task);
                }
            }
        }
    }
    Task idem{"bijektion.idempotent", "e = -y/2 is idempotent in Q[y]/((1+y)^2 - 1)", json::object(), {}};
    idem.run = [idem] {
        IdempotentReport r = r1_idempotent_check();
        bool comps = r1_component(CycloElem(0)) == Component::plus && r1_component(CycloElem(-2)) == Component::minus;
        json w = {{"quotient", r.quotient.str()}, {"divisible", r.divisible}, {"components_separated", comps}};
        return std::vector<CheckRecord>{record(idem, r.divisible && comps, w)};
    };
    tasks.push_back(idem);
}

void finite_suite(std::vector<Task>& tasks) {
    const std::vector<std::pair<FiniteRing, std::uint64_t>> rings = {
        {FiniteRing::integers_mod(2), 2}, {FiniteRing::dual_f2(), 32}, {FiniteRing::integers_mod(4), 32}};
    for (const auto& [ring, expected] : rings) {
        Task task{"finite.fiber", "matrices of GL2(A) reducing to (1 *; 0 1): subgroup order",
                  {{"ring", ring.name()}}, {}};
        task.run = [task, ring = ring, expected = expected] {
            UnipotentFiber f = unipotent_fiber(ring);
            json w = {{"order", f.order},
                      {"expected", expected},
                      {"closed_under_products", f.closed_under_products},
                      {"closed_under_inverses", f.closed_under_inverses},
                      {"power_of_two", f.power_of_two}};
            bool ok = f.order == expected && f.closed_under_products && f.closed_under_inverses && f.power_of_two;
            return std::vector<CheckRecord>{record(task, ok, w)};
        };
        tasks.push_back(task);
    }
    for (unsigned n : {2U, 3U}) {
        FiniteRing ring = FiniteRing::integers_mod(n);
        Task task{"finite.commute", "minor criterion for AB = BA, all pairs of matrices", {{"ring", ring.name()}}, {}};
        task.run = [task, ring] {
            auto all = all_matrices(ring);
            std::uint64_t pairs = 0, agree = 0, commuting = 0;
            for (const auto& a : all) {
                for (const auto& b : all) {
                    bool direct = a * b == b * a;
                    ++pairs;
                    commuting += direct ? 1 : 0;
                    agree += commute_criterion(a, b) == direct ? 1 : 0;
                }
            }
            json w = {{"pairs", pairs}, {"agree", agree}, {"commuting", commuting}};
            return std::vector<CheckRecord>{record(task, agree == pairs, w)};
        };
        tasks.push_back(task);
    }
}

void collect(const std::string& suite, const RunOptions& o, std::vector<Task>& tasks) {
    if (suite == "relation") relation_suite(o, tasks);
    else if (suite == "delta") delta_suite(o, tasks);
    else if (suite == "triangular") triangular_suite(o, tasks);
    else if (suite == "points") points_suite(o, tasks, false);
    else if (suite == "schnitt") points_suite(o, tasks, true);
    else if (suite == "arcs") arcs_suite(o, tasks);
    else if (suite == "groebner") groebner_suite(tasks);
    else if (suite == "bijektion") bijektion_suite(o, tasks);
    else if (suite == "finite") finite_suite(tasks);
    else if (suite == "all") {
        for (const auto& s : suite_names())
            if (s != "all") collect(s, o, tasks);
    } else {
        throw PreconditionViolation("unknown subcommand " + suite);
    }
}

std::vector<CheckRecord> execute(const Task& t) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckRecord> out;
    try {
        out = t.run();
    } catch (const std::exception& e) {
        out = {record(t, false, {{"error", e.what()}})};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : out) r.seconds = s / static_cast<double>(out.size());
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"relation", "delta",     "triangular", "points", "arcs",
                                                   "schnitt",  "groebner", "bijektion",  "finite", "all"};
    return names;
}

void validate_options(const std::string& suite, const RunOptions& o) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw PreconditionViolation("unknown subcommand " + suite);
    }
    for (const auto* v : {&o.lambda, &o.mu, &o.kappa}) {
        if (!*v) continue;
        if (**v != 0 && **v % 2 == 0) throw PreconditionViolation("parameter must be 0 or odd");
        if (suite == "all" && **v != 0 && **v != 1) throw PreconditionViolation("'all' runs on the {0,1} grid");
    }
    if (o.family) family_index(*o.family);
    if (o.cap < 1) throw PreconditionViolation("cap must be positive");
    if (o.jobs < 1) throw PreconditionViolation("jobs must be positive");
}

VerificationReport run_suite(const std::string& suite, const RunOptions& options) {
    validate_options(suite, options);
    std::vector<Task> tasks;
    collect(suite, options, tasks);

    std::vector<std::vector<CheckRecord>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = execute(tasks[k]);
    };
    unsigned n = std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    VerificationReport report;
    report.subcommand = suite;
    report.cap = options.cap;
    for (auto& batch : results)
        for (auto& r : batch) report.records.push_back(std::move(r));
    report.sort();
    return report;
}

}  // namespace framedef
