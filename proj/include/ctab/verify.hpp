#pragma once

// Cross-validation suite: every identity the library promises, run at
// configurable bounds. Each check pits an independent route against the
// closed forms (brute-force enumeration vs determinants, rational Markov
// solve vs tableau formulas, event simulation vs exact distribution).

#include "ctab/closedforms.hpp"
#include "ctab/determinants.hpp"
#include "ctab/paths.hpp"
#include "ctab/tableaux.hpp"
#include "ctab/tasep.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace ctab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    int max_semi_perimeter = 8;   // shape-bounded checks
    int tasep_max_n = 7;          // exact-solve sweep
    std::uint64_t sim_horizon = 1000000;
    std::uint64_t sim_seed = 20240817;
};

// Reference q-polynomials (descending coefficients) for the two tabled
// specializations of n_mk(n-k,k), n = 6..8.
struct QTableRow {
    int n;
    int k;
    std::vector<long long> qq_desc;  // a=q, b=q, normalized by q^n
    std::vector<long long> q1_desc;  // a=q, b=1, normalized by q^k
};

inline const std::vector<QTableRow>& q_table_reference() {
    static const std::vector<QTableRow> rows = {
        {6, 1, {2, 3, 4, 5, 6, 1}, {1, 2, 3, 4, 5, 6}},
        {6, 2, {20, 30, 28, 20, 6, 1}, {15, 24, 27, 24, 15}},
        {6, 3, {40, 60, 48, 20, 6, 1}, {50, 60, 45, 20}},
        {6, 4, {20, 30, 28, 20, 6, 1}, {50, 40, 15}},
        {6, 5, {2, 3, 4, 5, 6, 1}, {15, 6}},
        {7, 1, {2, 3, 4, 5, 6, 7, 1}, {1, 2, 3, 4, 5, 6, 7}},
        {7, 2, {30, 45, 46, 40, 27, 7, 1}, {21, 35, 42, 42, 35, 21}},
        {7, 3, {100, 150, 130, 75, 27, 7, 1}, {105, 140, 126, 84, 35}},
        {7, 4, {100, 150, 130, 75, 27, 7, 1}, {175, 175, 105, 35}},
        {7, 5, {30, 45, 46, 40, 27, 7, 1}, {105, 70, 21}},
        {7, 6, {2, 3, 4, 5, 6, 7, 1}, {21, 7}},
        {8, 1, {2, 3, 4, 5, 6, 7, 8, 1}, {1, 2, 3, 4, 5, 6, 7, 8}},
        {8, 2, {42, 63, 68, 65, 54, 35, 8, 1}, {28, 48, 60, 64, 60, 48, 28}},
        {8, 3, {210, 315, 292, 205, 110, 35, 8, 1}, {196, 280, 280, 224, 140, 56}},
        {8, 4, {350, 525, 460, 275, 110, 35, 8, 1}, {490, 560, 420, 224, 70}},
        {8, 5, {210, 315, 292, 205, 110, 35, 8, 1}, {490, 420, 210, 56}},
        {8, 6, {42, 63, 68, 65, 54, 35, 8, 1}, {196, 112, 28}},
        {8, 7, {2, 3, 4, 5, 6, 7, 8, 1}, {28, 8}},
    };
    return rows;
}

inline UniPoly unipoly_from_descending(const std::vector<long long>& desc) {
    std::vector<BigInt> d;
    d.reserve(desc.size());
    for (long long v : desc) d.emplace_back(v);
    return UniPoly::from_descending(std::move(d));
}

// Fixtures distilled from the worked examples: a tableau of shape
// (3,2,2,0,0)/4 with total weight a^8 b^5, a path of weight a^4 b^3 on
// (6,4,4,2,0)/9 (total a^9 b^12 with its border), and a tableau/path pair of
// filling weight a^9 b^4 on (11,8,6,6,6,2)/13.
inline CondensedTableau example_tableau_352() {
    CondensedTableau t(Shape({3, 2, 2, 0, 0}, 4));
    t.set(1, 3, Symbol::alpha);
    t.set(2, 1, Symbol::alpha);
    t.set(2, 2, Symbol::alpha);
    t.set(3, 2, Symbol::beta);
    return t;
}
inline WeightedPath example_path_64420() {
    return WeightedPath(Shape({6, 4, 4, 2, 0}, 9), {6, 4, 2, 0, 0});
}
inline WeightedPath example_path_hexrow() {
    return WeightedPath(Shape({11, 8, 6, 6, 6, 2}, 13), {9, 7, 3, 1, 0, 0});
}

namespace checks {

inline CheckResult table_reproduction() {
    CheckResult r{"table-reproduction", true, "", 0};
    int count = 0;
    for (const auto& row : q_table_reference()) {
        UniPoly qq = q_table(row.n, QSubst::qq)[row.k - 1];
        UniPoly q1 = q_table(row.n, QSubst::q1)[row.k - 1];
        if (qq != unipoly_from_descending(row.qq_desc) ||
            q1 != unipoly_from_descending(row.q1_desc)) {
            r.pass = false;
            r.detail = "mismatch at n=" + std::to_string(row.n) + " k=" + std::to_string(row.k);
            return r;
        }
        count += 2;
    }
    r.detail = std::to_string(count) + " polynomials match";
    return r;
}

inline CheckResult catalan_totals(int n_max = 12) {
    CheckResult r{"catalan-totals", true, "", 0};
    for (int n = 0; n <= n_max; ++n) {
        if (z_n(n).eval(1, 1) != Rat(catalan_number(n + 1))) {
            r.pass = false;
            r.detail = "z_" + std::to_string(n) + "(1,1) differs from the Catalan number";
            return r;
        }
    }
    r.detail = "z_n(1,1) = C_{n+1} for n <= " + std::to_string(n_max);
    return r;
}

inline CheckResult narayana_specialization(int n_max = 12) {
    CheckResult r{"narayana-specialization", true, "", 0};
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            if (n_mk(n - k, k).eval(1, 1) != Rat(narayana_number(n, k))) {
                r.pass = false;
                r.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                return r;
            }
    r.detail = "all 0 <= k <= n <= " + std::to_string(n_max);
    return r;
}

inline CheckResult genfun_matches_enumeration(int max_semi_perimeter) {
    CheckResult r{"genfun-vs-enumeration", true, "", 0};
    long shapes = 0;
    for (int n = 0; n <= max_semi_perimeter; ++n) {
        for (const Shape& sh : shapes_with_semi_perimeter(n)) {
            if (genfun(sh) != tableau_weight_sum(sh)) {
                r.pass = false;
                r.detail = "shape " + sh.str();
                return r;
            }
            ++shapes;
        }
    }
    r.detail = std::to_string(shapes) + " shapes, semi-perimeter <= " +
               std::to_string(max_semi_perimeter);
    return r;
}

inline CheckResult path_count_determinants(int max_rows = 5, int max_part = 5) {
    CheckResult r{"path-count-determinants", true, "", 0};
    long count = 0;
    std::vector<int> parts;
    std::function<bool(int)> rec = [&](int remaining) -> bool {
        Shape sh(parts, parts.empty() ? 0 : parts.front());
        long paths = 0;
        enumerate_paths(sh, [&](const WeightedPath&) { ++paths; });
        if (narayana_path_count(sh) != paths) return false;
        ++count;
        if (remaining == 0) return true;
        int hi = parts.empty() ? max_part : parts.back();
        for (int v = hi; v >= 0; --v) {
            parts.push_back(v);
            if (!rec(remaining - 1)) return false;
            parts.pop_back();
        }
        return true;
    };
    if (!rec(max_rows)) {
        Shape sh(parts, parts.empty() ? 0 : parts.front());
        r.pass = false;
        r.detail = "shape " + sh.str();
        return r;
    }
    r.detail = std::to_string(count) + " shapes, rows <= " + std::to_string(max_rows) +
               ", parts <= " + std::to_string(max_part);
    return r;
}

// Free rows of the source tableau that survive once columns >= c are read.
inline int free_rows_after(const CondensedTableau& t, int c) {
    const Shape& sh = t.shape();
    int free = 0;
    for (int r = 1; r <= sh.conj(c); ++r) {
        bool has_beta = false;
        for (int cc = c; cc <= sh.part(r); ++cc)
            if (t.at(r, cc) == Symbol::beta) has_beta = true;
        if (!has_beta) ++free;
    }
    return free;
}

inline CheckResult bijection_roundtrip(int max_semi_perimeter) {
    CheckResult r{"bijection-roundtrip", true, "", 0};
    long tableaux = 0, paths = 0;
    for (int n = 0; n <= max_semi_perimeter; ++n) {
        for (const Shape& sh : shapes_with_semi_perimeter(n)) {
            bool ok = true;
            enumerate_tableaux(sh, [&](const CondensedTableau& t) {
                if (!ok) return;
                ModifiedTableau mod = to_modified(t);
                if (!mod.properties_hold()) ok = false;
                // each beta column records the free rows left after it
                for (int c = 1; ok && c <= sh.cols(); ++c) {
                    int lowest = 0;
                    for (int rr = 1; rr <= sh.conj(c); ++rr)
                        if (mod.grid.at(rr, c) == Symbol::beta) lowest = rr;
                    if (lowest && sh.conj(c) - lowest != free_rows_after(t, c)) ok = false;
                }
                WeightedPath p = tableau_to_path(t);
                if (p.weight() != t.filling_weight()) ok = false;
                if (!(path_to_tableau(p) == t)) ok = false;
                ++tableaux;
            });
            if (ok) {
                enumerate_paths(sh, [&](const WeightedPath& p) {
                    if (!ok) return;
                    CondensedTableau t = path_to_tableau(p);
                    if (t.first_violation().has_value()) ok = false;
                    if (!(tableau_to_path(t) == p)) ok = false;
                    ++paths;
                });
            }
            if (!ok) {
                r.pass = false;
                r.detail = "shape " + sh.str();
                return r;
            }
        }
    }
    r.detail = std::to_string(tableaux) + " tableaux / " + std::to_string(paths) +
               " paths round-trip, semi-perimeter <= " + std::to_string(max_semi_perimeter);
    return r;
}

inline CheckResult stationary_matches_formulas(int n_max = 7) {
    CheckResult r{"stationary-vs-formulas", true, "", 0};
    const std::vector<std::pair<Rat, Rat>> rates = {
        {Rat(1), Rat(1)}, {Rat(1, 2), Rat(1, 3)}, {Rat(2), Rat(5)}};
    long states = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& [a, b] : rates) {
            RateSpec spec(n, a, b);
            Distribution pi = stationary(spec);
            std::vector<Rat> per_k(n + 1, Rat(0));
            for (std::size_t s = 0; s < (1ull << n); ++s) {
                TasepState tau = TasepState::from_bits(s, n);
                Rat exact = pi.at(tau);
                if (exact != prob_state(tau, spec)) {
                    r.pass = false;
                    r.detail = "state " + tau.str() + " at n=" + std::to_string(n);
                    return r;
                }
                per_k[tau.particles()] += exact;
                ++states;
            }
            for (int k = 0; k <= n; ++k)
                if (per_k[k] != prob_k_particles(n, k, spec)) {
                    r.pass = false;
                    r.detail = "particle count k=" + std::to_string(k) +
                               " at n=" + std::to_string(n);
                    return r;
                }
        }
    }
    r.detail = std::to_string(states) + " states across 3 rate pairs, n <= " +
               std::to_string(n_max);
    return r;
}

inline CheckResult closed_form_identities() {
    CheckResult r{"closed-form-identities", true, "", 0};
    for (int m = 0; m <= 5; ++m)
        for (int k = 0; k <= 5; ++k)
            if (!relation_check(m, k)) {
                r.pass = false;
                r.detail = "slice relation fails at m=" + std::to_string(m) +
                           " k=" + std::to_string(k);
                return r;
            }
    for (int m = 2; m <= 5; ++m)
        for (int k = 2; k <= 5; ++k)
            if (!hook_recursion_check(m, k)) {
                r.pass = false;
                r.detail = "hook recursion fails at m=" + std::to_string(m) +
                           " k=" + std::to_string(k);
                return r;
            }
    for (int n = 1; n <= 10; ++n)
        if (z_n(n) != z_n_ballot_form(n)) {
            r.pass = false;
            r.detail = "z_" + std::to_string(n) + " routes disagree";
            return r;
        }
    for (int n = 1; n <= 8; ++n) {
        BivarPoly z = z_n(n);
        for (int s = 1; s <= n; ++s) {
            BigInt expect = exact_div(BigInt(s) * binom(2 * n - s, n), BigInt(2 * n - s));
            for (int t = 0; t <= s; ++t)
                if (z.coeff(n - t, n + t - s) != expect) {
                    r.pass = false;
                    r.detail = "coefficient identity fails at n=" + std::to_string(n) +
                               " s=" + std::to_string(s) + " t=" + std::to_string(t);
                    return r;
                }
        }
    }
    r.detail = "slice relation, hook recursion (m,k <= 5), z_n routes (n <= 10), "
               "coefficient identity (n <= 8)";
    return r;
}

inline CheckResult example_spot_checks() {
    CheckResult r{"example-spot-checks", true, "", 0};
    CondensedTableau t = example_tableau_352();
    if (t.first_violation().has_value() || t.weight() != BivarPoly::mono(8, 5)) {
        r.pass = false;
        r.detail = "shape (3,2,2,0,0)/4 tableau is not valid of weight a^8 b^5";
        return r;
    }
    WeightedPath p4 = example_path_64420();
    if (p4.weight() != BivarPoly::mono(4, 3) ||
        boundary_weight(p4.shape()) * p4.weight() != BivarPoly::mono(9, 12)) {
        r.pass = false;
        r.detail = "path on (6,4,4,2,0)/9 is not of weight a^4 b^3 (total a^9 b^12)";
        return r;
    }
    WeightedPath p6 = example_path_hexrow();
    CondensedTableau t6 = path_to_tableau(p6);
    if (p6.weight() != BivarPoly::mono(9, 4) || t6.filling_weight() != p6.weight() ||
        !(tableau_to_path(t6) == p6)) {
        r.pass = false;
        r.detail = "tableau/path pair on (11,8,6,6,6,2)/13 fails its weight a^9 b^4";
        return r;
    }
    r.detail = "tableau a^8 b^5, path a^4 b^3 (total a^9 b^12), pair a^9 b^4";
    return r;
}

inline CheckResult simulator_statistics(std::uint64_t horizon, std::uint64_t seed) {
    CheckResult r{"simulator-statistics", true, "", 0};
    RateSpec spec(3, Rat(1), Rat(1));
    SimulationResult sim = simulate(spec, horizon, seed);
    Distribution exact = stationary(spec);
    double tv = sim.tv_distance(exact);
    double budget = sim.tv_error_budget();
    std::ostringstream os;
    os.setf(std::ios::scientific);
    os.precision(3);
    os << "tv=" << tv << " budget=" << budget << " (n=3, " << horizon << " events)";
    r.detail = os.str();
    r.pass = tv <= budget;
    return r;
}

}  // namespace checks

inline std::vector<CheckResult> run_all_checks(const VerifyOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    std::vector<CheckResult> out;
    auto timed_run = [&](auto&& fn) {
        auto start = clock::now();
        CheckResult res = fn();
        res.seconds = std::chrono::duration<double>(clock::now() - start).count();
        out.push_back(std::move(res));
    };
    timed_run([] { return checks::table_reproduction(); });
    timed_run([] { return checks::catalan_totals(); });
    timed_run([] { return checks::narayana_specialization(); });
    timed_run([&] { return checks::genfun_matches_enumeration(opt.max_semi_perimeter); });
    timed_run([] { return checks::path_count_determinants(); });
    timed_run([&] { return checks::bijection_roundtrip(opt.max_semi_perimeter); });
    timed_run([&] { return checks::stationary_matches_formulas(opt.tasep_max_n); });
    timed_run([] { return checks::closed_form_identities(); });
    timed_run([] { return checks::example_spot_checks(); });
    timed_run([&] { return checks::simulator_statistics(opt.sim_horizon, opt.sim_seed); });
    return out;
}

}  // namespace ctab
