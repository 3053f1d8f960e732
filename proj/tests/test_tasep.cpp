#include "ctab/tasep.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace ctab;

namespace {

Rat find_rate(const SparseRatMatrix& q, std::size_t from, std::size_t to) {
    for (const auto& [j, v] : q.rows[from])
        if (j == to) return v;
    return 0;
}

}  // namespace

TEST_CASE("generator for one site") {
    RateSpec spec(1, Rat(1, 2), Rat(1, 3));
    SparseRatMatrix q = generator(spec);
    REQUIRE(q.dim == 2);
    CHECK(find_rate(q, 0b0, 0b1) == Rat(1, 2));  // entry at rate alpha
    CHECK(find_rate(q, 0b1, 0b0) == Rat(1, 3));  // exit at rate beta
    CHECK(q.row_sum(0) == 0);
    CHECK(q.row_sum(1) == 0);
}

TEST_CASE("generator for two sites") {
    RateSpec spec(2, Rat(2), Rat(5));
    SparseRatMatrix q = generator(spec);
    REQUIRE(q.dim == 4);
    // state 10: only the hop 10 -> 01 at rate 1; total outflow 1
    CHECK(find_rate(q, 0b10, 0b01) == 1);
    CHECK(find_rate(q, 0b10, 0b11) == 0);
    CHECK(find_rate(q, 0b10, 0b00) == 0);
    CHECK(find_rate(q, 0b10, 0b10) == -1);
    // state 01: entry to 11 and exit to 00
    CHECK(find_rate(q, 0b01, 0b11) == 2);
    CHECK(find_rate(q, 0b01, 0b00) == 5);
}

TEST_CASE("generator rows sum to zero") {
    for (int n = 1; n <= 6; ++n) {
        SparseRatMatrix q = generator(RateSpec(n, Rat(1, 2), Rat(1, 3)));
        for (std::size_t s = 0; s < q.dim; ++s) CHECK(q.row_sum(s) == 0);
    }
    CHECK_THROWS_AS(generator(RateSpec(11, Rat(1), Rat(1))), std::domain_error);
}

TEST_CASE("stationary distribution for one site") {
    Distribution d = stationary(RateSpec(1, Rat(1, 2), Rat(1, 3)));
    CHECK(d.pi.at("1") == Rat(3, 5));  // alpha / (alpha + beta)
    CHECK(d.pi.at("0") == Rat(2, 5));
    CHECK(d.sum() == 1);
}

TEST_CASE("stationary matches the determinant formula") {
    const std::vector<std::pair<Rat, Rat>> rates = {
        {Rat(1), Rat(1)}, {Rat(1, 2), Rat(1, 3)}, {Rat(2), Rat(5)}};
    for (int n = 1; n <= 4; ++n) {
        for (const auto& [a, b] : rates) {
            RateSpec spec(n, a, b);
            Distribution d = stationary(spec);
            for (std::size_t s = 0; s < (1ull << n); ++s) {
                TasepState tau = TasepState::from_bits(s, n);
                CHECK(d.at(tau) == prob_state(tau, spec));
            }
        }
    }
}

TEST_CASE("symbolic state probability") {
    // all holes: the empty shape contributes only its border b^n
    SymbolicStateProb sp = prob_state(TasepState::parse("0000"));
    CHECK(sp.numerator == BivarPoly::mono(0, 4));
    CHECK(sp.z == z_n(4));

    // the worked tableau contributes its weight a^8 b^5 to this word
    SymbolicStateProb fig = prob_state(TasepState::parse("010110011"));
    CHECK(fig.numerator.coeff(8, 5) >= 1);
}

TEST_CASE("fixed particle locations") {
    CHECK(prob_locations(2, {1}) == BivarPoly::var_a() + BivarPoly::var_b());
    CHECK(prob_locations(4, {1, 2, 3, 4}) == BivarPoly(1));  // full lattice
    CHECK(prob_locations(3, {}) == BivarPoly(1));            // empty determinant
    CHECK_THROWS_AS(prob_locations(3, {0}), std::out_of_range);
    CHECK_THROWS_AS(prob_locations(3, {2, 2}), std::out_of_range);
    CHECK_THROWS_AS(prob_locations(3, {1, 4}), std::out_of_range);
}

TEST_CASE("location determinant equals genfun without its border") {
    for (int n = 1; n <= 8; ++n) {
        for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
            TasepState tau = TasepState::from_bits(bits, n);
            std::vector<int> sites;
            for (int i = 1; i <= n; ++i)
                if (tau.at(i) == Site::particle) sites.push_back(i);
            Shape sh = state_to_shape(tau);
            BivarPoly bare = prob_locations(n, sites);
            CHECK(genfun(sh) == boundary_weight(sh) * bare);
        }
    }
}

TEST_CASE("particle-count probabilities") {
    RateSpec one(1, Rat(2), Rat(5));
    CHECK(prob_k_particles(1, 1, one) == Rat(2, 7));
    CHECK(prob_k_particles(1, 0, one) == Rat(5, 7));

    const std::vector<std::pair<Rat, Rat>> rates = {{Rat(1), Rat(1)}, {Rat(1, 2), Rat(1, 3)}};
    for (int n = 1; n <= 5; ++n) {
        for (const auto& [a, b] : rates) {
            RateSpec spec(n, a, b);
            Rat total = 0;
            for (int k = 0; k <= n; ++k) total += prob_k_particles(n, k, spec);
            CHECK(total == 1);
        }
    }
    RateSpec spec(4, Rat(1, 2), Rat(1, 3));
    Distribution d = stationary(spec);
    for (int k = 0; k <= 4; ++k) {
        Rat agg = 0;
        for (const auto& [word, p] : d.pi)
            if ((int)std::count(word.begin(), word.end(), '1') == k) agg += p;
        CHECK(agg == prob_k_particles(4, k, spec));
    }
    CHECK_THROWS_AS(prob_k_particles(4, 5, spec), std::out_of_range);
}

TEST_CASE("simulation is reproducible and normalized") {
    RateSpec spec(3, Rat(1), Rat(1));
    SimulationResult a = simulate(spec, 20000, 7);
    SimulationResult b = simulate(spec, 20000, 7);
    CHECK(a.occupation == b.occupation);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.total_time == b.total_time);

    SimulationResult c = simulate(spec, 20000, 8);
    CHECK(a.occupation != c.occupation);

    double sum = 0;
    for (const auto& [word, f] : a.occupation) sum += f;
    CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-event simulation is degenerate but well formed") {
    SimulationResult r = simulate(RateSpec(2, Rat(1), Rat(1)), 1, 3);
    CHECK(r.occupation.at("00") == 1.0);  // started from the empty lattice
    double sum = 0;
    for (const auto& [word, f] : r.occupation) sum += f;
    CHECK(sum == 1.0);
}

TEST_CASE("simulation approaches the exact distribution") {
    RateSpec spec(3, Rat(1), Rat(1));
    SimulationResult sim = simulate(spec, 200000, 20240817);
    Distribution exact = stationary(spec);
    CHECK(sim.tv_distance(exact) <= sim.tv_error_budget());
}

TEST_CASE("rate specs are validated") {
    CHECK_THROWS_AS(RateSpec(0, Rat(1), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(RateSpec(2, Rat(0), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(RateSpec(2, Rat(1), Rat(-1)), std::invalid_argument);
    CHECK_THROWS_AS(simulate(RateSpec(2, Rat(1), Rat(1)), 0, 1), std::invalid_argument);
}

TEST_CASE("distribution json") {
    RateSpec spec(2, Rat(1, 2), Rat(1, 3));
    auto j = distribution_to_json(spec, stationary(spec));
    CHECK(j.at("n") == 2);
    CHECK(j.at("alpha") == "1/2");
    CHECK(j.at("beta") == "1/3");
    Rat total = 0;
    for (const auto& [word, p] : j.at("pi").items()) total += parse_rat(p.get<std::string>());
    CHECK(total == 1);
}
