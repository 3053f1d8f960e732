#pragma once

// The exclusion process itself. Exact stationary distributions come from
// rational Gaussian elimination on the generator; the tableau-side formulas
// (genfun / n_mk / z_n) give the same numbers and are cross-checked against
// that solve. A continuous-time event simulator provides the statistical
// route.

#include "ctab/closedforms.hpp"
#include "ctab/determinants.hpp"
#include "ctab/shapes.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctab {

struct RateSpec {
    int n = 1;
    Rat alpha = 1;
    Rat beta = 1;

    RateSpec(int n_, Rat alpha_, Rat beta_)
        : n(n_), alpha(std::move(alpha_)), beta(std::move(beta_)) {
        if (n < 1) throw std::invalid_argument("RateSpec: lattice size must be >= 1");
        if (alpha <= 0 || beta <= 0)
            throw std::invalid_argument("RateSpec: rates must be strictly positive");
    }
};

inline constexpr int kExactSolveBound = 10;  // 2^10 states

// Exact stationary distribution over occupation words.
struct Distribution {
    std::map<std::string, Rat> pi;

    Rat at(const TasepState& tau) const { return pi.at(tau.str()); }
    Rat sum() const {
        Rat s = 0;
        for (const auto& [k, v] : pi) s += v;
        return s;
    }
};

// Sparse rate matrix over the 2^n words; diagonal entries make rows sum to
// zero. Row/column index = word read as binary (site 1 most significant).
struct SparseRatMatrix {
    std::size_t dim = 0;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;

    Rat row_sum(std::size_t i) const {
        Rat s = 0;
        for (const auto& [j, v] : rows[i]) s += v;
        return s;
    }
};

namespace detail {

struct Move {
    std::size_t target;
    int kind;  // 0 = entry, 1 = exit, 2 = hop (rate 1)
};

// Legal transitions out of the word encoded in `bits`.
inline std::vector<Move> moves_from(unsigned long long bits, int n) {
    std::vector<Move> out;
    auto occupied = [&](int site) { return (bits >> (n - site)) & 1ull; };  // 1-based
    auto flip = [&](unsigned long long b, int site) { return b ^ (1ull << (n - site)); };
    if (!occupied(1)) out.push_back({flip(bits, 1), 0});
    if (occupied(n)) out.push_back({flip(bits, n), 1});
    for (int i = 1; i < n; ++i)
        if (occupied(i) && !occupied(i + 1)) out.push_back({flip(flip(bits, i), i + 1), 2});
    return out;
}

}  // namespace detail

inline SparseRatMatrix generator(const RateSpec& spec, int bound = kExactSolveBound) {
    if (spec.n > bound)
        throw std::domain_error("generator: lattice size exceeds exact-solve bound " +
                                std::to_string(bound));
    const std::size_t dim = 1ull << spec.n;
    SparseRatMatrix q;
    q.dim = dim;
    q.rows.resize(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        Rat total = 0;
        for (const auto& mv : detail::moves_from(s, spec.n)) {
            Rat rate = mv.kind == 0 ? spec.alpha : mv.kind == 1 ? spec.beta : Rat(1);
            q.rows[s].emplace_back(mv.target, rate);
            total += rate;
        }
        q.rows[s].emplace_back(s, -total);
    }
    return q;
}

// Unique probability vector pi with pi Q = 0. The balance equations are
// cleared to integers (scaling Q leaves the kernel unchanged) and reduced by
// fraction-free elimination, so no gcd work happens until back-substitution.
inline Distribution stationary(const RateSpec& spec, int bound = kExactSolveBound) {
    SparseRatMatrix q = generator(spec, bound);
    const std::size_t dim = q.dim;
    const BigInt scale = denominator(spec.alpha) * denominator(spec.beta);

    // m[t][s] pi(s) = rhs[t]: normalization at t = 0, scaled balance elsewhere
    std::vector<std::vector<BigInt>> m(dim, std::vector<BigInt>(dim, BigInt(0)));
    std::vector<BigInt> rhs(dim, BigInt(0));
    for (std::size_t s = 0; s < dim; ++s)
        for (const auto& [t, rate] : q.rows[s]) {
            if (t == 0) continue;
            Rat scaled = rate * scale;
            m[t][s] += numerator(scaled);  // denominator is 1 by construction
        }
    for (std::size_t s = 0; s < dim; ++s) m[0][s] = 1;
    rhs[0] = 1;

    // Bareiss: entries stay exact minors, every division is remainder-free
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        std::size_t piv = k;
        while (piv < dim && m[piv][k] == 0) ++piv;
        if (piv == dim) throw std::runtime_error("stationary: singular system");
        if (piv != k) {
            std::swap(m[piv], m[k]);
            std::swap(rhs[piv], rhs[k]);
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            if (m[i][k] == 0 && rhs[i] == 0) {
                for (std::size_t j = k + 1; j < dim; ++j) {
                    if (m[i][j] == 0) continue;
                    BigInt num = m[k][k] * m[i][j], r;
                    boost::multiprecision::divide_qr(num, prev, m[i][j], r);
                    if (r != 0) throw std::runtime_error("stationary: inexact elimination");
                }
                continue;
            }
            for (std::size_t j = k + 1; j < dim; ++j) {
                BigInt num = m[k][k] * m[i][j] - m[i][k] * m[k][j], r;
                boost::multiprecision::divide_qr(num, prev, m[i][j], r);
                if (r != 0) throw std::runtime_error("stationary: inexact elimination");
            }
            BigInt num = m[k][k] * rhs[i] - m[i][k] * rhs[k], r;
            boost::multiprecision::divide_qr(num, prev, rhs[i], r);
            if (r != 0) throw std::runtime_error("stationary: inexact elimination");
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rat> pi(dim);
    for (std::size_t ii = dim; ii-- > 0;) {
        Rat acc = Rat(rhs[ii]);
        for (std::size_t j = ii + 1; j < dim; ++j)
            if (m[ii][j] != 0) acc -= Rat(m[ii][j]) * pi[j];
        if (m[ii][ii] == 0) throw std::runtime_error("stationary: singular system");
        pi[ii] = acc / Rat(m[ii][ii]);
    }

    Distribution d;
    Rat total = 0;
    for (std::size_t s = 0; s < dim; ++s) {
        if (pi[s] < 0) throw std::runtime_error("stationary: negative probability");
        d.pi[TasepState::from_bits(s, spec.n).str()] = pi[s];
        total += pi[s];
    }
    if (total != 1) throw std::runtime_error("stationary: probabilities do not sum to 1");

    // global balance, verified exactly post-solve
    std::vector<Rat> flow(dim, Rat(0));
    for (std::size_t s = 0; s < dim; ++s)
        for (const auto& [u, rate] : q.rows[s]) flow[u] += pi[s] * rate;
    for (std::size_t t = 0; t < dim; ++t)
        if (flow[t] != 0) throw std::runtime_error("stationary: balance violated");
    return d;
}

// Un-normalized stationary weight of a word and the matching normalizer.
struct SymbolicStateProb {
    BivarPoly numerator;  // genfun of the word's shape
    BivarPoly z;          // z_n of the word's length
};

inline SymbolicStateProb prob_state(const TasepState& tau) {
    return SymbolicStateProb{genfun(state_to_shape(tau)), z_n(tau.size())};
}

inline Rat prob_state(const TasepState& tau, const RateSpec& spec) {
    if (tau.size() != spec.n)
        throw std::invalid_argument("prob_state: word length differs from lattice size");
    SymbolicStateProb sp = prob_state(tau);
    return sp.numerator.eval(spec.alpha, spec.beta) / sp.z.eval(spec.alpha, spec.beta);
}

// Un-normalized weight of "particles exactly at sites x_1 < ... < x_k":
// the bare determinant for the shape with part_j = n - k + j - x_j.
inline BivarPoly prob_locations(int n, const std::vector<int>& sites) {
    if (n < 0) throw std::out_of_range("prob_locations: negative lattice size");
    const int k = (int)sites.size();
    std::vector<int> parts(k);
    for (int j = 1; j <= k; ++j) {
        if (sites[j - 1] < 1 || sites[j - 1] > n)
            throw std::out_of_range("prob_locations: site outside the lattice");
        if (j > 1 && sites[j - 1] <= sites[j - 2])
            throw std::out_of_range("prob_locations: sites must increase strictly");
        parts[j - 1] = n - k + j - sites[j - 1];
    }
    Shape lambda(parts, n - k);
    if (k == 0) return BivarPoly(1);
    return det_border_expansion(weighted_matrix(lambda));
}

// Probability that exactly k of the n sites are occupied.
inline Rat prob_k_particles(int n, int k, const RateSpec& spec) {
    if (n != spec.n) throw std::invalid_argument("prob_k_particles: size mismatch");
    if (k < 0 || k > n) throw std::out_of_range("prob_k_particles: requires 0 <= k <= n");
    return n_mk(n - k, k).eval(spec.alpha, spec.beta) / z_n(n).eval(spec.alpha, spec.beta);
}

// ---------------------------------------------------------------------------
// Event simulation (continuous time)

// Time-weighted occupation frequencies from an exponential-clock event loop.
// Reproducible: the generator is std::mt19937_64 seeded as given, uniforms
// are (x >> 11) * 2^-53, waiting times -log1p(-u) / rate. Batch means over
// equal event blocks give the per-state standard errors.
struct SimulationResult {
    int n = 0;
    std::uint64_t events = 0;
    std::uint64_t seed = 0;
    double total_time = 0;
    std::map<std::string, double> occupation;      // time fraction per word
    std::map<std::string, double> standard_error;  // batch-means SE per word

    double tv_distance(const Distribution& exact) const {
        double tv = 0;
        for (const auto& [word, p] : exact.pi) {
            auto it = occupation.find(word);
            double emp = it == occupation.end() ? 0.0 : it->second;
            tv += std::abs(emp - p.convert_to<double>());
        }
        return tv / 2;
    }
    // Aggregate three-sigma budget for the total-variation distance.
    double tv_error_budget() const {
        double s = 0;
        for (const auto& [word, se] : standard_error) s += se;
        return 3 * s / 2;
    }
};

inline SimulationResult simulate(const RateSpec& spec, std::uint64_t horizon,
                                 std::uint64_t seed) {
    if (horizon < 1) throw std::invalid_argument("simulate: horizon must be >= 1");
    const int n = spec.n;
    const std::size_t dim = 1ull << n;
    const double alpha = spec.alpha.convert_to<double>();
    const double beta = spec.beta.convert_to<double>();

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };

    const std::uint64_t batches = std::min<std::uint64_t>(32, horizon);
    std::vector<double> state_time(dim, 0.0);
    std::vector<std::vector<double>> batch_time(batches, std::vector<double>(dim, 0.0));
    std::vector<double> batch_total(batches, 0.0);

    unsigned long long state = 0;  // start from the empty lattice
    double clock = 0;
    for (std::uint64_t ev = 0; ev < horizon; ++ev) {
        auto moves = detail::moves_from(state, n);
        double total_rate = 0;
        for (const auto& mv : moves)
            total_rate += mv.kind == 0 ? alpha : mv.kind == 1 ? beta : 1.0;
        double dt = -std::log1p(-uniform()) / total_rate;
        std::uint64_t b = ev * batches / horizon;
        state_time[state] += dt;
        batch_time[b][state] += dt;
        batch_total[b] += dt;
        clock += dt;

        double pick = uniform() * total_rate;
        double acc = 0;
        unsigned long long next = moves.back().target;
        for (const auto& mv : moves) {
            acc += mv.kind == 0 ? alpha : mv.kind == 1 ? beta : 1.0;
            if (pick < acc) {
                next = mv.target;
                break;
            }
        }
        state = next;
    }

    SimulationResult res;
    res.n = n;
    res.events = horizon;
    res.seed = seed;
    res.total_time = clock;
    for (std::size_t s = 0; s < dim; ++s) {
        std::string word = TasepState::from_bits(s, n).str();
        res.occupation[word] = state_time[s] / clock;
        double mean = 0;
        int used = 0;
        std::vector<double> fracs;
        for (std::uint64_t b = 0; b < batches; ++b) {
            if (batch_total[b] <= 0) continue;
            fracs.push_back(batch_time[b][s] / batch_total[b]);
            mean += fracs.back();
            ++used;
        }
        double se = 0;
        if (used > 1) {
            mean /= used;
            double var = 0;
            for (double f : fracs) var += (f - mean) * (f - mean);
            se = std::sqrt(var / (used * (used - 1)));
        }
        res.standard_error[word] = se;
    }
    return res;
}

inline nlohmann::json distribution_to_json(const RateSpec& spec, const Distribution& d) {
    nlohmann::json pi = nlohmann::json::object();
    for (const auto& [word, p] : d.pi) pi[word] = rat_str(p);
    return nlohmann::json{
        {"n", spec.n}, {"alpha", rat_str(spec.alpha)}, {"beta", rat_str(spec.beta)}, {"pi", pi}};
}

}  // namespace ctab
