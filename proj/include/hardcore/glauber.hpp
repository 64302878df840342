#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "independence.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace hardcore {

// Parameters of a chain run or mixing query.
struct ChainConfig {
    double lambda = 1.0;  // fugacity, must be positive
    uint64_t seed = 1;
    long long steps = 0;
    double epsilon = 0.25;
};

// ---------------------------------------------------------------------------
// Chain simulation
// ---------------------------------------------------------------------------

// One single-site update.  A vertex v is chosen with probability w(v)/w_+; if
// v is occupied it is deleted with probability 1/((1+lambda) w(v)); if it is
// unoccupied and insertable it is inserted with probability lambda/(1+lambda);
// otherwise the state is held.  Unit weights give the classic chain: uniform
// v, delete w.p. 1/(1+lambda), insert w.p. lambda/(1+lambda).  Both move
// probabilities carry the common factor 1/(w_+(1+lambda)), which is what makes
// detailed balance against pi(Z) ~ lambda^{|Z|} w(Z) hold.
inline VertexSet glauber_step(const WeightedGraph& wg, VertexSet Z, double lambda, Rng& rng) {
    if (!(lambda > 0)) throw std::domain_error("glauber step: fugacity must be positive");
    if (!is_independent(wg.g, Z)) throw std::domain_error("glauber step: state is not an independent set");
    long long pick = static_cast<long long>(rng.uniform_below(static_cast<uint64_t>(wg.total_weight())));
    int v = 0;
    while (pick >= wg.w[static_cast<size_t>(v)]) {
        pick -= wg.w[static_cast<size_t>(v)];
        ++v;
    }
    if ((Z >> v) & 1u) {
        if (rng.bernoulli(1.0 / ((1.0 + lambda) * static_cast<double>(wg.w[static_cast<size_t>(v)]))))
            return Z & ~bit(v);
        return Z;
    }
    if (wg.g.adj[static_cast<size_t>(v)] & Z) return Z;
    if (rng.bernoulli(lambda / (1.0 + lambda))) return Z | bit(v);
    return Z;
}

// Runs `steps` updates from Z0; `visit` sees the state after every update.
template <typename Visitor>
inline VertexSet run_chain(const WeightedGraph& wg, VertexSet Z0, double lambda, long long steps,
                           Rng& rng, Visitor&& visit) {
    VertexSet Z = Z0;
    for (long long t = 0; t < steps; ++t) {
        Z = glauber_step(wg, Z, lambda, rng);
        visit(Z);
    }
    return Z;
}

inline VertexSet run_chain(const WeightedGraph& wg, VertexSet Z0, double lambda, long long steps, Rng& rng) {
    return run_chain(wg, Z0, lambda, steps, rng, [](VertexSet) {});
}

// ---------------------------------------------------------------------------
// Exact transition matrix
// ---------------------------------------------------------------------------

struct TransitionMatrix {
    std::vector<VertexSet> states;  // sizes ascending, set order within a size
    std::unordered_map<VertexSet, int> index;
    std::vector<std::vector<Rat>> P;  // row-stochastic, exact rationals
    std::vector<Rat> pi;              // Gibbs stationary distribution
    Rat lambda = 1;
    int n = 0;  // vertices of the underlying graph
};

inline TransitionMatrix transition_matrix(const WeightedGraph& wg, const Rat& lambda,
                                          size_t state_cap = 4096) {
    if (lambda <= 0) throw std::domain_error("transition matrix: fugacity must be positive");
    IndependentSets sets = enumerate_independent_sets(wg.g);
    if (sets.total() > state_cap)
        throw std::runtime_error("transition matrix cap exceeded (" + std::to_string(sets.total()) +
                                 " states, cap " + std::to_string(state_cap) + ")");
    TransitionMatrix tm;
    tm.lambda = lambda;
    tm.n = wg.g.n;
    tm.states = sets.flat();
    for (size_t i = 0; i < tm.states.size(); ++i) tm.index.emplace(tm.states[i], static_cast<int>(i));
    tm.pi = gibbs_masses(wg, sets, lambda);

    const Rat denom = Rat(wg.total_weight()) * (Rat(1) + lambda);
    const size_t m = tm.states.size();
    tm.P.assign(m, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        VertexSet Z = tm.states[i];
        Rat off = 0;
        for (int v = 0; v < wg.g.n; ++v) {
            if ((Z >> v) & 1u) {
                Rat pr = Rat(1) / denom;  // (w(v)/w_+) * 1/((1+lambda) w(v))
                tm.P[i][static_cast<size_t>(tm.index.at(Z & ~bit(v)))] += pr;
                off += pr;
            } else if (!(wg.g.adj[static_cast<size_t>(v)] & Z)) {
                Rat pr = Rat(wg.w[static_cast<size_t>(v)]) * lambda / denom;
                tm.P[i][static_cast<size_t>(tm.index.at(Z | bit(v)))] += pr;
                off += pr;
            }
        }
        tm.P[i][i] = Rat(1) - off;
    }
    return tm;
}

// Off-diagonal transition probability of a single-site move; 0 when the pair
// is not a legal move of the chain.
inline Rat transition_prob(const WeightedGraph& wg, VertexSet from, VertexSet to, const Rat& lambda) {
    if (lambda <= 0) throw std::domain_error("transition probability: fugacity must be positive");
    VertexSet d = from ^ to;
    if (popcount(d) != 1 || !is_independent(wg.g, from) || !is_independent(wg.g, to)) return 0;
    int v = lowest_vertex(d);
    Rat denom = Rat(wg.total_weight()) * (Rat(1) + lambda);
    if ((from >> v) & 1u) return Rat(1) / denom;
    return Rat(wg.w[static_cast<size_t>(v)]) * lambda / denom;
}

struct BalanceReport {
    bool pass = true;
    int i = -1, j = -1;  // witness pair on failure
    Rat lhs = 0, rhs = 0;
    Rat stationary_residual = 0;  // max_j |sum_i pi_i P_ij - pi_j|, exact
};

inline BalanceReport detailed_balance_check(const TransitionMatrix& tm) {
    BalanceReport rep;
    const size_t m = tm.states.size();
    for (size_t i = 0; i < m && rep.pass; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            if (tm.P[i][j] == 0 && tm.P[j][i] == 0) continue;
            Rat lhs = tm.pi[i] * tm.P[i][j];
            Rat rhs = tm.pi[j] * tm.P[j][i];
            if (lhs != rhs) {
                rep.pass = false;
                rep.i = static_cast<int>(i);
                rep.j = static_cast<int>(j);
                rep.lhs = lhs;
                rep.rhs = rhs;
                break;
            }
        }
    }
    for (size_t j = 0; j < m; ++j) {
        Rat col = 0;
        for (size_t i = 0; i < m; ++i)
            if (tm.P[i][j] != 0) col += tm.pi[i] * tm.P[i][j];
        Rat d = col - tm.pi[j];
        if (d < 0) d = -d;
        if (d > rep.stationary_residual) rep.stationary_residual = d;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

struct SpectrumReport {
    int states = 0;
    double beta1 = 0;     // second-largest eigenvalue
    double beta_min = 0;  // smallest eigenvalue
    double beta_max = 0;  // max(beta1, |beta_min|)
    double relaxation = 1;
    double stationary_residual = 0;   // exact rational residual, reported as double
    double gibbs_residual = 0;        // top eigenvector vs Gibbs, max deviation
    std::vector<double> eigenvalues;  // descending; the first is 1
};

inline SpectrumReport spectrum(const TransitionMatrix& tm) {
    const size_t m = tm.states.size();
    if (m == 0) throw std::invalid_argument("spectrum: empty state space");
    SpectrumReport rep;
    rep.states = static_cast<int>(m);
    rep.stationary_residual = to_double(detailed_balance_check(tm).stationary_residual);

    // Symmetrize: S = D^{1/2} P D^{-1/2} shares P's spectrum and is symmetric
    // by reversibility, so the self-adjoint solver applies.
    std::vector<double> sq(m);
    for (size_t i = 0; i < m; ++i) sq[i] = std::sqrt(to_double(tm.pi[i]));
    Eigen::MatrixXd S(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                to_double(tm.P[i][j]) * sq[i] / sq[j];
    S = (0.5 * (S + S.transpose())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");

    rep.eigenvalues.resize(m);
    for (size_t i = 0; i < m; ++i) rep.eigenvalues[i] = es.eigenvalues()(static_cast<Eigen::Index>(m - 1 - i));
    if (std::abs(rep.eigenvalues.front() - 1.0) > 1e-9)
        throw std::runtime_error("spectrum: leading eigenvalue deviates from 1");
    for (double b : rep.eigenvalues)
        if (b > 1.0 + 1e-9 || b < -1.0 - 1e-9)
            throw std::runtime_error("spectrum: eigenvalue outside [-1, 1]");

    rep.beta1 = m >= 2 ? rep.eigenvalues[1] : 0.0;
    rep.beta_min = m >= 2 ? rep.eigenvalues.back() : 0.0;
    rep.beta_max = std::max(rep.beta1, std::abs(rep.beta_min));
    rep.relaxation = 1.0 / (1.0 - rep.beta1);

    // Self-loop mass min{1,lambda}/(1+lambda) on every row forces the
    // smallest eigenvalue up: (1+beta_min)^{-1} <= (1+lambda)/(2 min{1,lambda}).
    double lam = to_double(tm.lambda);
    double rhs = (1.0 + lam) / (2.0 * std::min(1.0, lam));
    if (1.0 / (1.0 + rep.beta_min) > rhs * (1.0 + 1e-9) + 1e-9)
        throw std::runtime_error("spectrum: smallest-eigenvalue bound violated");

    // Top eigenvector squared must reproduce the Gibbs masses.
    double worst = 0;
    for (size_t i = 0; i < m; ++i) {
        double u = es.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m - 1));
        worst = std::max(worst, std::abs(u * u - to_double(tm.pi[i])));
    }
    rep.gibbs_residual = worst;
    return rep;
}

inline SpectrumReport spectrum(const WeightedGraph& wg, const Rat& lambda, size_t state_cap = 4096) {
    TransitionMatrix tm = transition_matrix(wg, lambda, state_cap);
    return spectrum(tm);
}

// ---------------------------------------------------------------------------
// Mixing-time bounds
// ---------------------------------------------------------------------------

// Bound on tau_es(eps) for graphs of bipartite pathwidth at most p:
//   2 e alpha n^{p+1} lambda^p (1 + max(lambda, 1/lambda))
//     * (alpha ln(n lambda) + 1 + ln(1/eps)),
// requiring integer p >= 2 and lambda >= e^9/n.
inline double mixing_bound(long long n, int p, double lambda, int alpha, double eps) {
    if (n < 1) throw std::domain_error("mixing bound: n must be at least 1");
    if (p < 2) throw std::domain_error("mixing bound: requires integer p >= 2, got p=" + std::to_string(p));
    double thresh = std::exp(9.0) / static_cast<double>(n);
    if (!(lambda >= thresh))
        throw std::domain_error("mixing bound: requires lambda >= e^9/n = " + std::to_string(thresh) +
                                ", got lambda=" + std::to_string(lambda));
    if (alpha < 1) throw std::domain_error("mixing bound: alpha must be at least 1");
    if (!(eps > 0 && eps < 1)) throw std::domain_error("mixing bound: epsilon must lie in (0, 1)");
    double relax = 2.0 * std::exp(1.0) * alpha * std::pow(static_cast<double>(n), p + 1) * std::pow(lambda, p);
    return relax * (1.0 + std::max(lambda, 1.0 / lambda)) *
           (alpha * std::log(static_cast<double>(n) * lambda) + 1.0 + std::log(1.0 / eps));
}

// tau_es(eps) <= R (alpha ln(n lambda) + 1 + ln(1/eps)) given a relaxation
// bound R; the log term needs lambda >= 1/n.
inline double tau_from_relaxation(double R, long long n, int alpha, double lambda, double eps) {
    if (!(lambda >= 1.0 / static_cast<double>(n)))
        throw std::domain_error("relaxation tau bound: requires lambda >= 1/n");
    if (!(eps > 0 && eps < 1)) throw std::domain_error("relaxation tau bound: epsilon must lie in (0, 1)");
    if (!(R >= 1)) throw std::domain_error("relaxation tau bound: R must be at least 1");
    return R * (alpha * std::log(static_cast<double>(n) * lambda) + 1.0 + std::log(1.0 / eps));
}

// ---------------------------------------------------------------------------
// Total variation and distribution evolution
// ---------------------------------------------------------------------------

inline Rat tv_distance(const std::vector<Rat>& mu, const std::vector<Rat>& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("tv distance: supports differ in size");
    Rat s = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        Rat d = mu[i] - nu[i];
        if (d < 0) d = -d;
        s += d;
    }
    return s / 2;
}

inline double tv_distance(const std::vector<double>& mu, const std::vector<double>& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("tv distance: supports differ in size");
    double s = 0;
    for (size_t i = 0; i < mu.size(); ++i) s += std::abs(mu[i] - nu[i]);
    return s / 2;
}

// Distribution after t steps from a point mass, exact; meant for small t.
inline std::vector<Rat> distribution_after_exact(const TransitionMatrix& tm, int start, long long t) {
    const size_t m = tm.states.size();
    if (start < 0 || static_cast<size_t>(start) >= m)
        throw std::invalid_argument("distribution: start state out of range");
    std::vector<Rat> cur(m, Rat(0));
    cur[static_cast<size_t>(start)] = 1;
    for (long long s = 0; s < t; ++s) {
        std::vector<Rat> nxt(m, Rat(0));
        for (size_t i = 0; i < m; ++i) {
            if (cur[i] == 0) continue;
            for (size_t j = 0; j < m; ++j)
                if (tm.P[i][j] != 0) nxt[j] += cur[i] * tm.P[i][j];
        }
        cur = std::move(nxt);
    }
    return cur;
}

// Spectral form of the reversible kernel, for distributions at very large t:
// P^t(x, y) = sqrt(pi_y/pi_x) sum_k beta_k^t u_k(x) u_k(y).
struct SpectralOperator {
    std::vector<double> pi, sq;
    Eigen::MatrixXd U;
    Eigen::VectorXd betas;

    explicit SpectralOperator(const TransitionMatrix& tm) {
        const size_t m = tm.states.size();
        pi.resize(m);
        sq.resize(m);
        for (size_t i = 0; i < m; ++i) {
            pi[i] = to_double(tm.pi[i]);
            sq[i] = std::sqrt(pi[i]);
        }
        Eigen::MatrixXd S(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    to_double(tm.P[i][j]) * sq[i] / sq[j];
        S = (0.5 * (S + S.transpose())).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
        if (es.info() != Eigen::Success) throw std::runtime_error("spectral operator: eigensolver failed");
        U = es.eigenvectors();
        betas = es.eigenvalues();
    }

    std::vector<double> distribution_from(int start, double t) const {
        const Eigen::Index m = U.rows();
        Eigen::VectorXd coef(m);
        for (Eigen::Index k = 0; k < m; ++k)
            coef(k) = std::pow(betas(k), t) * U(static_cast<Eigen::Index>(start), k);
        Eigen::VectorXd mix = U * coef;
        std::vector<double> mu(static_cast<size_t>(m));
        for (Eigen::Index y = 0; y < m; ++y)
            mu[static_cast<size_t>(y)] = mix(y) * sq[static_cast<size_t>(y)] / sq[static_cast<size_t>(start)];
        return mu;
    }

    double tv_from_stationary(int start, double t) const {
        std::vector<double> mu = distribution_from(start, t);
        double s = 0;
        for (size_t i = 0; i < mu.size(); ++i) s += std::abs(mu[i] - pi[i]);
        return s / 2;
    }
};

// Smallest t with TV(mu_t, pi) <= eps from the given start state (the empty
// set sits at index 0).  TV from a fixed start never increases with t, so
// doubling plus binary search is sound.
inline long long exact_mixing_time(const TransitionMatrix& tm, double eps, int start = 0,
                                   long long t_cap = (1LL << 50)) {
    if (!(eps > 0)) throw std::domain_error("mixing time: epsilon must be positive");
    SpectralOperator op(tm);
    if (op.tv_from_stationary(start, 0.0) <= eps) return 0;
    long long hi = 1;
    while (op.tv_from_stationary(start, static_cast<double>(hi)) > eps) {
        hi *= 2;
        if (hi > t_cap) throw std::runtime_error("mixing-time search exceeded the step cap");
    }
    long long lo = hi / 2;
    while (lo + 1 < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (op.tv_from_stationary(start, static_cast<double>(mid)) <= eps)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// ---------------------------------------------------------------------------
// Conductance
// ---------------------------------------------------------------------------

struct ConductanceResult {
    Rat phi = 0;
    std::vector<int> witness;  // state indices of the side with pi <= 1/2
    Rat witness_mass = 0;
    Rat witness_flow = 0;
};

// Flow ratio Q(S, S^c)/pi(S) of one explicit cut side (no minimization).
inline Rat cut_ratio(const TransitionMatrix& tm, const std::vector<int>& side) {
    const size_t m = tm.states.size();
    std::vector<char> in(m, 0);
    Rat mass = 0;
    for (int s : side) {
        if (s < 0 || static_cast<size_t>(s) >= m) throw std::invalid_argument("cut ratio: state index out of range");
        if (in[static_cast<size_t>(s)]) throw std::invalid_argument("cut ratio: duplicate state index");
        in[static_cast<size_t>(s)] = 1;
        mass += tm.pi[static_cast<size_t>(s)];
    }
    if (mass == 0) throw std::invalid_argument("cut ratio: empty side");
    Rat flow = 0;
    for (size_t i = 0; i < m; ++i) {
        if (!in[i]) continue;
        for (size_t j = 0; j < m; ++j)
            if (!in[j] && tm.P[i][j] != 0) flow += tm.pi[i] * tm.P[i][j];
    }
    return flow / mass;
}

// Exact conductance: minimum over cuts S with pi(S) <= 1/2 of
// Q(S, S^c)/pi(S), Q(x,y) = pi(x) P(x,y).  Every cut is visited along a
// Gray-code walk so each step updates mass and flow incrementally.
inline ConductanceResult conductance_exact(const TransitionMatrix& tm, int state_cap = 20) {
    const int m = static_cast<int>(tm.states.size());
    if (m < 2) throw std::invalid_argument("conductance needs at least two states");
    if (m > state_cap)
        throw std::runtime_error("conductance cut enumeration cap exceeded (" + std::to_string(m) +
                                 " states, cap " + std::to_string(state_cap) + ")");
    struct Arc {
        int to;
        Rat q;
    };
    std::vector<std::vector<Arc>> inc(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (tm.P[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
            Rat q = tm.pi[static_cast<size_t>(i)] * tm.P[static_cast<size_t>(i)][static_cast<size_t>(j)];
            inc[static_cast<size_t>(i)].push_back({j, q});
            inc[static_cast<size_t>(j)].push_back({i, q});
        }

    const Rat half(1, 2);
    const uint64_t all = (uint64_t(1) << m) - 1;
    uint64_t mask = 0;
    Rat mass = 0, flow = 0;
    Rat best_flow = -1, best_mass = 1;
    uint64_t best_mask = 0;
    for (uint64_t k = 1; k <= all; ++k) {
        int v = std::countr_zero(k);
        bool entering = !((mask >> v) & 1u);
        mask ^= uint64_t(1) << v;
        if (entering) {
            mass += tm.pi[static_cast<size_t>(v)];
            for (const Arc& a : inc[static_cast<size_t>(v)])
                flow += ((mask >> a.to) & 1u) ? -a.q : a.q;
        } else {
            mass -= tm.pi[static_cast<size_t>(v)];
            for (const Arc& a : inc[static_cast<size_t>(v)])
                flow += ((mask >> a.to) & 1u) ? a.q : -a.q;
        }
        if (mask == 0 || mask == all || mass > half) continue;
        // flow/mass < best_flow/best_mass without divisions
        if (best_flow < 0 || flow * best_mass < best_flow * mass) {
            best_flow = flow;
            best_mass = mass;
            best_mask = mask;
        }
    }
    ConductanceResult res;
    res.phi = best_flow / best_mass;
    res.witness_flow = best_flow;
    res.witness_mass = best_mass;
    for (int i = 0; i < m; ++i)
        if ((best_mask >> i) & 1u) res.witness.push_back(i);
    return res;
}

}  // namespace hardcore
