#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glauber.hpp"
#include "independence.hpp"

namespace hardcore {

// ---------------------------------------------------------------------------
// Size profiles: counts by independent-set size, detached from any fugacity
// ---------------------------------------------------------------------------

// N_0..N_alpha.  The ratios lambda_i = N_{i-1}/N_i mark the fugacity at which
// M_i = N_i lambda^i overtakes M_{i-1}; for claw-free graphs they increase
// strictly, so [lambda_m, lambda_{m+1}] is exactly where m maximises M_i.
struct SizeProfile {
    std::vector<BigInt> counts;

    int alpha() const { return static_cast<int>(counts.size()) - 1; }

    Rat ratio(int i) const {
        if (i < 1 || i > alpha())
            throw std::invalid_argument("size profile: ratio index out of range");
        return Rat(counts[static_cast<size_t>(i - 1)], counts[static_cast<size_t>(i)]);
    }

    std::vector<Rat> ratios() const {
        std::vector<Rat> r;
        for (int i = 1; i <= alpha(); ++i) r.push_back(ratio(i));
        return r;
    }
};

inline SizeProfile size_profile_from_counts(std::vector<BigInt> counts) {
    if (counts.empty()) throw std::invalid_argument("size profile: empty count vector");
    if (counts[0] != 1) throw std::invalid_argument("size profile: N_0 must equal 1");
    for (const BigInt& c : counts)
        if (c <= 0) throw std::invalid_argument("size profile: counts must be positive");
    SizeProfile sp;
    sp.counts = std::move(counts);
    return sp;
}

inline SizeProfile size_profile(const Graph& g, int cap = 20) {
    if (g.n > cap) throw std::runtime_error("size profile: enumeration cap exceeded (n=" +
                                            std::to_string(g.n) + ", cap=" + std::to_string(cap) + ")");
    std::vector<long long> unit(static_cast<size_t>(g.n), 1);
    SizeProfile sp;
    sp.counts = weighted_polynomial(g, unit);
    return sp;
}

inline SizeProfile size_profile(const WeightedGraph& wg, int cap = 20) {
    if (wg.g.n > cap) throw std::runtime_error("size profile: enumeration cap exceeded (n=" +
                                               std::to_string(wg.g.n) + ", cap=" + std::to_string(cap) + ")");
    SizeProfile sp;
    sp.counts = weighted_polynomial(wg.g, wg.w);
    return sp;
}

// Counts N_0..N_k by levelwise enumeration that never builds sets larger than
// k + 1 elements; the deterministic small-fugacity route uses this directly.
inline std::vector<BigInt> size_counts_up_to(const Graph& g, int upto, int cap = 20) {
    if (upto < 0) throw std::invalid_argument("size counts: negative size bound");
    if (g.n > cap) throw std::runtime_error("size counts: enumeration cap exceeded (n=" +
                                            std::to_string(g.n) + ", cap=" + std::to_string(cap) + ")");
    std::vector<BigInt> counts{BigInt(1)};
    std::vector<VertexSet> frontier{VertexSet(0)};
    for (int size = 1; size <= upto && !frontier.empty(); ++size) {
        std::vector<VertexSet> next;
        for (VertexSet s : frontier) {
            int start = s ? static_cast<int>(std::bit_width(s)) : 0;
            for (int v = start; v < g.n; ++v)
                if (!(g.adj[static_cast<size_t>(v)] & s)) next.push_back(s | bit(v));
        }
        if (next.empty()) break;
        counts.push_back(BigInt(next.size()));
        frontier = std::move(next);
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Fugacity windows and the exact size distribution
// ---------------------------------------------------------------------------

struct LambdaWindow {
    Rat lo;                 // lambda_m
    std::optional<Rat> hi;  // lambda_{m+1}; absent when m = alpha
    Rat suggested;          // window midpoint, or 2 lambda_alpha when m = alpha
};

inline LambdaWindow lambda_window(const SizeProfile& sp, int m) {
    if (m < 1 || m > sp.alpha())
        throw std::invalid_argument("lambda window: m out of range [1, alpha]");
    LambdaWindow w;
    w.lo = sp.ratio(m);
    if (m < sp.alpha()) {
        w.hi = sp.ratio(m + 1);
        w.suggested = (w.lo + *w.hi) / 2;
    } else {
        w.suggested = 2 * w.lo;
    }
    return w;
}

inline LambdaWindow lambda_window(const PolynomialProfile& p, int m) {
    SizeProfile sp;
    sp.counts = p.counts;
    return lambda_window(sp, m);
}

// M_k = N_k lambda^k.
inline Rat scaled_count(const SizeProfile& sp, const Rat& lambda, int k) {
    if (lambda < 0) throw std::invalid_argument("fugacity must be nonnegative");
    if (k < 0 || k > sp.alpha()) return Rat(0);
    Rat pw = 1;
    for (int j = 0; j < k; ++j) pw *= lambda;
    return pw * Rat(sp.counts[static_cast<size_t>(k)]);
}

inline Rat partition_value(const SizeProfile& sp, const Rat& lambda) {
    if (lambda < 0) throw std::invalid_argument("fugacity must be nonnegative");
    Rat total = 0, pw = 1;
    for (size_t k = 0; k < sp.counts.size(); ++k) {
        total += pw * Rat(sp.counts[k]);
        pw *= lambda;
    }
    return total;
}

// p_i(lambda) = M_i / P for i = 0..alpha.
inline std::vector<Rat> size_distribution(const SizeProfile& sp, const Rat& lambda) {
    if (lambda < 0) throw std::invalid_argument("fugacity must be nonnegative");
    std::vector<Rat> dist;
    Rat total = 0, pw = 1;
    for (size_t k = 0; k < sp.counts.size(); ++k) {
        dist.push_back(pw * Rat(sp.counts[k]));
        total += dist.back();
        pw *= lambda;
    }
    for (Rat& d : dist) d /= total;
    return dist;
}

// p_m(lambda) = M_m / P_G(lambda); sizes outside [0, alpha] have probability 0.
inline Rat p_m_exact(const SizeProfile& sp, const Rat& lambda, int m) {
    if (m < 0 || m > sp.alpha()) return Rat(0);
    return scaled_count(sp, lambda, m) / partition_value(sp, lambda);
}

// All indices attaining max_i M_i(lambda), ascending.
inline std::vector<int> argmax_sizes(const SizeProfile& sp, const Rat& lambda) {
    std::vector<int> arg;
    Rat best = -1, pw = 1;
    for (int k = 0; k <= sp.alpha(); ++k) {
        Rat m = pw * Rat(sp.counts[static_cast<size_t>(k)]);
        if (m > best) {
            best = m;
            arg.assign(1, k);
        } else if (m == best) {
            arg.push_back(k);
        }
        pw *= lambda;
    }
    return arg;
}

// x_i^2 >= x_{i-1} x_{i+1} at every interior index.
inline bool is_log_concave(const std::vector<Rat>& xs) {
    for (size_t i = 1; i + 1 < xs.size(); ++i)
        if (xs[i] * xs[i] < xs[i - 1] * xs[i + 1]) return false;
    return true;
}

// Lower bound on p_m(lambda) anywhere m maximises M_i, for real-rooted count
// polynomials: the decay lemma gives M_{m-k} <= e^{-(k-1)^2/(2m)} M_m and
// M_{m+k} <= e^{-(k-1)^2/(2(alpha-m))} M_m, so P <= M_m (1 + S(m) + S(alpha-m))
// with S(t) = sum_{k=1}^{t} e^{-(k-1)^2/(2t)}.  The nominal 1/sqrt(2 pi m)
// rounds this for large m but overshoots at small m (a path on six vertices
// already dips below it at the upper window endpoint of m = 1), so the
// explicit form is the one certified here.
inline double window_probability_floor(int m, int alpha) {
    if (alpha < 1) throw std::invalid_argument("window floor: alpha must be positive");
    if (m < 0 || m > alpha) throw std::invalid_argument("window floor: m out of range [0, alpha]");
    auto tail = [](int t) {
        double s = 0;
        for (int k = 1; k <= t; ++k)
            s += std::exp(-static_cast<double>(k - 1) * (k - 1) / (2.0 * t));
        return s;
    };
    return 1.0 / (1.0 + tail(m) + tail(alpha - m));
}

// ---------------------------------------------------------------------------
// Decision thresholds and concentration arithmetic
// ---------------------------------------------------------------------------

// Frequencies at least 0.328/sqrt(alpha) form Xi, at least 0.207/sqrt(alpha)
// form Xi'; a stop certifies p_m(lambda*) >= 0.156/sqrt(alpha).
inline constexpr double kXiStrong = 0.328;
inline constexpr double kXiWeak = 0.207;
inline constexpr double kConclusion = 0.156;

// Variance bound for one frequency estimate: var(xi_i) < p_i / (3 alpha).
inline double xi_variance_bound(double p_i, int alpha) {
    if (alpha < 1) throw std::domain_error("variance bound: alpha must be positive");
    if (p_i < 0 || p_i > 1) throw std::domain_error("variance bound: p must lie in [0, 1]");
    return p_i / (3.0 * alpha);
}

// Chebyshev tail for one checked event, and the three-event budget per step.
inline double chebyshev_failure_bound(int alpha) {
    if (alpha < 1) throw std::domain_error("failure bound: alpha must be positive");
    return 27.0 / std::sqrt(static_cast<double>(alpha));
}

inline double step_failure_bound(int alpha) { return 3.0 * chebyshev_failure_bound(alpha); }

// Inverting the Chebyshev bound: an observed xi_i = b/sqrt(alpha) confines
// c_i = p_i sqrt(alpha) to b + 1/162 +- sqrt(b/81 + 1/162^2).
inline double inverse_concentration_lower(double b) {
    if (b < 0) throw std::domain_error("concentration inversion: b must be nonnegative");
    double shift = 1.0 / 162.0;
    return b + shift - std::sqrt(b / 81.0 + shift * shift);
}

inline double inverse_concentration_upper(double b) {
    if (b < 0) throw std::domain_error("concentration inversion: b must be nonnegative");
    double shift = 1.0 / 162.0;
    return b + shift + std::sqrt(b / 81.0 + shift * shift);
}

// ---------------------------------------------------------------------------
// Pluggable size estimators
// ---------------------------------------------------------------------------

// One estimation round at a given fugacity: xi_i is the frequency of size i
// among the recorded states (exact p_i for the oracle).
struct SizeEstimate {
    std::vector<double> xi;
    long long samples = 0;  // N; 0 for the exact oracle
    long long burn_in = 0;
    std::string regime;  // "oracle", "exact", or "theorem"
};

using SizeEstimator = std::function<SizeEstimate(const Rat&)>;

inline SizeEstimator oracle_estimator(const SizeProfile& sp) {
    return [sp](const Rat& lambda) {
        SizeEstimate est;
        for (const Rat& p : size_distribution(sp, lambda)) est.xi.push_back(to_double(p));
        est.regime = "oracle";
        return est;
    };
}

// Relaxation bound 2 e alpha n^{p+1} lambda^p (1 + max(lambda, 1/lambda)) for
// graphs of bipartite pathwidth at most p; chain mode sizes N = ceil(9 alpha R)
// from it when no exact spectrum is substituted.
inline double relaxation_bound_formula(long long n, int p, double lambda, int alpha) {
    if (n < 1) throw std::domain_error("relaxation formula: n must be at least 1");
    if (p < 0) throw std::domain_error("relaxation formula: p must be nonnegative");
    if (alpha < 1) throw std::domain_error("relaxation formula: alpha must be positive");
    if (!(lambda > 0)) throw std::domain_error("relaxation formula: lambda must be positive");
    return 2.0 * std::exp(1.0) * alpha * std::pow(static_cast<double>(n), p + 1) *
           std::pow(lambda, p) * (1.0 + std::max(lambda, 1.0 / lambda));
}

// Burn-in budget for tau_empty(eps): the exact spectral mixing time when the
// state space fits, otherwise the pathwidth-based theorem bound (p >= 2 and
// lambda >= e^9/n); of the available routes the smaller wins, and the regime
// field records which one ran.
struct BurnInPlan {
    double steps = 0;
    std::string regime;
};

inline BurnInPlan burn_in_plan(const WeightedGraph& wg, const Rat& lambda, double eps,
                               int p = -1, size_t state_cap = 4096) {
    std::optional<double> exact_steps, theorem_steps;
    try {
        TransitionMatrix tm = transition_matrix(wg, lambda, state_cap);
        exact_steps = static_cast<double>(exact_mixing_time(tm, eps, 0));
    } catch (const std::runtime_error&) {
        // state space over the cap; fall through to the theorem route
    }
    long long n = wg.g.n;
    double lam = to_double(lambda);
    if (p >= 2 && lam >= std::exp(9.0) / static_cast<double>(n)) {
        SizeProfile sp = size_profile(wg);
        theorem_steps = mixing_bound(n, p, lam, sp.alpha(), eps);
    }
    BurnInPlan plan;
    if (exact_steps && (!theorem_steps || *exact_steps <= *theorem_steps)) {
        plan.steps = *exact_steps;
        plan.regime = "exact";
    } else if (theorem_steps) {
        plan.steps = *theorem_steps;
        plan.regime = "theorem";
    } else {
        throw std::runtime_error("burn-in plan: no usable mixing bound (state space too large and "
                                 "the theorem preconditions fail)");
    }
    return plan;
}

// Exact asymptotic variance of the running frequency of |Z| = m along the
// stationary chain: sigma^2 = sum_j c_j^2 (1+beta_j)/(1-beta_j) where the c_j
// are the overlaps of the indicator with the non-top eigenvectors of the
// symmetrised kernel.  The time average over T steps then has standard error
// sqrt(sigma^2 / T).  Because sum_j c_j^2 = p(1-p), this never exceeds the
// worst-case bound p(1-p) (1+beta_1)/(1-beta_1) and is far sharper whenever
// the slow modes are orthogonal to set size.
inline double indicator_asymptotic_variance(const TransitionMatrix& tm, int m) {
    const size_t s = tm.states.size();
    if (s == 0) throw std::invalid_argument("indicator variance: empty state space");
    if (m < 0) throw std::invalid_argument("indicator variance: m must be nonnegative");
    std::vector<double> root(s);
    for (size_t i = 0; i < s; ++i) root[i] = std::sqrt(to_double(tm.pi[i]));
    Eigen::MatrixXd S(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j)
            S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                root[i] * to_double(tm.P[i][j]) / root[j];
    Eigen::MatrixXd sym = 0.5 * (S + S.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("indicator variance: eigensolver failed");
    Eigen::VectorXd g(static_cast<Eigen::Index>(s));
    for (size_t i = 0; i < s; ++i)
        g(static_cast<Eigen::Index>(i)) =
            (std::popcount(tm.states[i]) == m) ? root[i] : 0.0;
    // Eigenvalues ascend, so the top slot carries the stationary mean; the
    // remaining overlaps are automatically mean-centred.
    double var = 0;
    for (Eigen::Index j = 0; j + 1 < static_cast<Eigen::Index>(s); ++j) {
        double beta = solver.eigenvalues()(j);
        double c = solver.eigenvectors().col(j).dot(g);
        var += c * c * (1.0 + beta) / (1.0 - beta);
    }
    return var;
}

enum class RelaxationSource { exact, formula, fixed };

struct ChainEstimatorConfig {
    RelaxationSource source = RelaxationSource::exact;
    double relaxation_bound = 0;  // R, used when source == fixed
    int p = -1;                   // bipartite pathwidth, used when source == formula
    long long samples = -1;       // N override; -1 derives ceil(9 alpha R)
    long long burn_in = -1;       // override; -1 derives the tau_empty(1/n) plan
    size_t state_cap = 4096;
    long long step_budget = 50'000'000;  // guard on burn-in + N per round
};

// Chain estimator: burn in from the empty set, run N further steps, and count
// the occupancy eta_i of each size among those N states; xi_i = eta_i / N.
inline SizeEstimator chain_estimator(const WeightedGraph& wg, const ChainEstimatorConfig& cfg,
                                     Rng& rng) {
    if (wg.g.n < 1) throw std::invalid_argument("chain estimator: empty graph");
    SizeProfile sp = size_profile(wg.g);
    int alpha = sp.alpha();
    return [&wg, cfg, alpha, &rng](const Rat& lambda) {
        double lam = to_double(lambda);
        if (!(lam > 0)) throw std::invalid_argument("chain estimator: lambda must be positive");

        double R = 0;
        switch (cfg.source) {
            case RelaxationSource::fixed:
                if (!(cfg.relaxation_bound >= 1))
                    throw std::invalid_argument("chain estimator: fixed relaxation bound must be >= 1");
                R = cfg.relaxation_bound;
                break;
            case RelaxationSource::formula:
                R = relaxation_bound_formula(wg.g.n, cfg.p, lam, alpha);
                break;
            case RelaxationSource::exact:
                R = spectrum(wg, lambda, cfg.state_cap).relaxation;
                break;
        }
        long long N = cfg.samples;
        if (N < 0) {
            double want = std::ceil(9.0 * alpha * R);
            if (want > static_cast<double>(cfg.step_budget))
                throw std::runtime_error("chain estimator: sample budget ceil(9 alpha R) exceeds the step budget");
            N = static_cast<long long>(want);
        }
        if (N < 1) throw std::invalid_argument("chain estimator: sample budget must be positive");

        SizeEstimate est;
        est.regime = "exact";
        double burn = static_cast<double>(cfg.burn_in);
        if (cfg.burn_in < 0) {
            BurnInPlan plan = burn_in_plan(wg, lambda, 1.0 / wg.g.n, cfg.p, cfg.state_cap);
            burn = plan.steps;
            est.regime = plan.regime;
        }
        if (burn + static_cast<double>(N) > static_cast<double>(cfg.step_budget))
            throw std::runtime_error("chain estimator: burn-in plus sample budget exceeds the step budget");

        est.burn_in = static_cast<long long>(burn);
        est.samples = N;
        VertexSet Z = run_chain(wg, 0, lam, est.burn_in, rng);
        std::vector<long long> eta(static_cast<size_t>(wg.g.n) + 1, 0);
        for (long long t = 0; t < N; ++t) {
            Z = glauber_step(wg, Z, lam, rng);
            ++eta[static_cast<size_t>(std::popcount(Z))];
        }
        for (long long e : eta) est.xi.push_back(static_cast<double>(e) / static_cast<double>(N));
        return est;
    };
}

// ---------------------------------------------------------------------------
// Bisection
// ---------------------------------------------------------------------------

struct BisectionState {
    Rat kappa0 = 0, kappa1 = 0, kappa_star = 0, lambda = 0;
    int m = 0, alpha = 0, q = 0;
    long long N = 0;
    std::vector<double> xi;
    std::vector<int> Xi, Xi_prime;
    int step = 0;
    int max_steps = 0;
};

enum class BisectStatus { success, failed_max_steps, failed_no_support };

struct BisectStepRecord {
    int step = 0;
    Rat kappa0, kappa1, lambda;
    std::vector<double> xi;
    std::vector<int> Xi, Xi_prime;
    int pivot = -1;  // k, when a move happened
    char move = 'S'; // 'S' stop, 'L' left, 'R' right
};

struct BisectResult {
    BisectStatus status = BisectStatus::failed_max_steps;
    Rat lambda_star = 0;  // set on success
    double p_lower = 0;   // certified 0.156/sqrt(alpha) on success
    BisectionState state;
    std::vector<BisectStepRecord> trace;
    std::string regime;  // estimator regime of the last round
};

namespace detail {

inline void classify_frequencies(const std::vector<double>& xi, int alpha, std::vector<int>& Xi,
                                 std::vector<int>& Xi_prime) {
    Xi.clear();
    Xi_prime.clear();
    double root = std::sqrt(static_cast<double>(alpha));
    for (int i = 1; i <= alpha; ++i) {
        double x = static_cast<size_t>(i) < xi.size() ? xi[static_cast<size_t>(i)] : 0.0;
        if (x >= kXiStrong / root) Xi.push_back(i);
        if (x >= kXiWeak / root) Xi_prime.push_back(i);
    }
}

inline int bisect_step_cap(int m, const Rat& kappa_star) {
    double v = std::log2(2.0 * m * to_double(kappa_star));
    return std::max(0, static_cast<int>(std::ceil(v)));
}

}  // namespace detail

// Halve [kappa0, kappa1] around lambda_m: estimate at the midpoint, stop when
// m lands in Xi', otherwise move the marker past the midpoint on the side a
// pivot k drawn from Xi dictates.  Runs at most ceil(log2(2 m kappa_star))
// rounds; the deterministic pivot (k = min Xi) serves the exact oracle.
inline BisectResult bisect(int alpha, int m, Rat kappa0, Rat kappa1, Rat kappa_star,
                           const SizeEstimator& estimate, Rng& rng,
                           bool deterministic_pivot = false, int q_echo = 0) {
    if (alpha < 1) throw std::invalid_argument("bisect: alpha must be positive");
    if (m < 1 || m > alpha) throw std::invalid_argument("bisect: m out of range [1, alpha]");
    if (!(0 < kappa0 && kappa0 < kappa1))
        throw std::invalid_argument("bisect: markers must satisfy 0 < kappa0 < kappa1");
    if (kappa_star < kappa1)
        throw std::invalid_argument("bisect: kappa_star must dominate the right marker");

    BisectResult res;
    BisectionState& st = res.state;
    st.kappa0 = kappa0;
    st.kappa1 = kappa1;
    st.kappa_star = kappa_star;
    st.m = m;
    st.alpha = alpha;
    st.q = q_echo;
    st.max_steps = detail::bisect_step_cap(m, kappa_star);

    for (st.step = 1;; ++st.step) {
        if (st.step > st.max_steps) {
            res.status = BisectStatus::failed_max_steps;
            st.step = st.max_steps;
            return res;
        }
        st.lambda = (st.kappa0 + st.kappa1) / 2;
        SizeEstimate est = estimate(st.lambda);
        st.xi = est.xi;
        st.N = est.samples;
        res.regime = est.regime;
        detail::classify_frequencies(st.xi, alpha, st.Xi, st.Xi_prime);

        BisectStepRecord rec;
        rec.step = st.step;
        rec.kappa0 = st.kappa0;
        rec.kappa1 = st.kappa1;
        rec.lambda = st.lambda;
        rec.xi = st.xi;
        rec.Xi = st.Xi;
        rec.Xi_prime = st.Xi_prime;

        if (std::find(st.Xi_prime.begin(), st.Xi_prime.end(), m) != st.Xi_prime.end()) {
            res.trace.push_back(std::move(rec));
            res.status = BisectStatus::success;
            res.lambda_star = st.lambda;
            res.p_lower = kConclusion / std::sqrt(static_cast<double>(alpha));
            return res;
        }
        if (st.Xi.empty()) {
            res.trace.push_back(std::move(rec));
            res.status = BisectStatus::failed_no_support;
            return res;
        }
        int k = deterministic_pivot
                    ? st.Xi.front()
                    : st.Xi[static_cast<size_t>(rng.uniform_below(st.Xi.size()))];
        rec.pivot = k;
        if (k > m) {
            st.kappa1 = st.lambda;  // lambda_m < lambda: move left
            rec.move = 'L';
        } else {
            st.kappa0 = st.lambda;  // k < m (k = m would have stopped): move right
            rec.move = 'R';
        }
        res.trace.push_back(std::move(rec));
        if (!(0 < st.kappa0 && st.kappa0 < st.kappa1))
            throw std::logic_error("bisect: marker invariant violated");
    }
}

inline BisectResult bisect_oracle(const SizeProfile& sp, int m, const Rat& kappa0,
                                  const Rat& kappa1, const Rat& kappa_star, int q_echo = 0) {
    Rng rng(0);
    return bisect(sp.alpha(), m, kappa0, kappa1, kappa_star, oracle_estimator(sp), rng, true, q_echo);
}

inline BisectResult bisect_chain(const WeightedGraph& wg, int m, const Rat& kappa0,
                                 const Rat& kappa1, const Rat& kappa_star,
                                 const ChainEstimatorConfig& cfg, Rng& rng, int q_echo = 0) {
    SizeProfile sp = size_profile(wg.g);
    return bisect(sp.alpha(), m, kappa0, kappa1, kappa_star, chain_estimator(wg, cfg, rng), rng,
                  false, q_echo);
}

// ---------------------------------------------------------------------------
// Doubling initialization
// ---------------------------------------------------------------------------

struct DoublingOptions {
    int q = 9;                          // amenability exponent; > q log2 n doublings abort
    Rat start_scale = Rat(162062, 10);  // rational constant just above 2e^9; lambda starts at this / n
};

struct DoublingResult {
    Rat kappa0, kappa1, kappa_star;
    int examined = 0;          // fugacities estimated; doublings performed = examined - 1
    bool small_fugacity = false;  // first-step move-left: exact enumeration supplied the window
    bool immediate = false;       // m already sat in Xi' at some doubling fugacity
    std::optional<Rat> lambda_m, lambda_m1;  // filled on the small-fugacity route
    std::vector<Rat> trace;    // examined fugacities
    int q = 0;
};

// Double lambda from start_scale/n until the move-left signal (pivot k > m)
// fires, then hand back (lambda/2, lambda); a stop signal during doubling
// exits the same way.  A move-left at the very first fugacity means lambda_m
// is already below the start, so the exact window from bounded enumeration
// substitutes: markers (2 lambda_m / 3, 4 lambda_m / 3), keeping kappa_star at
// the first examined fugacity so the bisection step cap stays meaningful.
inline DoublingResult doubling_init(int alpha, long long n, int m, const SizeEstimator& estimate,
                                    Rng& rng, bool deterministic_pivot,
                                    const std::function<std::pair<Rat, Rat>()>& exact_window,
                                    const DoublingOptions& opt = {}) {
    if (alpha < 1) throw std::invalid_argument("doubling: alpha must be positive");
    if (m < 1 || m > alpha) throw std::invalid_argument("doubling: m out of range [1, alpha]");
    if (n < 1) throw std::invalid_argument("doubling: n must be at least 1");
    if (opt.q < 1) throw std::invalid_argument("doubling: amenability exponent must be positive");
    if (!(opt.start_scale > 0)) throw std::invalid_argument("doubling: start scale must be positive");

    int cap = std::max(1, static_cast<int>(std::ceil(
                              opt.q * std::log2(static_cast<double>(std::max<long long>(n, 2))))));
    DoublingResult res;
    res.q = opt.q;
    Rat lambda = opt.start_scale / n;
    std::vector<int> Xi, Xi_prime;
    for (int i = 1;; ++i) {
        res.trace.push_back(lambda);
        res.examined = i;
        SizeEstimate est = estimate(lambda);
        detail::classify_frequencies(est.xi, alpha, Xi, Xi_prime);

        if (std::find(Xi_prime.begin(), Xi_prime.end(), m) != Xi_prime.end()) {
            res.immediate = true;
            res.kappa0 = lambda / 2;
            res.kappa1 = lambda;
            res.kappa_star = lambda;
            return res;
        }
        if (!Xi.empty()) {
            int k = deterministic_pivot ? Xi.front()
                                        : Xi[static_cast<size_t>(rng.uniform_below(Xi.size()))];
            if (k > m) {
                if (i == 1) {
                    auto [lam_m, lam_m1] = exact_window();
                    res.small_fugacity = true;
                    res.lambda_m = lam_m;
                    res.lambda_m1 = lam_m1;
                    res.kappa0 = 2 * lam_m / 3;
                    res.kappa1 = 4 * lam_m / 3;
                    res.kappa_star = res.trace.front();
                } else {
                    res.kappa0 = lambda / 2;
                    res.kappa1 = lambda;
                    res.kappa_star = lambda;
                }
                return res;
            }
        }
        // k < m or no size cleared the strong threshold yet: keep doubling
        if (i >= cap + 1)
            throw std::runtime_error("doubling exceeded the amenability budget of q log2(n) doublings");
        lambda *= 2;
    }
}

inline DoublingResult doubling_init_from_profile(const SizeProfile& sp, long long n, int m,
                                                 const DoublingOptions& opt = {}) {
    Rng rng(0);
    auto window = [&sp, m]() { return std::pair<Rat, Rat>(sp.ratio(m), sp.ratio(m + 1)); };
    return doubling_init(sp.alpha(), n, m, oracle_estimator(sp), rng, true, window, opt);
}

inline DoublingResult doubling_init_oracle(const Graph& g, int m, const DoublingOptions& opt = {}) {
    return doubling_init_from_profile(size_profile(g), g.n, m, opt);
}

inline DoublingResult doubling_init_chain(const WeightedGraph& wg, int m,
                                          const ChainEstimatorConfig& cfg, Rng& rng,
                                          const DoublingOptions& opt = {}) {
    SizeProfile sp = size_profile(wg.g);
    auto window = [&wg, m]() {
        std::vector<BigInt> counts = wg.uniform() ? size_counts_up_to(wg.g, m + 1)
                                                  : weighted_polynomial(wg.g, wg.w);
        if (static_cast<int>(counts.size()) <= m + 1)
            throw std::logic_error("doubling: bounded enumeration found no sets of size m + 1");
        return std::pair<Rat, Rat>(Rat(counts[static_cast<size_t>(m - 1)], counts[static_cast<size_t>(m)]),
                                   Rat(counts[static_cast<size_t>(m)], counts[static_cast<size_t>(m + 1)]));
    };
    return doubling_init(sp.alpha(), wg.g.n, m, chain_estimator(wg, cfg, rng), rng, false, window, opt);
}

// ---------------------------------------------------------------------------
// End-to-end pipeline: doubling then bisection
// ---------------------------------------------------------------------------

struct FixedSizeLambda {
    DoublingResult doubling;
    BisectResult bisection;
    bool success = false;
    Rat lambda_star = 0;
};

inline FixedSizeLambda find_lambda_from_profile(const SizeProfile& sp, long long n, int m,
                                                const DoublingOptions& opt = {}) {
    FixedSizeLambda out;
    out.doubling = doubling_init_from_profile(sp, n, m, opt);
    out.bisection = bisect_oracle(sp, m, out.doubling.kappa0, out.doubling.kappa1,
                                  out.doubling.kappa_star, opt.q);
    out.success = out.bisection.status == BisectStatus::success;
    if (out.success) out.lambda_star = out.bisection.lambda_star;
    return out;
}

inline FixedSizeLambda find_lambda_oracle(const Graph& g, int m, const DoublingOptions& opt = {}) {
    return find_lambda_from_profile(size_profile(g), g.n, m, opt);
}

inline FixedSizeLambda find_lambda_chain(const WeightedGraph& wg, int m,
                                         const ChainEstimatorConfig& cfg, Rng& rng,
                                         const DoublingOptions& opt = {}) {
    FixedSizeLambda out;
    out.doubling = doubling_init_chain(wg, m, cfg, rng, opt);
    out.bisection = bisect_chain(wg, m, out.doubling.kappa0, out.doubling.kappa1,
                                 out.doubling.kappa_star, cfg, rng, opt.q);
    out.success = out.bisection.status == BisectStatus::success;
    if (out.success) out.lambda_star = out.bisection.lambda_star;
    return out;
}

// ---------------------------------------------------------------------------
// Fixed-size sampling by rejection
// ---------------------------------------------------------------------------

struct FixedSizeConfig {
    long long burn_in = -1;  // -1 derives the tau_empty(1/n) plan
    int p = -1;              // passed to the burn-in plan's theorem route
    size_t state_cap = 4096;
    long long max_proposals = 10'000'000;
};

struct FixedSizeSampleResult {
    std::vector<VertexSet> samples;
    long long proposals = 0;  // post-burn-in chain steps inspected
    double acceptance = 0;    // samples.size() / proposals
    long long burn_in = 0;
    std::string regime;
};

namespace detail {

inline FixedSizeSampleResult fixed_size_run(const WeightedGraph& wg, int m, const Rat& lambda,
                                            long long want_count, long long want_steps, Rng& rng,
                                            const FixedSizeConfig& cfg) {
    if (m < 0 || m > wg.g.n) throw std::invalid_argument("fixed-size sampling: m out of range");
    double lam = to_double(lambda);
    if (!(lam > 0)) throw std::invalid_argument("fixed-size sampling: lambda must be positive");

    FixedSizeSampleResult out;
    out.regime = "fixed";
    double burn = static_cast<double>(cfg.burn_in);
    if (cfg.burn_in < 0) {
        BurnInPlan plan = burn_in_plan(wg, lambda, 1.0 / wg.g.n, cfg.p, cfg.state_cap);
        burn = plan.steps;
        out.regime = plan.regime;
    }
    if (burn > static_cast<double>(cfg.max_proposals))
        throw std::runtime_error("fixed-size sampling: burn-in exceeds the proposal budget");
    out.burn_in = static_cast<long long>(burn);

    VertexSet Z = run_chain(wg, 0, lam, out.burn_in, rng);
    while (true) {
        if (want_count >= 0 && static_cast<long long>(out.samples.size()) >= want_count) break;
        if (want_steps >= 0 && out.proposals >= want_steps) break;
        if (out.proposals >= cfg.max_proposals)
            throw std::runtime_error("fixed-size sampling: proposal budget exhausted before "
                                     "collecting the requested samples");
        Z = glauber_step(wg, Z, lam, rng);
        ++out.proposals;
        if (std::popcount(Z) == m) out.samples.push_back(Z);
    }
    out.acceptance = out.proposals ? static_cast<double>(out.samples.size()) /
                                         static_cast<double>(out.proposals)
                                   : 0.0;
    return out;
}

}  // namespace detail

// Collect `count` samples with |Z| = m by rejection on the running chain.
inline FixedSizeSampleResult sample_fixed_size(const WeightedGraph& wg, int m, const Rat& lambda,
                                               long long count, Rng& rng,
                                               const FixedSizeConfig& cfg = {}) {
    if (count < 1) throw std::invalid_argument("fixed-size sampling: count must be positive");
    return detail::fixed_size_run(wg, m, lambda, count, -1, rng, cfg);
}

// Run a fixed number of post-burn-in steps, keeping every |Z| = m state; the
// acceptance-rate experiments read the hit frequency off this.
inline FixedSizeSampleResult fixed_size_trial(const WeightedGraph& wg, int m, const Rat& lambda,
                                              long long steps, Rng& rng,
                                              const FixedSizeConfig& cfg = {}) {
    if (steps < 1) throw std::invalid_argument("fixed-size sampling: step count must be positive");
    return detail::fixed_size_run(wg, m, lambda, -1, steps, rng, cfg);
}

}  // namespace hardcore
