#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "types.hpp"

namespace hardcore {

// ---------------------------------------------------------------------------
// Enumeration oracle
// ---------------------------------------------------------------------------

struct IndependentSets {
    std::vector<std::vector<VertexSet>> by_size;  // by_size[k] sorted by set order

    int alpha() const { return static_cast<int>(by_size.size()) - 1; }

    size_t total() const {
        size_t t = 0;
        for (const auto& g : by_size) t += g.size();
        return t;
    }

    // Flat state list: sizes ascending, set order inside a size class.
    std::vector<VertexSet> flat() const {
        std::vector<VertexSet> out;
        for (const auto& g : by_size) out.insert(out.end(), g.begin(), g.end());
        return out;
    }
};

inline IndependentSets enumerate_independent_sets(const Graph& g, int cap = 20) {
    if (g.n > cap) throw std::runtime_error("independent-set enumeration cap exceeded (n=" +
                                            std::to_string(g.n) + ", cap=" + std::to_string(cap) + ")");
    IndependentSets out;
    out.by_size.emplace_back();
    out.by_size[0].push_back(0);
    // Grow sets one vertex at a time; extending by vertices larger than the
    // current maximum visits every independent set exactly once.
    std::vector<VertexSet> frontier = {0};
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (VertexSet s : frontier) {
            int start = s ? 63 - std::countl_zero(s) + 1 : 0;
            for (int v = start; v < g.n; ++v) {
                if (g.adj[static_cast<size_t>(v)] & s) continue;
                next.push_back(s | bit(v));
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end(), set_less);
        out.by_size.push_back(next);
        frontier = std::move(next);
    }
    return out;
}

// Coefficients of the weighted polynomial Sum_k W_k x^k via the deletion
// recurrence P(G) = P(G - v) + w(v) x P(G - N[v]), memoized on vertex masks.
// With unit weights this yields the plain counts N_k.
inline std::vector<BigInt> weighted_polynomial(const Graph& g, const std::vector<long long>& w,
                                               size_t memo_cap = size_t(1) << 22) {
    std::unordered_map<VertexSet, std::vector<BigInt>> memo;
    auto rec = [&](auto&& self, VertexSet mask) -> const std::vector<BigInt>& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        if (memo.size() >= memo_cap) throw std::runtime_error("graph too large for exact counting");
        std::vector<BigInt> res;
        if (!mask) {
            res = {BigInt(1)};
        } else {
            int v = lowest_vertex(mask);
            auto without = self(self, mask & ~bit(v));
            res = without;
            auto with = self(self, mask & ~(g.adj[static_cast<size_t>(v)] | bit(v)));
            if (res.size() < with.size() + 1) res.resize(with.size() + 1, BigInt(0));
            for (size_t k = 0; k < with.size(); ++k) res[k + 1] += BigInt(w[static_cast<size_t>(v)]) * with[k];
        }
        return memo.emplace(mask, std::move(res)).first->second;
    };
    return rec(rec, g.vertices());
}

// ---------------------------------------------------------------------------
// Polynomial profile
// ---------------------------------------------------------------------------

struct RootEstimate {
    double re = 0, im = 0, residual = 0;
};

struct PolynomialProfile {
    int alpha = 0;
    std::vector<BigInt> counts;           // N_0..N_alpha
    std::vector<BigInt> weighted_counts;  // W_0..W_alpha (equal to counts for unit weights)
    Rat lambda = 0;
    std::vector<Rat> scaled;              // M_k = lambda^k N_k
    std::vector<Rat> ratios;              // lambda_i = N_{i-1}/N_i, i = 1..alpha
    std::vector<RootEstimate> roots;      // filled by compute_roots

    // P_G(lambda) = Sum M_k for unit weights; Sum lambda^k W_k in general.
    Rat partition_unweighted() const {
        Rat p = 0;
        for (const Rat& m : scaled) p += m;
        return p;
    }
    Rat partition_weighted() const {
        Rat p = 0, pw = 1;
        for (size_t k = 0; k < weighted_counts.size(); ++k) {
            p += pw * Rat(weighted_counts[k]);
            pw *= lambda;
        }
        return p;
    }
};

inline PolynomialProfile profile(const WeightedGraph& wg, const Rat& lambda, int cap = 20) {
    if (wg.g.n > cap) throw std::runtime_error("profile enumeration cap exceeded (n=" +
                                               std::to_string(wg.g.n) + ", cap=" + std::to_string(cap) + ")");
    if (lambda < 0) throw std::invalid_argument("fugacity must be nonnegative");
    PolynomialProfile p;
    p.lambda = lambda;
    std::vector<long long> unit(static_cast<size_t>(wg.g.n), 1);
    p.counts = weighted_polynomial(wg.g, unit);
    p.weighted_counts = wg.uniform() ? p.counts : weighted_polynomial(wg.g, wg.w);
    p.alpha = static_cast<int>(p.counts.size()) - 1;
    Rat pw = 1;
    for (size_t k = 0; k < p.counts.size(); ++k) {
        p.scaled.push_back(pw * Rat(p.counts[k]));
        pw *= lambda;
    }
    for (size_t k = 1; k < p.counts.size(); ++k)
        p.ratios.push_back(Rat(p.counts[k - 1], p.counts[k]));
    return p;
}

// Gibbs masses pi(I) = lambda^{|I|} w(I) / P over the flat state order.
inline std::vector<Rat> gibbs_masses(const WeightedGraph& wg, const IndependentSets& sets, const Rat& lambda) {
    if (lambda < 0) throw std::invalid_argument("fugacity must be nonnegative");
    std::vector<Rat> mass;
    Rat total = 0;
    for (size_t k = 0; k < sets.by_size.size(); ++k) {
        Rat lk = rat_pow(lambda, static_cast<unsigned>(k));
        for (VertexSet s : sets.by_size[k]) {
            BigInt w = 1;
            for (VertexSet t = s; t;) {
                int v = lowest_vertex(t);
                t &= t - 1;
                w *= wg.w[static_cast<size_t>(v)];
            }
            Rat m = lk * Rat(w);
            mass.push_back(m);
            total += m;
        }
    }
    for (Rat& m : mass) m /= total;
    return mass;
}

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

struct RootsReport {
    bool pass = false;
    std::vector<RootEstimate> roots;
    int witness = -1;  // index of offending root on failure
    double tol = 0;
};

inline void compute_roots(PolynomialProfile& p) {
    p.roots.clear();
    int deg = p.alpha;
    if (deg < 1) return;
    std::vector<double> c(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) c[static_cast<size_t>(k)] = to_double(p.counts[static_cast<size_t>(k)]);
    // Companion matrix of the monic normalization.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(deg)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("root finder did not converge on degree-" + std::to_string(deg) + " polynomial");
    }
    for (int i = 0; i < deg; ++i) {
        std::complex<double> z = solver.eigenvalues()(i);
        // Backward-error style residual: |P(z)| relative to the evaluation scale.
        std::complex<double> horner = 0;
        double scale = 0;
        for (int k = deg; k >= 0; --k) {
            horner = horner * z + c[static_cast<size_t>(k)];
            scale = scale * std::abs(z) + std::abs(c[static_cast<size_t>(k)]);
        }
        RootEstimate r;
        r.re = z.real();
        r.im = z.imag();
        r.residual = scale > 0 ? std::abs(horner) / scale : 0.0;
        p.roots.push_back(r);
    }
    std::sort(p.roots.begin(), p.roots.end(), [](const RootEstimate& a, const RootEstimate& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
}

inline RootsReport check_real_negative_roots(PolynomialProfile& p, double tol = 1e-8) {
    if (p.alpha < 1) throw std::invalid_argument("realness check needs a polynomial of degree at least 1");
    if (p.roots.empty()) compute_roots(p);
    RootsReport rep;
    rep.tol = tol;
    rep.roots = p.roots;
    rep.pass = true;
    for (size_t i = 0; i < rep.roots.size(); ++i) {
        const auto& r = rep.roots[i];
        bool real_enough = std::abs(r.im) <= tol * (1.0 + std::abs(r.re));
        bool negative = r.re < 0;
        if (!real_enough || !negative) {
            rep.pass = false;
            rep.witness = static_cast<int>(i);
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Log-concavity checks
// ---------------------------------------------------------------------------

struct RatioCheck {        // Newton-type ratio inequality at interior index i
    int i = 0;
    bool pass = false;
    double margin = 0;     // rhs - lhs as doubles
};

struct DecayCheck {        // M_{m-k}/M_m <= e^{-(k-1)^2/(2m)} (M_{m-1}/M_m)^k
    int m = 0, k = 0;
    bool pass = false;           // the float check of the stated inequality
    bool strong_rational = false;  // exact check of the stronger falling-factorial form
    double lhs = 0, rhs = 0;
};

struct LogConcavityReport {
    std::vector<RatioCheck> ratio_checks;
    std::vector<DecayCheck> decay_checks;
    bool all_pass = true;
};

inline LogConcavityReport log_concavity_report(const PolynomialProfile& p) {
    if (p.alpha < 2) {
        if (p.alpha < 1) throw std::invalid_argument("log-concavity check needs alpha >= 1");
        return {};  // vacuously passes: no interior index
    }
    for (int i = 0; i <= p.alpha; ++i)
        if (p.scaled[static_cast<size_t>(i)] == 0)
            throw std::invalid_argument("degenerate profile: M_" + std::to_string(i) + " = 0");

    LogConcavityReport rep;
    int a = p.alpha;
    // Ratio form at interior indices: M_{i-1}/M_i <= [i(a-i)/((i+1)(a-i+1))] M_i/M_{i+1}.
    for (int i = 1; i <= a - 1; ++i) {
        Rat lhs = p.scaled[static_cast<size_t>(i - 1)] / p.scaled[static_cast<size_t>(i)];
        Rat factor(BigInt(i) * BigInt(a - i), BigInt(i + 1) * BigInt(a - i + 1));
        Rat rhs = factor * p.scaled[static_cast<size_t>(i)] / p.scaled[static_cast<size_t>(i + 1)];
        RatioCheck c;
        c.i = i;
        c.pass = lhs <= rhs;
        c.margin = to_double(rhs - lhs);
        rep.all_pass = rep.all_pass && c.pass;
        rep.ratio_checks.push_back(c);
    }
    // Decay form for every m and 1 <= k <= m.  The exact route checks the
    // stronger factor (m)_k / m^k, which dominates since
    // prod (1 - j/m) <= exp(-k(k-1)/(2m)) <= exp(-(k-1)^2/(2m)).
    for (int m = 1; m <= a; ++m) {
        Rat base = p.scaled[static_cast<size_t>(m - 1)] / p.scaled[static_cast<size_t>(m)];
        for (int k = 1; k <= m; ++k) {
            DecayCheck c;
            c.m = m;
            c.k = k;
            Rat lhs = p.scaled[static_cast<size_t>(m - k)] / p.scaled[static_cast<size_t>(m)];
            BigInt falling = 1;
            for (int j = 0; j < k; ++j) falling *= BigInt(m - j);
            Rat strong_factor(falling, int_pow(BigInt(m), static_cast<unsigned>(k)));
            c.strong_rational = lhs <= strong_factor * rat_pow(base, static_cast<unsigned>(k));
            c.lhs = to_double(lhs);
            c.rhs = std::exp(-double(k - 1) * double(k - 1) / (2.0 * m)) *
                    std::pow(to_double(base), k);
            c.pass = c.strong_rational || c.lhs <= c.rhs * (1 + 1e-12);
            rep.all_pass = rep.all_pass && c.pass;
            rep.decay_checks.push_back(c);
        }
    }
    return rep;
}

}  // namespace hardcore
