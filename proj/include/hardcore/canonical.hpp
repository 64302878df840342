#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "independence.hpp"
#include "pathdecomp.hpp"
#include "types.hpp"

namespace hardcore {

// ---------------------------------------------------------------------------
// Canonical paths between independent sets
// ---------------------------------------------------------------------------
//
// For an ordered pair (X, Y) of independent sets, the path walks from X to Y
// through single-site moves.  Each connected component of the graph induced
// on X ^ Y is handled in turn (ordered by smallest vertex), sweeping a good
// path decomposition of the component bag by bag.  Alongside the evolving
// independent set Z, the construction maintains an encoding W plus two small
// remainder sets R+ (staged for insertion) and R- (deleted but still pinned
// to the current bag); together they determine (X, Y) from any intermediate
// transition, which is what bounds the flow routed through any one move.

struct PathStep {
    VertexSet z_from = 0, z_to = 0;            // the chain move
    VertexSet W = 0, Rplus = 0, Rminus = 0;    // snapshot just before the move
    int component = 0;                         // component index within X ^ Y
    int bag = 0;                               // 1-based bag index in that component
    VertexSet bag_set = 0;
    int vertex = -1;                           // moved vertex
    bool insert = false;
};

struct CanonicalPath {
    VertexSet X = 0, Y = 0;
    std::vector<VertexSet> states;  // Z_0 = X, ..., Z_L = Y
    std::vector<PathStep> steps;    // length L
    int length() const { return static_cast<int>(steps.size()); }
};

namespace detail {

struct PathEngine {
    const Graph& g;
    VertexSet X, Y, diff;
    VertexSet Z, W, Rp, Rm;
    CanonicalPath* out;

    void fail(const std::string& what) const {
        throw std::logic_error("canonical path construction: " + what);
    }

    // The encoding W is only guaranteed independent at bag boundaries: between
    // the deletion and insertion phases of one bag it may briefly hold a
    // freshly deleted vertex next to a neighbour that is still waiting for its
    // insertion within the same bag.
    void check_invariants() const {
        VertexSet R = Rp | Rm;
        if (Rp & Rm) fail("remainder sets overlap");
        if ((Z ^ W) & R) fail("remainder intersects the symmetric difference of Z and W");
        if (((Z ^ W) | R) != diff) fail("state does not partition the target symmetric difference");
        if (popcount(Z) + popcount(W) + popcount(R) != popcount(X) + popcount(Y))
            fail("size conservation broken");
        if (!is_independent(g, Z)) fail("walk state is not independent");
    }

    void move(VertexSet to, int comp_index, int bag_index, VertexSet bag, int u, bool insert) {
        if (popcount(Z ^ to) != 1) fail("move is not single-site");
        PathStep st;
        st.z_from = Z;
        st.z_to = to;
        st.W = W;
        st.Rplus = Rp;
        st.Rminus = Rm;
        st.component = comp_index;
        st.bag = bag_index;
        st.bag_set = bag;
        st.vertex = u;
        st.insert = insert;
        out->steps.push_back(st);
        Z = to;
        out->states.push_back(Z);
    }

    // Sweeps one component whose bags are given in the labels of g.
    void run_component(int comp_index, VertexSet comp, const std::vector<VertexSet>& bags) {
        const size_t r = bags.size();
        for (size_t i = 0; i < r; ++i) {
            const VertexSet Bi = bags[i];
            const VertexSet Bnext = (i + 1 < r) ? bags[i + 1] : 0;
            const int bag_index = static_cast<int>(i) + 1;
            if (Bi & ~comp) fail("bag leaves its component");

            // preprocessing: encoding vertices shared with the next bag are
            // staged for a later insertion
            VertexSet stage = Bi & Bnext & W;
            Rp |= stage;
            W &= ~stage;
            check_invariants();
            if ((Rp | Rm) & ~Bi) fail("remainder escapes the current bag");

            // insertion candidates are frozen now, before any deletion
            const VertexSet cand = (Bi & (W | Rp)) & ~Bnext;

            // deletions in ascending vertex order
            for (VertexSet del = Bi & Z; del;) {
                int u = lowest_vertex(del);
                del &= del - 1;
                move(Z & ~bit(u), comp_index, bag_index, Bi, u, false);
                if ((Bnext >> u) & 1u)
                    Rm |= bit(u);
                else
                    W |= bit(u);
                check_invariants();
            }

            // insertions in ascending vertex order
            for (VertexSet ins = cand; ins;) {
                int u = lowest_vertex(ins);
                ins &= ins - 1;
                if (!is_independent(g, Z | bit(u))) fail("insertion would violate independence");
                move(Z | bit(u), comp_index, bag_index, Bi, u, true);
                if ((W >> u) & 1u)
                    W &= ~bit(u);
                else if ((Rp >> u) & 1u)
                    Rp &= ~bit(u);
                else
                    fail("inserted vertex was neither in the encoding nor staged");
                check_invariants();
            }

            // postprocessing: deleted vertices leaving the overlap join the encoding
            W |= Rm & ~Bnext;
            Rm &= Bnext;
            check_invariants();
            if ((Rp | Rm) & ~(Bi & Bnext)) fail("remainder not confined to the bag overlap");
            if (!is_independent(g, W)) fail("encoding not independent at a bag boundary");
        }
        if (Rp | Rm) fail("remainder not exhausted at component end");
        if ((Z & comp) != (Y & comp)) fail("component walk did not reach its target");
        if ((W & comp) != (X & comp)) fail("component encoding did not flip");
    }
};

}  // namespace detail

// Builds canonical paths over one fixed graph, caching the per-component
// decompositions (keyed by component vertex set).
class CanonicalPathBuilder {
  public:
    explicit CanonicalPathBuilder(Graph g) : g_(std::move(g)) {}

    const Graph& graph() const { return g_; }

    // Least good decomposition of the component, bags in g's labels.  The
    // width cap is the exact pathwidth of the component, so the result is the
    // lexicographically least good decomposition of minimum width.
    const std::vector<VertexSet>& component_bags(VertexSet comp) {
        auto it = cache_.find(comp);
        if (it != cache_.end()) return it->second;
        auto [h, old_of] = induced_subgraph(g_, comp);
        PathDecomposition dec = lex_least_good(h, pathwidth_exact(h).pathwidth);
        std::vector<VertexSet> bags;
        bags.reserve(dec.bags.size());
        for (VertexSet b : dec.bags) {
            VertexSet mapped = 0;
            for (int v : set_to_vector(b)) mapped |= bit(old_of[static_cast<size_t>(v)]);
            bags.push_back(mapped);
        }
        return cache_.emplace(comp, std::move(bags)).first->second;
    }

    CanonicalPath path(VertexSet X, VertexSet Y) { return build(X, Y, nullptr); }

    // Same walk, but with caller-supplied bags (one list per component of the
    // symmetric difference, in component order).  Each list must be a good
    // path decomposition of its component.
    CanonicalPath path_with_bags(VertexSet X, VertexSet Y,
                                 const std::vector<std::vector<VertexSet>>& per_component) {
        return build(X, Y, &per_component);
    }

  private:
    CanonicalPath build(VertexSet X, VertexSet Y,
                        const std::vector<std::vector<VertexSet>>* explicit_bags) {
        if (X & ~g_.vertices()) throw std::invalid_argument("path: start set uses unknown vertices");
        if (Y & ~g_.vertices()) throw std::invalid_argument("path: end set uses unknown vertices");
        if (!is_independent(g_, X)) throw std::invalid_argument("path: start set is not independent");
        if (!is_independent(g_, Y)) throw std::invalid_argument("path: end set is not independent");

        CanonicalPath cp;
        cp.X = X;
        cp.Y = Y;
        cp.states.push_back(X);
        if (X == Y) return cp;

        std::vector<VertexSet> comps = components_within(g_, X ^ Y);
        if (explicit_bags && explicit_bags->size() != comps.size())
            throw std::invalid_argument("path: expected one bag list per component, got " +
                                        std::to_string(explicit_bags->size()) + " for " +
                                        std::to_string(comps.size()) + " components");

        detail::PathEngine eng{g_, X, Y, X ^ Y, X, Y, 0, 0, &cp};
        eng.check_invariants();
        for (size_t a = 0; a < comps.size(); ++a) {
            const std::vector<VertexSet>* bags;
            if (explicit_bags) {
                bags = &(*explicit_bags)[a];
                validate_component_bags(comps[a], *bags);
            } else {
                bags = &component_bags(comps[a]);
            }
            eng.run_component(static_cast<int>(a), comps[a], *bags);
        }
        if (eng.Z != Y || eng.W != X) throw std::logic_error("canonical path construction: wrong endpoint");
        return cp;
    }

    void validate_component_bags(VertexSet comp, const std::vector<VertexSet>& bags) const {
        VertexSet all = 0;
        for (VertexSet b : bags) all |= b;
        if (all != comp)
            throw std::invalid_argument("path: bag list does not cover its component exactly");
        auto [h, old_of] = induced_subgraph(g_, comp);
        std::vector<int> new_of(static_cast<size_t>(g_.n), -1);
        for (size_t i = 0; i < old_of.size(); ++i) new_of[static_cast<size_t>(old_of[i])] = static_cast<int>(i);
        std::vector<VertexSet> relabeled;
        relabeled.reserve(bags.size());
        for (VertexSet b : bags) {
            VertexSet m = 0;
            for (int v : set_to_vector(b)) m |= bit(new_of[static_cast<size_t>(v)]);
            relabeled.push_back(m);
        }
        DecompositionCheck chk = validate(h, relabeled);
        if (!chk.pass) throw std::invalid_argument("path: bag list is not a path decomposition: " + chk.detail);
        if (!chk.good) throw std::invalid_argument("path: bag list is not good");
    }

    Graph g_;
    std::unordered_map<VertexSet, std::vector<VertexSet>> cache_;
};

inline CanonicalPath build_path(const Graph& g, VertexSet X, VertexSet Y) {
    CanonicalPathBuilder b(g);
    return b.path(X, Y);
}

// ---------------------------------------------------------------------------
// Decoding: a transition plus its snapshot determines the endpoints
// ---------------------------------------------------------------------------

struct PathPoint {
    VertexSet z_from = 0, z_to = 0;
    VertexSet W = 0, Rplus = 0, Rminus = 0;
};

struct DecodeResult {
    VertexSet X = 0, Y = 0;
};

// Reconstructs the unique ordered pair (X, Y) whose path realizes the given
// transition with the given snapshot.  Components before the moved vertex's
// are already swapped, later ones untouched; the two ways to orient the
// current component are resolved by replaying the candidate paths.  Throws
// std::runtime_error when no pair realizes the point.
inline DecodeResult decode(CanonicalPathBuilder& b, const PathPoint& pt) {
    const Graph& g = b.graph();
    if (popcount(pt.z_from ^ pt.z_to) != 1)
        throw std::invalid_argument("decode: transition is not single-site");
    const int u = lowest_vertex(pt.z_from ^ pt.z_to);
    const VertexSet Z = pt.z_from;
    const VertexSet common = Z & pt.W;
    const VertexSet D = (Z ^ pt.W) | pt.Rplus | pt.Rminus;

    if (!((D >> u) & 1u)) throw std::runtime_error("decode: moved vertex is outside the difference");
    std::vector<VertexSet> comps = components_within(g, D);
    size_t cur = comps.size();
    for (size_t a = 0; a < comps.size(); ++a)
        if ((comps[a] >> u) & 1u) cur = a;

    VertexSet before_W = 0, before_Z = 0, after_Z = 0, after_W = 0;
    for (size_t a = 0; a < comps.size(); ++a) {
        if (a < cur) {
            before_W |= pt.W & comps[a];  // processed: X part now sits in W
            before_Z |= Z & comps[a];
        } else if (a > cur) {
            after_Z |= Z & comps[a];  // untouched: X part still sits in Z
            after_W |= pt.W & comps[a];
        }
    }

    auto parts = bipartition_within(g, comps[cur]);
    if (!parts) throw std::runtime_error("decode: current component is not bipartite");

    const DecodeResult cands[2] = {
        {common | before_W | after_Z | parts->first, common | before_Z | after_W | parts->second},
        {common | before_W | after_Z | parts->second, common | before_Z | after_W | parts->first}};

    const DecodeResult* found = nullptr;
    for (const DecodeResult& cand : cands) {
        if (!is_independent(g, cand.X) || !is_independent(g, cand.Y) || cand.X == cand.Y) continue;
        CanonicalPath cp = b.path(cand.X, cand.Y);
        for (const PathStep& st : cp.steps) {
            if (st.z_from == pt.z_from && st.z_to == pt.z_to && st.W == pt.W &&
                st.Rplus == pt.Rplus && st.Rminus == pt.Rminus) {
                if (found) throw std::logic_error("decode: point is realized by two pairs");
                found = &cand;
                break;
            }
        }
    }
    if (!found) throw std::runtime_error("decode: point is not realized by any pair");
    return *found;
}

// ---------------------------------------------------------------------------
// Whole-family certification
// ---------------------------------------------------------------------------

struct PathCertificate {
    size_t pairs = 0;        // ordered pairs X != Y
    size_t steps = 0;        // total transitions over all paths
    int l_max = 0;           // longest path
    bool lengths_ok = true;  // every length equals |X ^ Y| and is at most 2 alpha
    bool legal = true;       // every move is single-site between independent sets
    bool injective = true;   // no snapshot tuple repeats across pairs
    bool decode_ok = true;   // decoding returns the originating pair
    std::string detail;      // first violation, if any
    bool pass() const { return lengths_ok && legal && injective && decode_ok; }
};

// Builds the paths of all ordered pairs and certifies length, legality,
// injectivity of (transition, snapshot) tuples, and decodability.  Decoding
// is exercised on every decode_stride-th step.
inline PathCertificate certify_paths(CanonicalPathBuilder& b, size_t state_cap = 512,
                                     size_t decode_stride = 1) {
    const Graph& g = b.graph();
    IndependentSets sets = enumerate_independent_sets(g);
    if (sets.total() > state_cap)
        throw std::runtime_error("path certification cap exceeded (" + std::to_string(sets.total()) +
                                 " states, cap " + std::to_string(state_cap) + ")");
    std::vector<VertexSet> states = sets.flat();
    const int two_alpha = 2 * static_cast<int>(sets.alpha());

    PathCertificate cert;
    struct TupleHash {
        size_t operator()(const std::array<uint64_t, 5>& t) const {
            uint64_t h = 0x9e3779b97f4a7c15ull;
            for (uint64_t x : t) {
                h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
                h *= 0xff51afd7ed558ccdull;
            }
            return static_cast<size_t>(h);
        }
    };
    std::unordered_set<std::array<uint64_t, 5>, TupleHash> seen;
    auto note = [&cert](bool& flag, const std::string& what) {
        flag = false;
        if (cert.detail.empty()) cert.detail = what;
    };

    size_t tick = 0;
    for (VertexSet X : states) {
        for (VertexSet Y : states) {
            if (X == Y) continue;
            CanonicalPath cp = b.path(X, Y);
            ++cert.pairs;
            cert.l_max = std::max(cert.l_max, cp.length());
            if (cp.length() != popcount(X ^ Y) || cp.length() > two_alpha)
                note(cert.lengths_ok, "path length mismatch");
            if (cp.states.front() != X || cp.states.back() != Y) note(cert.legal, "endpoints wrong");
            for (const PathStep& st : cp.steps) {
                ++cert.steps;
                if (popcount(st.z_from ^ st.z_to) != 1 || !is_independent(g, st.z_from) ||
                    !is_independent(g, st.z_to))
                    note(cert.legal, "illegal move");
                if (!seen.insert({st.z_from, st.z_to, st.W, st.Rplus, st.Rminus}).second)
                    note(cert.injective, "snapshot tuple repeats");
                if (decode_stride && (tick++ % decode_stride) == 0) {
                    try {
                        DecodeResult dr =
                            decode(b, {st.z_from, st.z_to, st.W, st.Rplus, st.Rminus});
                        if (dr.X != X || dr.Y != Y) note(cert.decode_ok, "decode returned wrong pair");
                    } catch (const std::exception& e) {
                        note(cert.decode_ok, std::string("decode failed: ") + e.what());
                    }
                }
            }
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Congestion
// ---------------------------------------------------------------------------

struct CongestionReport {
    Rat rho = 0;       // max over directed moves of (sum of pair weights)/Q
    Rat rho_len = 0;   // same with each pair weighted by its path length
    int l_max = 0;
    size_t pairs = 0;
    size_t transitions = 0;  // directed moves carrying flow
    VertexSet worst_from = 0, worst_to = 0;
    double lambda = 1;
    int p = 0;          // width parameter used by the target bound
    double bound = 0;   // 2 e n^{p+1} lambda^p (1 + max(lambda, 1/lambda))
    bool pass = false;  // rho <= bound
    bool guess_bound_ok = true;  // pairs through any move <= |states| 2^{p+1}
};

// Exact congestion of the canonical-path family at the given fugacity.  The
// paths do not depend on lambda, so pair weights are tallied by |X| + |Y| and
// evaluated exactly.  Q(Z -> Z') = pi(Z) P(Z, Z') for the single-site chain.
inline CongestionReport congestion(CanonicalPathBuilder& b, const Rat& lambda, int p,
                                   size_t state_cap = 512) {
    if (lambda <= 0) throw std::domain_error("congestion: fugacity must be positive");
    const Graph& g = b.graph();
    IndependentSets sets = enumerate_independent_sets(g);
    if (sets.total() > state_cap)
        throw std::runtime_error("congestion cap exceeded (" + std::to_string(sets.total()) +
                                 " states, cap " + std::to_string(state_cap) + ")");
    std::vector<VertexSet> states = sets.flat();

    struct Tally {
        std::vector<long long> cnt, cnt_len;  // indexed by |X| + |Y|
    };
    std::map<std::pair<VertexSet, VertexSet>, Tally> flow;
    const size_t smax = 2 * static_cast<size_t>(g.n) + 1;

    CongestionReport rep;
    rep.lambda = to_double(lambda);
    rep.p = p;
    for (VertexSet X : states) {
        for (VertexSet Y : states) {
            if (X == Y) continue;
            CanonicalPath cp = b.path(X, Y);
            ++rep.pairs;
            rep.l_max = std::max(rep.l_max, cp.length());
            const size_t s = static_cast<size_t>(popcount(X) + popcount(Y));
            for (const PathStep& st : cp.steps) {
                Tally& t = flow[{st.z_from, st.z_to}];
                if (t.cnt.empty()) {
                    t.cnt.assign(smax, 0);
                    t.cnt_len.assign(smax, 0);
                }
                t.cnt[s] += 1;
                t.cnt_len[s] += cp.length();
            }
        }
    }

    // partition function and lambda powers
    std::vector<Rat> pow_lam(smax, Rat(1));
    for (size_t s = 1; s < smax; ++s) pow_lam[s] = pow_lam[s - 1] * lambda;
    Rat Zfun = 0;
    for (VertexSet I : states) Zfun += pow_lam[static_cast<size_t>(popcount(I))];

    const Rat move_del = Rat(1) / (Rat(g.n) * (Rat(1) + lambda));
    const Rat move_ins = move_del * lambda;
    const long long guess_cap = static_cast<long long>(states.size()) * (1LL << (p + 1));
    rep.transitions = flow.size();
    for (const auto& [key, tally] : flow) {
        const auto& [zf, zt] = key;
        Rat num = 0, num_len = 0;
        long long routed = 0;
        for (size_t s = 0; s < smax; ++s) {
            if (tally.cnt[s] == 0) continue;
            num += Rat(tally.cnt[s]) * pow_lam[s];
            num_len += Rat(tally.cnt_len[s]) * pow_lam[s];
            routed += tally.cnt[s];
        }
        if (routed > guess_cap) rep.guess_bound_ok = false;
        const Rat move = popcount(zf) > popcount(zt) ? move_del : move_ins;
        Rat denom = Zfun * pow_lam[static_cast<size_t>(popcount(zf))] * move;
        Rat ratio = num / denom;
        if (ratio > rep.rho) {
            rep.rho = ratio;
            rep.worst_from = zf;
            rep.worst_to = zt;
        }
        Rat ratio_len = num_len / denom;
        if (ratio_len > rep.rho_len) rep.rho_len = ratio_len;
    }

    const double lam = rep.lambda;
    rep.bound = 2.0 * std::exp(1.0) * std::pow(static_cast<double>(g.n), p + 1) * std::pow(lam, p) *
                (1.0 + std::max(lam, 1.0 / lam));
    rep.pass = to_double(rep.rho) <= rep.bound;
    return rep;
}

// ---------------------------------------------------------------------------
// Remainder-size bound
// ---------------------------------------------------------------------------

struct RBoundReport {
    int max_R = 0;        // largest |R+ u R-| seen just before a move
    int cap = 0;          // largest bag size over the decompositions used
    size_t tight_steps = 0;
    bool within = true;   // |R| never exceeds the bag size (hence width + 1)
    bool tight_characterized = true;  // |R| = cap only on insertions filling the whole bag,
                                      // with Z and W clear of it
    std::string detail;
    bool pass() const { return within && tight_characterized; }
};

inline void accumulate_R_bound(const CanonicalPath& cp, RBoundReport& rep) {
    for (const PathStep& st : cp.steps) {
        const int bag_size = popcount(st.bag_set);
        rep.cap = std::max(rep.cap, bag_size);
        const VertexSet R = st.Rplus | st.Rminus;
        const int r = popcount(R);
        rep.max_R = std::max(rep.max_R, r);
        if (R & ~st.bag_set) {
            rep.within = false;
            if (rep.detail.empty()) rep.detail = "remainder leaves its bag";
        }
        if (r == bag_size) {
            ++rep.tight_steps;
            const bool ok = st.insert && R == st.bag_set && !(st.z_from & st.bag_set) &&
                            !(st.W & st.bag_set);
            if (!ok) {
                rep.tight_characterized = false;
                if (rep.detail.empty()) rep.detail = "full-bag remainder outside the allowed shape";
            }
        }
    }
}

inline RBoundReport verify_R_bound(CanonicalPathBuilder& b, VertexSet X, VertexSet Y) {
    RBoundReport rep;
    CanonicalPath cp = b.path(X, Y);
    accumulate_R_bound(cp, rep);
    return rep;
}

// Aggregates the remainder bound over every ordered pair of the graph.
inline RBoundReport verify_R_bound_sweep(CanonicalPathBuilder& b, size_t state_cap = 512) {
    IndependentSets sets = enumerate_independent_sets(b.graph());
    if (sets.total() > state_cap)
        throw std::runtime_error("remainder sweep cap exceeded (" + std::to_string(sets.total()) +
                                 " states, cap " + std::to_string(state_cap) + ")");
    std::vector<VertexSet> states = sets.flat();
    RBoundReport rep;
    for (VertexSet X : states)
        for (VertexSet Y : states) {
            if (X == Y) continue;
            CanonicalPath cp = b.path(X, Y);
            accumulate_R_bound(cp, rep);
        }
    return rep;
}

}  // namespace hardcore
