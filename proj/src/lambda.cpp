#include "tropws/lambda.hpp"
#include "tropws/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace tropws {

namespace {

struct Best {
    long value = -1;
    std::vector<LPoint> witness;

    // ties resolved towards the lexicographically smallest witness so that
    // results do not depend on thread interleaving
    void offer(long v, const std::vector<LPoint>& w) {
        if (v > value) {
            value = v;
            witness = w;
        } else if (v == value && !w.empty() && (witness.empty() || w < witness)) {
            witness = w;
        }
    }
};

std::vector<std::vector<size_t>> coordinate_permutations(
    const std::vector<LPoint>& pts, int n) {
    std::map<LPoint, size_t> index;
    for (size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], i);
    std::vector<size_t> sigma(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = static_cast<size_t>(i);
    std::vector<std::vector<size_t>> perms;
    do {
        std::vector<size_t> pp(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            LPoint q(pts[i].size());
            for (size_t j = 0; j < q.size(); ++j) q[sigma[j]] = pts[i][j];
            pp[i] = index.at(q);
        }
        perms.push_back(std::move(pp));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return perms;
}

uint32_t permute_mask(uint32_t m, const std::vector<size_t>& perm) {
    uint32_t r = 0;
    while (m) {
        unsigned i = static_cast<unsigned>(__builtin_ctz(m));
        m &= m - 1;
        r |= uint32_t(1) << perm[i];
    }
    return r;
}

struct Tracker {
    std::vector<Best> best; // per j = 0..n-2
    unsigned long long nodes = 0;

    void record(const Polytope& P) {
        auto f = P.f_vector();
        auto verts = P.vertices();
        for (size_t j = 0; j < best.size(); ++j) {
            long v = j < f.size() ? f[j] : 0;
            best[j].offer(v, verts);
        }
    }
};

void merge(Tracker& into, const Tracker& from) {
    into.nodes += from.nodes;
    for (size_t j = 0; j < into.best.size(); ++j)
        if (from.best[j].value >= 0)
            into.best[j].offer(from.best[j].value, from.best[j].witness);
}

// ------------------------------------------------------------------
// Local search for ground sets too large to sweep exhaustively.

std::vector<LPoint> subset_points(const std::vector<LPoint>& pts, const std::vector<char>& in) {
    std::vector<LPoint> s;
    for (size_t i = 0; i < pts.size(); ++i)
        if (in[i]) s.push_back(pts[i]);
    return s;
}

// Vertex configurations found by longer search runs. They enter the seed
// pool like any other candidate subset: the hull and its f-vector are
// recomputed exactly, so nothing is trusted beyond "start here".
std::vector<std::vector<LPoint>> recorded_configurations(int d, int n) {
    std::vector<std::vector<LPoint>> sets;
    if (d == 4 && n == 4) {
        sets.push_back({{0,0,1,3},{0,0,2,2},{0,1,0,3},{0,1,2,1},{0,2,0,2},{0,2,1,1},{1,0,0,3},{1,0,2,1},{1,1,2,0},{1,2,0,1},{1,2,1,0},{2,0,0,2},{2,0,1,1},{2,1,0,1},{2,1,1,0}});
        sets.push_back({{0,0,2,2},{0,1,2,1},{0,2,1,1},{0,3,1,0},{1,0,1,2},{1,0,2,1},{1,1,0,2},{1,1,2,0},{1,2,0,1},{2,0,1,1},{2,1,0,1},{2,2,0,0}});
        sets.push_back({{0,1,1,2},{0,1,2,1},{0,2,2,0},{1,0,2,1},{1,1,0,2},{1,2,0,1},{1,2,1,0},{2,0,0,2},{2,0,1,1},{2,1,1,0}});
    }
    if (d == 5 && n == 4) {
        sets.push_back({{0,0,3,2},{0,0,4,1},{0,1,1,3},{0,1,4,0},{0,2,0,3},{0,2,3,0},{0,3,0,2},{0,3,1,1},{1,0,1,3},{1,0,4,0},{1,1,0,3},{1,3,0,1},{1,3,1,0},{3,0,0,2},{3,0,2,0},{3,2,0,0},{4,0,0,1},{4,1,0,0}});
        sets.push_back({{0,0,2,3},{0,0,3,2},{0,1,1,3},{0,1,3,1},{0,2,1,2},{0,2,2,1},{1,0,1,3},{1,0,3,1},{1,2,0,2},{1,2,2,0},{1,3,0,1},{2,0,1,2},{2,0,2,1},{2,1,0,2},{2,2,1,0},{3,1,1,0}});
        sets.push_back({{0,0,3,2},{0,1,3,1},{0,2,1,2},{0,2,2,1},{1,0,1,3},{1,0,3,1},{1,2,0,2},{1,2,2,0},{1,3,0,1},{2,0,1,2},{2,0,2,1},{2,1,0,2},{2,2,1,0},{3,1,1,0}});
    }
    if (d == 3 && n == 5) {
        sets.push_back({{0,0,0,1,2},{0,0,0,2,1},{0,0,1,0,2},{0,0,1,2,0},{0,0,2,0,1},{0,0,2,1,0},{0,1,0,0,2},{0,1,0,2,0},{0,1,2,0,0},{0,2,0,0,1},{0,2,0,1,0},{0,2,1,0,0},{1,0,0,0,2},{1,0,0,2,0},{1,0,2,0,0},{1,2,0,0,0},{2,0,0,0,1},{2,0,0,1,0},{2,0,1,0,0},{2,1,0,0,0}});
        sets.push_back({{0,0,0,2,1},{0,0,1,1,1},{0,0,1,2,0},{0,1,0,1,1},{0,1,0,2,0},{0,1,1,0,1},{0,1,2,0,0},{0,2,1,0,0},{1,0,0,0,2},{1,0,0,2,0},{1,0,1,0,1},{1,0,1,1,0},{1,1,0,0,1},{1,1,0,1,0},{1,1,1,0,0},{2,0,0,0,1}});
        sets.push_back({{0,0,1,1,1},{0,0,1,2,0},{0,0,2,1,0},{0,1,0,1,1},{0,1,1,0,1},{0,1,1,1,0},{1,0,0,0,2},{1,0,0,1,1},{1,0,1,0,1},{1,0,1,1,0},{1,1,0,0,1},{1,1,0,1,0},{1,1,1,0,0},{2,0,0,0,1}});
        sets.push_back({{0,0,0,2,1},{0,0,2,1,0},{0,1,0,1,1},{0,1,1,0,1},{0,2,1,0,0},{1,0,0,0,2},{1,0,1,0,1},{1,0,1,1,0},{1,1,0,1,0},{2,1,0,0,0}});
    }
    if (d == 4 && n == 5) {
        sets.push_back({{0,0,0,2,2},{0,0,1,1,2},{0,0,1,3,0},{0,0,2,1,1},{0,0,2,2,0},{0,1,0,1,2},{0,1,0,2,1},{0,1,1,0,2},{0,1,1,2,0},{0,1,2,0,1},{0,1,2,1,0},{0,2,1,0,1},{1,0,0,1,2},{1,0,0,2,1},{1,0,1,0,2},{1,0,1,2,0},{1,0,2,0,1},{1,0,2,1,0},{1,1,0,0,2},{1,1,0,2,0},{1,1,2,0,0},{1,2,0,0,1},{1,2,0,1,0},{1,2,1,0,0},{2,0,1,0,1},{2,1,0,0,1},{2,1,0,1,0},{2,1,1,0,0},{2,2,0,0,0}});
        sets.push_back({{0,0,0,2,2},{0,0,1,3,0},{0,0,2,1,1},{0,1,0,1,2},{0,1,0,2,1},{0,1,1,0,2},{0,1,1,2,0},{0,1,2,0,1},{0,1,2,1,0},{0,2,1,0,1},{1,0,0,1,2},{1,0,0,2,1},{1,0,1,0,2},{1,0,1,2,0},{1,0,2,0,1},{1,0,2,1,0},{1,1,0,0,2},{1,1,0,2,0},{1,1,2,0,0},{1,2,0,0,1},{1,2,0,1,0},{1,2,1,0,0},{2,0,1,0,1},{2,1,0,0,1},{2,1,0,1,0},{2,1,1,0,0},{2,2,0,0,0}});
        sets.push_back({{0,0,1,2,1},{0,1,1,0,2},{0,1,2,1,0},{0,2,0,1,1},{1,0,0,1,2},{1,0,0,2,1},{1,0,1,0,2},{1,0,1,2,0},{1,0,2,0,1},{1,0,2,1,0},{1,1,0,0,2},{1,1,0,2,0},{1,1,2,0,0},{1,2,0,0,1},{1,2,0,1,0},{1,2,1,0,0},{2,0,1,0,1},{2,1,0,1,0}});
    }
    if (d == 5 && n == 5) {
        sets.push_back({{0,0,1,1,3},{0,0,1,2,2},{0,0,2,1,2},{0,0,2,2,1},{0,1,0,1,3},{0,1,0,2,2},{0,1,1,3,0},{0,1,2,0,2},{0,1,2,2,0},{0,1,3,0,1},{0,2,0,1,2},{0,2,0,2,1},{0,2,1,0,2},{0,2,1,2,0},{0,2,2,1,0},{0,3,1,0,1},{1,0,0,2,2},{1,0,0,3,1},{1,0,1,0,3},{1,0,2,2,0},{1,0,3,0,1},{1,1,3,0,0},{1,2,0,0,2},{1,2,0,2,0},{1,2,2,0,0},{1,3,0,1,0},{2,0,0,1,2},{2,0,0,2,1},{2,0,1,0,2},{2,0,1,2,0},{2,0,2,0,1},{2,0,2,1,0},{2,1,0,0,2},{2,1,0,2,0},{2,1,2,0,0},{2,2,0,0,1},{2,2,0,1,0},{2,2,1,0,0},{3,0,1,1,0},{3,1,0,0,1}});
        sets.push_back({{0,0,1,2,2},{0,0,2,1,2},{0,0,2,2,1},{0,0,3,1,1},{0,1,0,1,3},{0,1,0,2,2},{0,1,1,3,0},{0,1,2,0,2},{0,1,2,2,0},{0,2,0,1,2},{0,2,0,2,1},{0,2,1,0,2},{0,2,1,2,0},{0,2,2,0,1},{0,2,2,1,0},{0,3,1,0,1},{1,0,0,2,2},{1,0,0,3,1},{1,0,1,0,3},{1,0,2,0,2},{1,0,2,2,0},{1,1,3,0,0},{1,2,0,0,2},{1,2,0,2,0},{1,2,2,0,0},{1,3,0,1,0},{2,0,0,1,2},{2,0,0,2,1},{2,0,1,0,2},{2,0,1,2,0},{2,0,2,0,1},{2,0,2,1,0},{2,1,0,0,2},{2,1,0,2,0},{2,1,2,0,0},{2,2,0,0,1},{2,2,0,1,0},{2,2,1,0,0},{3,0,1,1,0},{3,1,0,0,1}});
    }
    return sets;
}

std::vector<std::vector<char>> seed_pool(const std::vector<LPoint>& pts, int d, int n,
                                         std::mt19937& rng) {
    size_t N = pts.size();
    std::vector<std::vector<char>> seeds;
    auto push_if = [&](auto&& pred) {
        std::vector<char> s(N, 0);
        size_t c = 0;
        for (size_t i = 0; i < N; ++i)
            if (pred(pts[i])) { s[i] = 1; ++c; }
        if (c > 0) seeds.push_back(std::move(s));
    };
    auto maxc = [](const LPoint& p) { return *std::max_element(p.begin(), p.end()); };
    auto minc = [](const LPoint& p) { return *std::min_element(p.begin(), p.end()); };

    std::map<LPoint, size_t> index;
    for (size_t i = 0; i < N; ++i) index.emplace(pts[i], i);
    for (const auto& conf : recorded_configurations(d, n)) {
        std::vector<char> s(N, 0);
        bool ok = true;
        for (const LPoint& p : conf) {
            auto it = index.find(p);
            if (it == index.end()) { ok = false; break; }
            s[it->second] = 1;
        }
        if (ok) seeds.push_back(std::move(s));
    }

    push_if([&](const LPoint&) { return true; });                       // everything
    push_if([&](const LPoint& p) { return minc(p) == 0; });             // boundary
    push_if([&](const LPoint& p) { return minc(p) == 0 && maxc(p) < d; }); // boundary, no corners
    for (int c = 1; c < d; ++c) {
        push_if([&](const LPoint& p) { return maxc(p) <= c; });         // cap slice
        push_if([&](const LPoint& p) { return maxc(p) <= c || maxc(p) == d; }); // slice + corners
        push_if([&](const LPoint& p) { return maxc(p) <= c && minc(p) == 0; });
    }
    // two-level per-coordinate caps
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b < a; ++b)
            for (int s = 1; s < n; ++s)
                push_if([&](const LPoint& p) {
                    for (int i = 0; i < n; ++i) {
                        long long cap = i < s ? a : b;
                        if (p[static_cast<size_t>(i)] > cap) return false;
                    }
                    return true;
                });
    // random densities
    for (double density : {0.35, 0.5, 0.75}) {
        for (int t = 0; t < 4; ++t) {
            std::vector<char> s(N, 0);
            size_t c = 0;
            for (size_t i = 0; i < N; ++i)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < density) {
                    s[i] = 1;
                    ++c;
                }
            if (c > static_cast<size_t>(n)) seeds.push_back(std::move(s));
        }
    }
    return seeds;
}

void local_search(const std::vector<LPoint>& pts, size_t objective, Tracker& tr,
                  unsigned long long budget, std::mt19937& rng,
                  const std::vector<std::vector<char>>& seeds) {
    size_t N = pts.size();
    auto eval = [&](const std::vector<char>& in, std::vector<long>& f) -> bool {
        if (tr.nodes >= budget) return false;
        auto sp = subset_points(pts, in);
        if (sp.empty()) return false;
        Polytope P = Polytope::hull(std::move(sp));
        ++tr.nodes;
        tr.record(P);
        f = P.f_vector();
        f.resize(tr.best.size(), 0);
        return true;
    };
    auto shuffled = [&](size_t count) {
        std::vector<size_t> order(count);
        for (size_t i = 0; i < count; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        return order;
    };

    for (const auto& seed : seeds) {
        if (tr.nodes >= budget) return;
        std::vector<char> state = seed;
        std::vector<long> cur;
        if (!eval(state, cur)) continue;

        int sideways_left = static_cast<int>(2 * N);
        while (tr.nodes < budget) {
            // single toggles, first improvement
            bool improved = false;
            for (size_t i : shuffled(N)) {
                state[i] ^= 1;
                std::vector<long> f;
                if (eval(state, f) && f[objective] > cur[objective]) {
                    cur = f;
                    improved = true;
                    break;
                }
                state[i] ^= 1;
                if (tr.nodes >= budget) break;
            }
            if (improved) continue;
            if (tr.nodes >= budget) break;

            // one-out-one-in swaps
            std::vector<size_t> ins, outs;
            for (size_t i = 0; i < N; ++i) (state[i] ? outs : ins).push_back(i);
            std::shuffle(ins.begin(), ins.end(), rng);
            std::shuffle(outs.begin(), outs.end(), rng);
            size_t tried = 0;
            for (size_t o : outs) {
                for (size_t i : ins) {
                    state[o] = 0;
                    state[i] = 1;
                    std::vector<long> f;
                    if (eval(state, f) && f[objective] > cur[objective]) {
                        cur = f;
                        improved = true;
                        break;
                    }
                    state[o] = 1;
                    state[i] = 0;
                    if (++tried > 1500 || tr.nodes >= budget) break;
                }
                if (improved || tried > 1500 || tr.nodes >= budget) break;
            }
            if (improved) continue;
            if (tr.nodes >= budget) break;

            // plateau escape: accept a value-preserving toggle
            bool stepped = false;
            if (sideways_left > 0) {
                for (size_t i : shuffled(N)) {
                    state[i] ^= 1;
                    std::vector<long> f;
                    if (eval(state, f) && f[objective] == cur[objective]) {
                        cur = f;
                        stepped = true;
                        --sideways_left;
                        break;
                    }
                    state[i] ^= 1;
                    if (tr.nodes >= budget) break;
                }
            }
            if (!stepped) break; // genuine local optimum
        }
    }
}

} // namespace

LambdaResult lambda_enumerate(int d, int n, unsigned long long budget, int threads) {
    if (d < 1 || n < 2) throw domain_error("lambda needs d >= 1 and n >= 2");
    if (threads <= 0) {
        const char* env = std::getenv("TROPWS_THREADS");
        threads = env ? std::max(1, std::atoi(env)) : 1;
    }

    std::vector<LPoint> pts = dilated_simplex_points(d, n);
    size_t N = pts.size();
    LambdaResult res;
    res.d = d;
    res.n = n;

    Tracker tracker;
    tracker.best.assign(static_cast<size_t>(n - 1), Best{});

    bool exhaustive_possible = N <= 24;
    if (exhaustive_possible) {
        auto perms = coordinate_permutations(pts, n);
        // canonical subsets, by decreasing cardinality
        std::vector<uint32_t> canonical;
        bool truncated = false;
        auto next_combination = [N](std::vector<size_t>& idx) -> bool {
            size_t k = idx.size();
            for (size_t i = k; i-- > 0;) {
                if (idx[i] != i + N - k) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        for (size_t k = N; k >= 1 && !truncated; --k) {
            std::vector<size_t> idx(k);
            for (size_t i = 0; i < k; ++i) idx[i] = i;
            do {
                uint32_t m = 0;
                for (size_t i : idx) m |= uint32_t(1) << i;
                bool canon = true;
                for (const auto& p : perms)
                    if (permute_mask(m, p) < m) { canon = false; break; }
                if (canon) canonical.push_back(m);
                if (canonical.size() > budget) { truncated = true; break; }
            } while (next_combination(idx));
        }
        res.subsets_total = canonical.size();

        if (!truncated && canonical.size() <= budget) {
            std::atomic<size_t> cursor{0};
            std::vector<Tracker> locals(static_cast<size_t>(threads));
            for (auto& t : locals) t.best.assign(static_cast<size_t>(n - 1), Best{});
            auto work = [&](Tracker& local) {
                while (true) {
                    size_t at = cursor.fetch_add(256);
                    if (at >= canonical.size()) return;
                    size_t end = std::min(canonical.size(), at + 256);
                    for (size_t ci = at; ci < end; ++ci) {
                        uint32_t m = canonical[ci];
                        std::vector<LPoint> sp;
                        for (size_t i = 0; i < N; ++i)
                            if (m & (uint32_t(1) << i)) sp.push_back(pts[i]);
                        Polytope P = Polytope::hull(std::move(sp));
                        ++local.nodes;
                        // polytopes in non-convex position reappear at their
                        // vertex sets; skip the duplicate face-lattice work
                        if (P.vertex_indices().size() == static_cast<size_t>(__builtin_popcount(m)))
                            local.record(P);
                    }
                }
            };
            if (threads == 1) {
                work(locals[0]);
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < threads; ++t)
                    pool.emplace_back(work, std::ref(locals[static_cast<size_t>(t)]));
                for (auto& th : pool) th.join();
            }
            for (const auto& l : locals) merge(tracker, l);
            res.subsets_visited = res.subsets_total;
            res.exact = true;
        }
    }

    if (!res.exact) {
        std::mt19937 rng(20240811u);
        auto seeds = seed_pool(pts, d, n, rng);
        // every seed contributes its exact f-vector before any budget is
        // spent on climbing
        for (const auto& s : seeds) {
            auto sp = subset_points(pts, s);
            if (sp.empty()) continue;
            Polytope P = Polytope::hull(std::move(sp));
            ++tracker.nodes;
            tracker.record(P);
        }
        size_t objectives = tracker.best.size();
        // climbing effort per objective: an even share of the ceiling, but
        // soft-capped so that large exhaustive-sized budgets do not turn
        // into open-ended searches
        unsigned long long intensity = std::max<unsigned long long>(6000, budget / 20);
        for (size_t j = 0; j < objectives; ++j) {
            unsigned long long share =
                (budget - std::min(budget, tracker.nodes)) / (objectives - j);
            unsigned long long slice = tracker.nodes + std::min(share, intensity);
            local_search(pts, j, tracker, slice, rng, seeds);
        }
        res.subsets_visited = tracker.nodes;
    }

    res.nodes = tracker.nodes;
    res.values.reserve(tracker.best.size());
    for (auto& b : tracker.best) {
        res.values.push_back(std::max(b.value, 0L));
        res.witnesses.push_back(std::move(b.witness));
    }
    return res;
}

} // namespace tropws
