#include "designs.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

namespace x3p {

namespace {

constexpr uint64_t max_modulus = 1000000;
constexpr uint64_t max_block_size = 64;

void check_sorted_residues(uint64_t v, const std::vector<uint64_t>& a) {
    if (a.empty()) fail(errc::invalid_argument, "residue set must be nonempty");
    for (uint64_t x : a)
        if (x >= v)
            fail(errc::invalid_argument,
                 "residue " + std::to_string(x) + " outside Z_" + std::to_string(v));
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] <= a[i - 1]) fail(errc::invalid_argument, "residues must be distinct");
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> units_of(uint64_t v) {
    std::vector<uint64_t> u;
    for (uint64_t x = 1; x < v; ++x)
        if (std::gcd(x, v) == 1) u.push_back(x);
    return u;
}

// smallest sorted image of a under x -> u*(x - a0), over units u and base points a0
std::vector<uint64_t> canon_set(uint64_t v, const std::vector<uint64_t>& a,
                                const std::vector<uint64_t>& units) {
    std::vector<uint64_t> best, cur(a.size());
    for (uint64_t a0 : a) {
        for (uint64_t u : units) {
            for (size_t i = 0; i < a.size(); ++i) cur[i] = (a[i] + v - a0) % v * u % v;
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

} // namespace

FamilyCheck verify_difference_family(const DifferenceFamily& f) {
    if (f.v == 0 || f.v > max_modulus)
        fail(errc::invalid_argument, "group order out of range");
    if (f.blocks.empty()) fail(errc::invalid_argument, "family needs at least one block");
    const size_t k = f.blocks.front().size();
    for (const auto& b : f.blocks)
        if (b.size() != k) fail(errc::invalid_argument, "blocks must share one size");

    FamilyCheck out;
    out.multiplicity.assign(f.v, 0);
    for (const auto& b : f.blocks) {
        std::vector<uint64_t> sorted = b;
        std::sort(sorted.begin(), sorted.end());
        check_sorted_residues(f.v, sorted);
        for (uint64_t x : b)
            for (uint64_t y : b)
                if (x != y) ++out.multiplicity[(x + f.v - y) % f.v];
    }
    out.ok = true;
    for (uint64_t r = 1; r < f.v; ++r)
        if (out.multiplicity[r] != f.lambda) {
            out.ok = false;
            break;
        }
    return out;
}

TranslatePair TranslatePair::create(uint64_t v, std::vector<uint64_t> a, uint64_t c) {
    if (v < 2 || v > max_modulus) fail(errc::invalid_argument, "modulus out of range");
    std::sort(a.begin(), a.end());
    check_sorted_residues(v, a);
    c %= v;
    if (std::gcd(c, v) != 1)
        fail(errc::not_unit, std::to_string(c) + " is not a unit mod " + std::to_string(v));
    TranslatePair p;
    p.v = v;
    p.a = std::move(a);
    p.c = c;
    return p;
}

bool williford_condition(const TranslatePair& p) {
    std::vector<char> diff(p.v, 0);
    for (size_t i = 0; i < p.a.size(); ++i)
        for (size_t j = 0; j < p.a.size(); ++j) {
            if (i == j) continue;
            uint64_t d = (p.a[i] + p.v - p.a[j]) % p.v;
            if (d == 0 || diff[d]) return false; // repeated difference
            diff[d] = 1;
        }
    for (uint64_t d = 1; d < p.v; ++d)
        if (diff[d] && diff[d * p.c % p.v]) return false;
    return true;
}

Rational coverage_ratio(const TranslatePair& p) {
    if (p.v < 2) fail(errc::invalid_argument, "modulus must be at least 2");
    std::vector<char> mark(p.v, 0);
    for (size_t i = 0; i < p.a.size(); ++i)
        for (size_t j = 0; j < p.a.size(); ++j) {
            if (i == j) continue;
            uint64_t d = (p.a[i] + p.v - p.a[j]) % p.v;
            mark[d] = 1;
            mark[d * p.c % p.v] = 1;
        }
    uint64_t num = 0;
    for (uint64_t r = 1; r < p.v; ++r) num += mark[r];
    return Rational{num, p.v - 1};
}

TranslatePair canonical_translate_form(const TranslatePair& p) {
    TranslatePair out = p;
    out.a = canon_set(p.v, p.a, units_of(p.v));
    return out;
}

namespace {

struct SearchShared {
    uint64_t v = 0;
    uint64_t k = 0;
    std::vector<uint64_t> forced;
    std::vector<uint64_t> units;
    bool require_full = true;
    double min_cov = 0.0;
    uint64_t budget = 0;
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> exceeded{false};
    std::atomic<uint64_t> next_shard{0};
    std::vector<uint64_t> shard_firsts;
};

struct SearchWorker {
    SearchShared* sh;
    std::vector<char> diff;      // attained nonzero differences of the current set
    std::vector<uint64_t> set;   // current elements, ascending
    std::vector<uint64_t> marks; // stack of marked residues, two per unordered pair
    std::vector<FoundPair> found;

    explicit SearchWorker(SearchShared* s) : sh(s), diff(s->v, 0) {}

    bool push(uint64_t x) {
        size_t base = marks.size();
        for (uint64_t s : set) {
            uint64_t d1 = (x + sh->v - s) % sh->v;
            uint64_t d2 = sh->v - d1;
            if (diff[d1] || diff[d2] || d1 == d2) {
                while (marks.size() > base) {
                    diff[marks.back()] = 0;
                    marks.pop_back();
                }
                return false;
            }
            diff[d1] = 1;
            diff[d2] = 1;
            marks.push_back(d1);
            marks.push_back(d2);
        }
        set.push_back(x);
        return true;
    }

    void pop() {
        set.pop_back();
        for (size_t i = 0; i < 2 * set.size(); ++i) {
            diff[marks.back()] = 0;
            marks.pop_back();
        }
    }

    bool count_node() {
        uint64_t n = sh->nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > sh->budget) {
            sh->exceeded.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void leaf() {
        if (canon_set(sh->v, set, sh->units) != set) return;
        const uint64_t v = sh->v;
        for (uint64_t c : sh->units) {
            bool ok = true;
            for (uint64_t d : marks)
                if (diff[d * c % v]) { // scaled difference collides with a - a
                    ok = false;
                    break;
                }
            if (!ok) continue;
            // disjoint difference sets, so the union covers exactly 2 k(k-1) residues
            uint64_t num = 2 * uint64_t(marks.size());
            if (sh->require_full) {
                if (num != v - 1) continue;
            } else if (double(num) / double(v - 1) + 1e-12 < sh->min_cov) {
                continue;
            }
            TranslatePair p;
            p.v = v;
            p.a = set;
            p.c = c;
            found.push_back(FoundPair{std::move(p), Rational{num, v - 1}});
        }
    }

    void dfs() {
        if (sh->exceeded.load(std::memory_order_relaxed)) return;
        if (set.size() == sh->k) {
            leaf();
            return;
        }
        const uint64_t need = sh->k - set.size();
        for (uint64_t x = set.back() + 1; x + need <= sh->v; ++x) {
            if (!push(x)) continue;
            if (!count_node()) {
                pop();
                return;
            }
            dfs();
            pop();
            if (sh->exceeded.load(std::memory_order_relaxed)) return;
        }
    }

    void run() {
        for (;;) {
            if (sh->exceeded.load(std::memory_order_relaxed)) return;
            uint64_t idx = sh->next_shard.fetch_add(1, std::memory_order_relaxed);
            if (idx >= sh->shard_firsts.size()) return;
            while (!set.empty()) pop();
            for (uint64_t f : sh->forced) push(f);
            if (!push(sh->shard_firsts[idx])) continue;
            if (!count_node()) return;
            dfs();
        }
    }
};

} // namespace

SearchOutcome search_translate_pairs(uint64_t v, uint64_t k, const SearchOptions& opts) {
    if (v < 2 || v > max_modulus) fail(errc::invalid_argument, "modulus out of range");
    if (k < 1 || k > max_block_size || k > v)
        fail(errc::invalid_argument, "block size out of range");

    SearchOutcome out;
    if (k * (k - 1) > v - 1) return out; // no Sidon set of this size fits

    SearchShared sh;
    sh.v = v;
    sh.k = k;
    sh.units = units_of(v);
    sh.require_full = opts.require_full_coverage;
    sh.min_cov = opts.min_coverage;
    sh.budget = opts.budget;
    // every class has a translate through 0; for prime v a unit maps any pair
    // onto {0,1}, so the canonical form starts that way and the prefix is forced
    sh.forced = (is_prime(v) && k >= 2) ? std::vector<uint64_t>{0, 1}
                                        : std::vector<uint64_t>{0};

    if (!SearchWorker(&sh).count_node()) { // root
        out.status = SearchStatus::budget_exceeded;
        out.nodes = sh.nodes.load();
        return out;
    }

    std::vector<SearchWorker> workers;
    if (sh.forced.size() >= k) {
        SearchWorker w(&sh);
        for (size_t i = 0; i < k; ++i) w.push(sh.forced[i]);
        w.leaf();
        workers.push_back(std::move(w));
    } else {
        const uint64_t need_after = k - sh.forced.size();
        for (uint64_t e = sh.forced.back() + 1; e + need_after <= v; ++e)
            sh.shard_firsts.push_back(e);
        uint64_t t = opts.threads ? opts.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
        t = std::min<uint64_t>({t, sh.shard_firsts.size(), 64});
        for (uint64_t i = 0; i < std::max<uint64_t>(t, 1); ++i)
            workers.emplace_back(&sh);
        if (workers.size() == 1) {
            workers[0].run();
        } else {
            std::vector<std::thread> pool;
            for (auto& w : workers) pool.emplace_back([&w] { w.run(); });
            for (auto& th : pool) th.join();
        }
    }

    for (auto& w : workers)
        for (auto& f : w.found) out.pairs.push_back(std::move(f));
    std::sort(out.pairs.begin(), out.pairs.end(), [](const FoundPair& x, const FoundPair& y) {
        if (x.pair.a != y.pair.a) return x.pair.a < y.pair.a;
        return x.pair.c < y.pair.c;
    });
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end(),
                                [](const FoundPair& x, const FoundPair& y) {
                                    return x.pair.a == y.pair.a && x.pair.c == y.pair.c;
                                }),
                    out.pairs.end());
    out.status = sh.exceeded.load() ? SearchStatus::budget_exceeded : SearchStatus::complete;
    out.nodes = sh.nodes.load();
    return out;
}

} // namespace x3p
