#include "freeset/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "freeset/bits.hpp"
#include "freeset/constructions.hpp"
#include "freeset/numeric.hpp"

namespace freeset::search {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kLadderLimit = std::uint64_t{1} << 23;

// Signed sumsets of the current set, one per weight 0..top, maintained
// incrementally so that add-safety of a new element is a handful of bit
// tests.
class GammaLadder {
  public:
    GammaLadder(std::uint64_t n, std::uint32_t t, std::uint32_t top) : n_(n), t_(t), top_(top) {
        if (n > kLadderLimit) throw std::runtime_error("modulus too large for sumset ladder");
        gam_.reserve(top_ + 1);
        for (std::uint32_t k = 0; k <= top_; ++k) gam_.emplace_back(n);
        gam_[0].set(0);
        for (std::uint32_t k = 1; k <= top_; ++k) gam_[k].set(0);
    }

    // True when S + x stays t-free given S is: no weight-r multiple of x can
    // cancel a signed sum of weight <= t-r.
    bool safe(std::uint64_t x) const {
        for (std::uint32_t r = 1; r <= t_; ++r) {
            std::uint64_t rx = zn::mul_mod(r, x, n_);
            if (gam_[t_ - r].test((n_ - rx) % n_)) return false;
        }
        return true;
    }

    // True when x, 2x, ..., tx all avoid the weight-t sumset.  Stricter than
    // safe(); this is the acceptance test the greedy growth uses.
    bool multiples_clear(std::uint64_t x) const {
        for (std::uint32_t r = 1; r <= t_; ++r)
            if (gam_[top_].test(zn::mul_mod(r, x, n_))) return false;
        return true;
    }

    void add(std::uint64_t x) {
        for (std::uint32_t k = top_; k >= 1; --k) {
            for (std::uint32_t r = 1; r <= k; ++r) {
                std::uint64_t rx = zn::mul_mod(r, x, n_);
                gam_[k].or_rotated(gam_[k - r], rx);
                gam_[k].or_rotated(gam_[k - r], (n_ - rx) % n_);
            }
        }
    }

    void push(std::uint64_t x) {
        saved_.push_back(gam_);
        add(x);
    }

    void pop() {
        gam_ = std::move(saved_.back());
        saved_.pop_back();
    }

  private:
    std::uint64_t n_;
    std::uint32_t t_;
    std::uint32_t top_;
    std::vector<bits::Bitset> gam_;
    std::vector<std::vector<bits::Bitset>> saved_;
};

struct SharedSearch {
    std::atomic<std::uint64_t> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> next_branch{0};
    std::uint64_t node_limit = 0;
    bool has_deadline = false;
    Clock::time_point deadline{};
    std::mutex witness_mu;
    std::vector<std::uint64_t> best_set;

    bool charge_node() {
        std::uint64_t c = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit && c > node_limit) {
            exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        if (has_deadline && (c & 0xfff) == 0 && Clock::now() >= deadline) {
            exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void offer(const std::vector<std::uint64_t>& s) {
        std::uint64_t sz = s.size();
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (sz > cur && !best.compare_exchange_weak(cur, sz, std::memory_order_relaxed)) {
        }
        if (sz > cur) {
            std::lock_guard<std::mutex> lk(witness_mu);
            if (s.size() > best_set.size()) best_set = s;
        }
    }
};

// Depth-first growth over an ascending candidate list.  Children are tried
// smallest-first, so complete sets are visited in lexicographic order of
// their sorted element vectors.
class BranchSearcher {
  public:
    BranchSearcher(std::uint64_t n, std::uint32_t t, const std::vector<std::uint64_t>& cand,
                   SharedSearch* shared)
        : cand_(cand), shared_(shared), ladder_(n, t, t - 1) {}

    // Phase A: exhaust every extension, keeping only the best size.
    void prove_from(std::size_t first) {
        if (!ladder_.safe(cand_[first])) return;
        if (!shared_->charge_node()) return;
        ladder_.push(cand_[first]);
        cur_.push_back(cand_[first]);
        shared_->offer(cur_);
        prove(first + 1);
        cur_.pop_back();
        ladder_.pop();
    }

    // Phase B: stop at the first set reaching target; that set is the
    // lexicographically smallest one of that size.
    bool find_first(std::size_t from, std::uint64_t target, std::vector<std::uint64_t>* out) {
        if (cur_.size() == target) {
            *out = cur_;
            return true;
        }
        for (std::size_t j = from; j < cand_.size(); ++j) {
            if (cur_.size() + (cand_.size() - j) < target) break;
            if (!ladder_.safe(cand_[j])) continue;
            if (!shared_->charge_node()) return false;
            ladder_.push(cand_[j]);
            cur_.push_back(cand_[j]);
            bool hit = find_first(j + 1, target, out);
            cur_.pop_back();
            ladder_.pop();
            if (hit || shared_->exhausted.load(std::memory_order_relaxed)) return hit;
        }
        return false;
    }

  private:
    void prove(std::size_t from) {
        for (std::size_t j = from; j < cand_.size(); ++j) {
            if (cur_.size() + (cand_.size() - j) <=
                shared_->best.load(std::memory_order_relaxed))
                break;
            if (shared_->exhausted.load(std::memory_order_relaxed)) return;
            if (!ladder_.safe(cand_[j])) continue;
            if (!shared_->charge_node()) return;
            ladder_.push(cand_[j]);
            cur_.push_back(cand_[j]);
            shared_->offer(cur_);
            prove(j + 1);
            cur_.pop_back();
            ladder_.pop();
        }
    }

    const std::vector<std::uint64_t>& cand_;
    SharedSearch* shared_;
    GammaLadder ladder_;
    std::vector<std::uint64_t> cur_;
};

bool orbit_minimal(std::uint64_t c, std::uint64_t n) {
    for (std::uint64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        std::uint64_t v = zn::mul_mod(c, u, n);
        v = std::min(v, n - v);
        if (v < c) return false;
    }
    return true;
}

constructions::ConstructionResult seed_construction(std::uint64_t n, std::uint32_t t) {
    if (t <= 2) return constructions::closed_form(n, t);
    if (t == 3) return constructions::three_free_construct(n);
    return constructions::powers_construction(n, t);
}

std::uint64_t integer_root(std::uint64_t x, std::uint32_t t) {
    // Largest m with m^t <= x.
    if (t <= 1) return x;
    std::uint64_t lo = 0, hi = std::min<std::uint64_t>(x, std::uint64_t{1} << ((64 + t - 1) / t));
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        auto p = numeric::pow_checked(mid, t);
        if (p && *p <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

MaxResult exact_max(std::uint64_t n, std::uint32_t t, const SearchBudget& budget) {
    zn::CyclicContext ctx(n, t);
    auto start = Clock::now();
    MaxResult out{n, t, 0, zn::ResidueSet(n), SearchStatus::exact, 0, 0.0};
    auto finish = [&](SearchStatus st) {
        out.status = st;
        out.elapsed_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() -
                                                                                  start)
                .count();
        return out;
    };

    if (t == 1) {
        // 1-free just means 0 is absent, so all of 1..n-1 qualifies.
        std::vector<std::uint64_t> all;
        for (std::uint64_t v = 1; v < n; ++v) all.push_back(v);
        out.size = all.size();
        out.witness = zn::ResidueSet(n, std::move(all));
        return finish(SearchStatus::exact);
    }
    if (n <= t) {
        // Every nonzero x has order at most n <= t, so even singletons fail.
        return finish(SearchStatus::exact);
    }

    auto seed = seed_construction(n, t);
    if (!zn::is_t_free(ctx, seed.set).t_free())
        throw std::logic_error("seed construction failed verification");

    // Negating elements maps t-free sets to t-free sets of equal size and
    // never increases sorted vectors, so both the maximum size and the
    // lexicographically smallest maximum set live inside 1..floor((n-1)/2).
    std::vector<std::uint64_t> cand;
    for (std::uint64_t v = 1; 2 * v <= n - 1; ++v) cand.push_back(v);

    SharedSearch shared;
    shared.best.store(seed.guaranteed_size);
    shared.best_set.assign(seed.set.elements().begin(), seed.set.elements().end());
    shared.node_limit = budget.node_limit;
    if (budget.time_limit_s > 0) {
        shared.has_deadline = true;
        shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(budget.time_limit_s));
    }

    unsigned workers = std::max(1u, budget.workers);
    auto run_branches = [&]() {
        for (;;) {
            std::size_t i = shared.next_branch.fetch_add(1, std::memory_order_relaxed);
            if (i >= cand.size()) return;
            if (shared.exhausted.load(std::memory_order_relaxed)) return;
            if (1 + (cand.size() - i - 1) <= shared.best.load(std::memory_order_relaxed))
                continue;
            if (budget.unit_canonicalization && !orbit_minimal(cand[i], n)) continue;
            BranchSearcher searcher(n, t, cand, &shared);
            searcher.prove_from(i);
        }
    };
    if (workers == 1 || cand.size() <= 1) {
        run_branches();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_branches);
        for (auto& th : pool) th.join();
    }

    out.nodes = shared.nodes.load();
    std::uint64_t m = shared.best.load();
    out.size = m;
    if (shared.exhausted.load()) {
        out.witness = zn::ResidueSet(n, std::vector<std::uint64_t>(shared.best_set));
        return finish(SearchStatus::lower_bound_only);
    }

    if (m == 0) return finish(SearchStatus::exact);

    // The maximum is now proved; recover the lexicographically smallest
    // witness by a first-hit scan at that size.
    BranchSearcher finder(n, t, cand, &shared);
    std::vector<std::uint64_t> witness;
    bool hit = finder.find_first(0, m, &witness);
    out.nodes = shared.nodes.load();
    if (!hit) {
        out.witness = zn::ResidueSet(n, std::vector<std::uint64_t>(shared.best_set));
        return finish(SearchStatus::lower_bound_only);
    }
    out.witness = zn::ResidueSet(n, std::move(witness));
    return finish(SearchStatus::exact);
}

zn::ResidueSet greedy_t_free(std::uint64_t n, std::uint32_t t, std::uint64_t m) {
    zn::CyclicContext ctx(n, t);
    if (n <= t) throw std::invalid_argument("greedy growth needs n > t");
    if (m == 0) return zn::ResidueSet(n);
    GammaLadder ladder(n, t, t);
    std::vector<std::uint64_t> out;
    std::uint64_t next = 1;
    while (out.size() < m) {
        bool found = false;
        for (std::uint64_t j = next; j < n; ++j) {
            if (!ladder.multiples_clear(j)) continue;
            ladder.add(j);
            out.push_back(j);
            next = j + 1;
            found = true;
            break;
        }
        if (!found)
            throw std::runtime_error("greedy growth exhausted candidates at size " +
                                     std::to_string(out.size()));
    }
    return zn::ResidueSet(n, std::move(out));
}

Bounds bounds(std::uint64_t n, std::uint32_t t) {
    zn::CyclicContext ctx(n, t);
    Bounds b;

    if (t == 1) {
        b.lower_candidates.push_back({n - 1, "all nonzero residues"});
    } else if (t == 2) {
        b.lower_candidates.push_back({(n - 1) / 2, "residues up to half the modulus"});
    } else if (t == 3) {
        auto c = constructions::three_free_construct(n);
        b.lower_candidates.push_back({c.guaranteed_size, constructions::method_name(c.method)});
    }
    if (t >= 2 && n > t) {
        auto p = constructions::powers_construction(n, t);
        b.lower_candidates.push_back({p.guaranteed_size, "powers"});
    }
    if (auto base = numeric::pow_checked(3, t)) {
        if (auto c0 = numeric::mul_checked(t, *base)) {
            if (*c0 <= n) {
                std::uint64_t gm = integer_root(n / *c0, t);
                if (gm >= 1) b.lower_candidates.push_back({gm, "greedy counting"});
            }
        }
    }
    if (n > t) b.lower_candidates.push_back({1, "singleton"});
    if (b.lower_candidates.empty()) b.lower_candidates.push_back({0, "empty set"});
    for (const auto& c : b.lower_candidates) b.lower = std::max(b.lower, c.value);

    if (t == 1) {
        b.upper_candidates.push_back({n - 1, "zero excluded only"});
    } else {
        b.upper_candidates.push_back({(n - 1) / 2, "negation pairs collide"});
    }
    if (t >= 3) b.upper_candidates.push_back({n / 4, "three-free maximum"});
    std::uint32_t h = t / 2;
    if (h >= 1) {
        // Largest m with C(m+h, h) <= n: sums of at most h elements must be
        // pairwise distinct, and there are only n residues to hold them.
        std::uint64_t lo = 0, hi = n;
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo + 1) / 2;
            auto c = numeric::binomial(mid + h, h);
            if (c && *c <= n)
                lo = mid;
            else
                hi = mid - 1;
        }
        b.upper_candidates.push_back({lo, "sum counting"});
    }
    b.upper = b.upper_candidates.front().value;
    for (const auto& c : b.upper_candidates) b.upper = std::min(b.upper, c.value);

    if (t == 1)
        b.note = "maximum size is exactly n-1";
    else if (t == 2)
        b.note = "maximum size is exactly floor((n-1)/2)";
    else if (t == 3)
        b.note = "maximum size is n/4 up to an additive constant, exactly n/4 for even n";
    else
        b.note = "maximum size grows between c*n^(1/" + std::to_string(t) + ") and C*n^(1/" +
                 std::to_string(h) + ")";
    return b;
}

}  // namespace freeset::search
