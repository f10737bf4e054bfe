#include "dualpath/oracle.hpp"

#include "dualpath/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace dualpath {

void validate_budget(const SearchBudget& b) {
    if (b.node_limit == 0) throw ValidationError("node limit must be positive");
    if (!(b.time_limit_s > 0)) throw ValidationError("time limit must be positive");
    if (b.threads < 1) throw ValidationError("thread count must be positive");
}

std::vector<std::uint8_t> monochromatic_faces(const PlaneGraph& g, const ColorVector& c) {
    std::vector<std::uint8_t> mono(g.faces.size(), 0);
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
        bool red = false, blue = false;
        for (EdgeId e : g.faces[f].edges()) (c[g.edges[e].line] == Color::Red ? red : blue) = true;
        mono[f] = !(red && blue);
    }
    return mono;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    const std::vector<std::vector<FaceId>>& succ;
    const std::vector<std::uint8_t>& parity;
    const std::vector<std::uint8_t>& endpoint_only;
    const SearchBudget& budget;
    Clock::time_point start;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> global_best{0};
    std::atomic<bool> aborted{false};
};

class Search {
public:
    explicit Search(Shared& s) : s_(s), used_(s.succ.size(), 0), mark_(s.succ.size(), 0) {}

    void run(FaceId root) {
        used_[root] = 1;
        path_.push_back(root);
        dfs(root);
        path_.pop_back();
        used_[root] = 0;
    }

    std::vector<FaceId> best;

private:
    void dfs(FaceId cur) {
        if (s_.aborted.load(std::memory_order_relaxed)) return;
        const auto count = s_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (count > s_.budget.node_limit) {
            s_.aborted = true;
            return;
        }
        if ((count & 0x3ff) == 0 &&
            std::chrono::duration<double>(Clock::now() - s_.start).count() > s_.budget.time_limit_s) {
            s_.aborted = true;
            return;
        }
        if (path_.size() > best.size()) {
            best = path_;
            int gb = s_.global_best.load();
            const int len = static_cast<int>(best.size());
            while (len > gb && !s_.global_best.compare_exchange_weak(gb, len)) {
            }
        }
        if (path_.size() > 1 && s_.endpoint_only[cur]) return;
        const int bound = static_cast<int>(path_.size()) + extension_bound(cur);
        if (bound <= static_cast<int>(best.size()) || bound < s_.global_best.load(std::memory_order_relaxed)) return;
        for (FaceId t : s_.succ[cur]) {
            if (used_[t]) continue;
            used_[t] = 1;
            path_.push_back(t);
            dfs(t);
            path_.pop_back();
            used_[t] = 0;
            if (s_.aborted.load(std::memory_order_relaxed)) return;
        }
    }

    // Unused faces reachable from cur, split by parity.
    int extension_bound(FaceId cur) {
        ++stamp_;
        if (stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        int count[2] = {0, 0};
        stack_.clear();
        stack_.push_back(cur);
        mark_[cur] = stamp_;
        while (!stack_.empty()) {
            const FaceId f = stack_.back();
            stack_.pop_back();
            if (f != cur && s_.endpoint_only[f]) continue;
            for (FaceId t : s_.succ[f]) {
                if (used_[t] || mark_[t] == stamp_) continue;
                mark_[t] = stamp_;
                ++count[s_.parity[t]];
                stack_.push_back(t);
            }
        }
        int ext = count[0] + count[1];
        if (s_.budget.bipartite_pruning) {
            const int p = 1 - s_.parity[cur];
            ext = std::min({ext, 2 * count[p], 2 * count[1 - p] + 1});
        }
        return ext;
    }

    Shared& s_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::vector<FaceId> path_;
    std::vector<FaceId> stack_;
};

struct RawResult {
    bool complete;
    std::vector<FaceId> best;
    std::uint64_t nodes;
    double seconds;
};

RawResult search(const std::vector<std::vector<FaceId>>& succ, const std::vector<std::uint8_t>& parity,
                 const std::vector<std::uint8_t>& endpoint_only, const SearchBudget& budget) {
    validate_budget(budget);
    Shared shared{succ, parity, endpoint_only, budget, Clock::now()};
    const int roots = static_cast<int>(succ.size());
    std::vector<std::vector<FaceId>> per_root(roots);
    auto worker = [&](int k, int stride) {
        Search s(shared);
        for (int r = k; r < roots; r += stride) {
            s.best.clear();
            s.run(r);
            per_root[r] = s.best;
            if (shared.aborted) return;
        }
    };
    const int threads = std::max(1, std::min(budget.threads, roots));
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) pool.emplace_back(worker, k, threads);
        for (auto& t : pool) t.join();
    }
    RawResult r;
    r.complete = !shared.aborted;
    r.nodes = std::min<std::uint64_t>(shared.nodes.load(), budget.node_limit);
    r.seconds = std::chrono::duration<double>(Clock::now() - shared.start).count();
    for (const auto& p : per_root)
        if (p.size() > r.best.size()) r.best = p;
    return r;
}

}  // namespace

OracleResult longest_path(const PlaneGraph& g, const SearchBudget& budget) {
    const auto nf = g.faces.size();
    std::vector<std::vector<FaceId>> succ(nf);
    std::vector<std::uint8_t> parity(nf), none(nf, 0);
    for (FaceId f = 0; f < static_cast<FaceId>(nf); ++f) {
        parity[f] = g.faces[f].level % 2;
        for (EdgeId e : g.faces[f].edges()) succ[f].push_back(g.edges[e].other(f));
        std::sort(succ[f].begin(), succ[f].end());
        succ[f].erase(std::unique(succ[f].begin(), succ[f].end()), succ[f].end());
    }
    const RawResult raw = search(succ, parity, none, budget);
    OracleResult r;
    r.complete = raw.complete;
    r.length = static_cast<int>(raw.best.size());
    r.nodes = raw.nodes;
    r.seconds = raw.seconds;
    r.witness.faces = raw.best;
    for (std::size_t k = 0; k + 1 < raw.best.size(); ++k)
        r.witness.certificates.push_back(g.shared_edges(raw.best[k], raw.best[k + 1]).front());
    return r;
}

OracleResult longest_alternating(const DirectedDual& dd, const PlaneGraph& g, const ColorVector& c,
                                 const SearchBudget& budget) {
    const auto nf = dd.face_count();
    std::vector<std::vector<FaceId>> succ(nf);
    std::vector<std::uint8_t> parity(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        parity[f] = dd.black[f] ? 0 : 1;
        for (int a : dd.out[f]) succ[f].push_back(dd.arcs[a].to);
    }
    const auto endpoint_only =
        budget.exclude_monochromatic ? monochromatic_faces(g, c) : std::vector<std::uint8_t>(nf, 0);
    const RawResult raw = search(succ, parity, endpoint_only, budget);
    OracleResult r;
    r.complete = raw.complete;
    r.length = static_cast<int>(raw.best.size());
    r.nodes = raw.nodes;
    r.seconds = raw.seconds;
    r.witness = to_dual_path(dd, g, raw.best);
    return r;
}

}  // namespace dualpath
