#include "cubic3dec/label_search.hpp"

#include <bit>
#include <stdexcept>

namespace cubic3dec {

Label label_from_char(char c) {
    switch (c) {
        case 'T': case 't': return Label::T;
        case 'C': case 'c': return Label::C;
        case 'M': case 'm': return Label::M;
    }
    throw std::invalid_argument(std::string("bad label '") + c + "'");
}

std::string labels_str(const std::vector<Label>& ls) {
    std::string s;
    for (auto l : ls) s.push_back(label_char(l));
    return s;
}

std::vector<Label> labels_from_str(const std::string& s) {
    std::vector<Label> out;
    for (char c : s) out.push_back(label_from_char(c));
    return out;
}

namespace {

constexpr std::uint8_t T = 1, C = 2, M = 4;

constexpr std::uint8_t kPatterns[7][3] = {
    {T, T, T}, {T, T, M}, {T, M, T}, {M, T, T}, {T, C, C}, {C, T, C}, {C, C, T},
};

class Search {
public:
    Search(const LabelProblem& p, std::uint64_t budget, const std::function<bool(const std::vector<Label>&)>& visit)
        : p_(p), g_(*p.graph), budget_(budget), visit_(visit) {
        int n = g_.n(), m = g_.m();
        outer_ = p.outer.empty() ? std::vector<char>(n, 0) : p.outer;
        for (int v = 0; v < n; ++v)
            if (!outer_[v] && g_.degree(v) != 3) throw std::invalid_argument("inner vertex without degree 3");
        dom_.assign(m, kAnyLabel);
        if (!p.allowed.empty())
            for (int e = 0; e < m; ++e) dom_[e] = p.allowed[e] & kAnyLabel;
        parent_.resize(n);
        size_.assign(n, 1);
        for (int v = 0; v < n; ++v) parent_[v] = v;
        group_.assign(n, -1);
        if (!p.group.empty()) group_ = p.group;
        has_groups_ = false;
        for (int x : group_) has_groups_ |= x >= 0;
        mark_.assign(n, 0);
        comp_.assign(n, -1);
        labels_.resize(m);
    }

    SearchStats run() {
        queue_.clear();
        for (int v = 0; v < g_.n(); ++v) queue_.push_back(v);
        for (int e = 0; e < g_.m(); ++e) {
            if (dom_[e] == 0) return stats_;
            if (dom_[e] == T && !pending_union(e)) return stats_;
        }
        if (propagate() && bound()) descend();
        return stats_;
    }

private:
    const LabelProblem& p_;
    const Graph& g_;
    std::uint64_t budget_;
    const std::function<bool(const std::vector<Label>&)>& visit_;
    SearchStats stats_;
    bool stop_ = false;

    std::vector<char> outer_;
    std::vector<std::uint8_t> dom_;
    std::vector<std::pair<int, std::uint8_t>> dom_trail_;
    std::vector<int> parent_, size_, group_;
    std::vector<std::pair<int, int>> uf_trail_;  // (child root, old group of parent root)
    bool has_groups_ = false;
    std::vector<int> queue_;
    std::vector<int> mark_, comp_;
    std::vector<int> bfs_;
    std::vector<Label> labels_;

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (group_[a] >= 0 && group_[b] >= 0 && group_[a] != group_[b]) return false;
        if (size_[a] > size_[b]) std::swap(a, b);
        uf_trail_.emplace_back(a, group_[b]);
        parent_[a] = b;
        size_[b] += size_[a];
        if (group_[b] < 0) group_[b] = group_[a];
        return true;
    }

    void undo_to(size_t dom_mark, size_t uf_mark) {
        while (dom_trail_.size() > dom_mark) {
            auto [e, old] = dom_trail_.back();
            dom_trail_.pop_back();
            dom_[e] = old;
        }
        while (uf_trail_.size() > uf_mark) {
            auto [a, old_group] = uf_trail_.back();
            uf_trail_.pop_back();
            int b = parent_[a];
            size_[b] -= size_[a];
            group_[b] = old_group;
            parent_[a] = a;
        }
    }

    bool pending_union(int e) { return unite(g_.edge(e).first, g_.edge(e).second); }

    bool narrow(int e, std::uint8_t d) {
        if (d == dom_[e]) return true;
        dom_trail_.emplace_back(e, dom_[e]);
        dom_[e] = d;
        if (d == 0) return false;
        if (d == T && !pending_union(e)) return false;
        queue_.push_back(g_.edge(e).first);
        queue_.push_back(g_.edge(e).second);
        return true;
    }

    bool revise(int v) {
        const auto& inc = g_.incident(v);
        std::uint8_t d0 = dom_[inc[0]], d1 = dom_[inc[1]], d2 = dom_[inc[2]];
        std::uint8_t s0 = 0, s1 = 0, s2 = 0;
        for (const auto& pt : kPatterns)
            if ((pt[0] & d0) && (pt[1] & d1) && (pt[2] & d2)) {
                s0 |= pt[0];
                s1 |= pt[1];
                s2 |= pt[2];
            }
        return narrow(inc[0], d0 & s0) && narrow(inc[1], d1 & s1) && narrow(inc[2], d2 & s2);
    }

    bool propagate() {
        while (true) {
            while (!queue_.empty()) {
                int v = queue_.back();
                queue_.pop_back();
                if (outer_[v]) continue;
                if (!revise(v)) {
                    queue_.clear();
                    return false;
                }
            }
            // T may not close a cycle among committed T-edges
            for (int e = 0; e < g_.m(); ++e) {
                if ((dom_[e] & T) && dom_[e] != T && find(g_.edge(e).first) == find(g_.edge(e).second)) {
                    if (!narrow(e, dom_[e] & ~T)) {
                        queue_.clear();
                        return false;
                    }
                }
            }
            if (queue_.empty()) return true;
        }
    }

    // Every final T-component is contained in a component of the graph of
    // edges that may still be T.
    bool bound() {
        int n = g_.n();
        std::fill(comp_.begin(), comp_.end(), -1);
        int c = 0;
        for (int s = 0; s < n; ++s) {
            if (comp_[s] >= 0) continue;
            bfs_.clear();
            bfs_.push_back(s);
            comp_[s] = c;
            bool has_outer = false;
            for (size_t i = 0; i < bfs_.size(); ++i) {
                int v = bfs_[i];
                has_outer |= outer_[v] != 0;
                const auto& inc = g_.incident(v);
                const auto& nb = g_.neighbors(v);
                for (size_t k = 0; k < inc.size(); ++k)
                    if ((dom_[inc[k]] & T) && comp_[nb[k]] < 0) {
                        comp_[nb[k]] = c;
                        bfs_.push_back(nb[k]);
                    }
            }
            if (p_.spanning) {
                if (c > 0) return false;
            } else if (!has_outer) {
                return false;
            }
            ++c;
        }
        if (has_groups_) {
            // first component seen per group
            std::fill(mark_.begin(), mark_.end(), -1);
            for (int v = 0; v < n; ++v) {
                int gid = p_.group.empty() ? -1 : p_.group[v];
                if (gid < 0) continue;
                if (gid >= n) throw std::invalid_argument("group id out of range");
                if (mark_[gid] < 0) mark_[gid] = comp_[v];
                else if (mark_[gid] != comp_[v]) return false;
            }
        }
        return true;
    }

    int choose() const {
        int best = -1;
        int best_key[3] = {0, 0, 0};
        for (int e = 0; e < g_.m(); ++e) {
            std::uint8_t d = dom_[e];
            if (std::popcount(d) < 2) continue;
            auto [u, v] = g_.edge(e);
            int decided = 0;
            for (int w : {u, v}) {
                int k = 0;
                for (int f : g_.incident(w)) k += std::popcount(dom_[f]) == 1;
                decided = std::max(decided, k);
            }
            int key[3] = {(d & C) ? 1 : 0, -std::popcount(d), decided};
            if (best < 0 || key[0] > best_key[0] || (key[0] == best_key[0] && (key[1] > best_key[1] ||
                (key[1] == best_key[1] && key[2] > best_key[2])))) {
                best = e;
                best_key[0] = key[0];
                best_key[1] = key[1];
                best_key[2] = key[2];
            }
        }
        return best;
    }

    void descend() {
        if (stop_) return;
        int e = choose();
        if (e < 0) {
            for (int f = 0; f < g_.m(); ++f) labels_[f] = static_cast<Label>(std::countr_zero(dom_[f]));
            if (!visit_(labels_)) {
                stop_ = true;
                stats_.status = SearchStatus::Stopped;
            }
            return;
        }
        std::uint8_t d = dom_[e];
        for (std::uint8_t bit : {T, C, M}) {
            if (!(d & bit)) continue;
            if (budget_ && stats_.nodes >= budget_) {
                stop_ = true;
                stats_.status = SearchStatus::Budget;
                return;
            }
            ++stats_.nodes;
            size_t dm = dom_trail_.size(), um = uf_trail_.size();
            if (narrow(e, bit) && propagate() && bound()) descend();
            queue_.clear();
            undo_to(dm, um);
            if (stop_) return;
        }
    }
};

}  // namespace

SearchStats label_search(const LabelProblem& p, std::uint64_t budget,
                         const std::function<bool(const std::vector<Label>&)>& visit) {
    Search s(p, budget, visit);
    return s.run();
}

}  // namespace cubic3dec
