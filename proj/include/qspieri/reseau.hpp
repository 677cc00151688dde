#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qspieri {

// An oriented multigraph with integer-labelled edges ("reseau").  Vertices
// carry opaque string identifiers and, optionally, a rank; a graded poset is
// the special case of multiplicity-1 edges from rank r to rank r+1.
// Immutable after construction: build through Builder.

struct ReseauEdge {
    int from = 0;
    int to = 0;
    int label = 0;
    long long mult = 1;
};

class LabelledReseau {
public:
    class Builder {
    public:
        // rank < 0 marks an unranked vertex; mixing ranked and unranked
        // vertices is rejected at build time.
        Builder& add_vertex(const std::string& id, int rank = -1) {
            if (index_.count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
            index_[id] = static_cast<int>(ids_.size());
            ids_.push_back(id);
            ranks_.push_back(rank);
            return *this;
        }

        Builder& add_edge(const std::string& from, const std::string& to, int label,
                          long long mult = 1) {
            if (mult < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
            edges_.push_back(ReseauEdge{vertex_checked(from), vertex_checked(to), label, mult});
            return *this;
        }

        LabelledReseau build() && {
            LabelledReseau g;
            g.ids_ = std::move(ids_);
            g.index_ = std::move(index_);
            bool any_ranked = false, any_unranked = false;
            for (int r : ranks_) (r >= 0 ? any_ranked : any_unranked) = true;
            if (any_ranked && any_unranked)
                throw std::invalid_argument("either all vertices are ranked or none");
            g.ranked_ = any_ranked;
            g.ranks_ = std::move(ranks_);
            // merge duplicate (from, to, label) entries
            std::map<std::tuple<int, int, int>, long long> merged;
            for (const ReseauEdge& e : edges_)
                merged[{e.from, e.to, e.label}] += e.mult;
            for (const auto& [k, m] : merged) {
                auto [f, t, l] = k;
                if (g.ranked_ && g.ranks_[static_cast<size_t>(t)] !=
                                     g.ranks_[static_cast<size_t>(f)] + 1)
                    throw std::invalid_argument("ranked edges must go from rank r to rank r+1");
                g.edges_.push_back(ReseauEdge{f, t, l, m});
            }
            g.out_.assign(g.ids_.size(), {});
            for (size_t i = 0; i < g.edges_.size(); ++i)
                g.out_[static_cast<size_t>(g.edges_[i].from)].push_back(static_cast<int>(i));
            return g;
        }

    private:
        int vertex_checked(const std::string& id) const {
            auto it = index_.find(id);
            if (it == index_.end()) throw std::invalid_argument("unknown vertex id: " + id);
            return it->second;
        }
        std::vector<std::string> ids_;
        std::map<std::string, int> index_;
        std::vector<int> ranks_;
        std::vector<ReseauEdge> edges_;
    };

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int v) const { return ids_.at(static_cast<size_t>(v)); }
    std::optional<int> vertex(const std::string& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
    }
    int vertex_checked(const std::string& id) const {
        auto v = vertex(id);
        if (!v) throw std::invalid_argument("unknown vertex id: " + id);
        return *v;
    }

    bool ranked() const { return ranked_; }
    int rank(int v) const {
        if (!ranked_) throw std::logic_error("reseau is unranked");
        return ranks_.at(static_cast<size_t>(v));
    }

    const std::vector<ReseauEdge>& edges() const { return edges_; }
    const std::vector<int>& out_edges(int v) const { return out_.at(static_cast<size_t>(v)); }

    long long incidence(int x, int y) const {
        long long m = 0;
        for (int e : out_edges(x))
            if (edges_[static_cast<size_t>(e)].to == y) m += edges_[static_cast<size_t>(e)].mult;
        return m;
    }

    // E^r(x, y): number of length-r paths, multiplicities included.
    long long count_paths(int x, int y, int r) const {
        if (r < 0) throw std::invalid_argument("path length must be >= 0");
        std::vector<long long> v(ids_.size(), 0);
        v[static_cast<size_t>(x)] = 1;
        for (int step = 0; step < r; ++step) {
            std::vector<long long> next(ids_.size(), 0);
            for (int u = 0; u < size(); ++u) {
                if (v[static_cast<size_t>(u)] == 0) continue;
                for (int e : out_edges(u))
                    next[static_cast<size_t>(edges_[static_cast<size_t>(e)].to)] +=
                        v[static_cast<size_t>(u)] * edges_[static_cast<size_t>(e)].mult;
            }
            v = std::move(next);
        }
        return v[static_cast<size_t>(y)];
    }

    std::vector<int> minimal_vertices() const {
        std::vector<bool> has_in(ids_.size(), false);
        for (const ReseauEdge& e : edges_) has_in[static_cast<size_t>(e.to)] = true;
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (!has_in[static_cast<size_t>(v)]) out.push_back(v);
        return out;
    }

    std::vector<int> maximal_vertices() const {
        std::vector<bool> has_out(ids_.size(), false);
        for (const ReseauEdge& e : edges_) has_out[static_cast<size_t>(e.from)] = true;
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (!has_out[static_cast<size_t>(v)]) out.push_back(v);
        return out;
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<int> ranks_;
    bool ranked_ = false;
    std::vector<ReseauEdge> edges_;
    std::vector<std::vector<int>> out_;
};

// A saturated path: a start vertex and a sequence of composable edges.
// Parallel identical edges are represented once, with the product of edge
// multiplicities recorded in mult().
struct Chain {
    const LabelledReseau* g = nullptr;
    int start = 0;
    std::vector<int> edge_indices;

    int length() const { return static_cast<int>(edge_indices.size()); }

    int end() const {
        return edge_indices.empty() ? start
                                    : g->edges()[static_cast<size_t>(edge_indices.back())].to;
    }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(edge_indices.size());
        for (int e : edge_indices) out.push_back(g->edges()[static_cast<size_t>(e)].label);
        return out;
    }

    long long mult() const {
        long long m = 1;
        for (int e : edge_indices) m *= g->edges()[static_cast<size_t>(e)].mult;
        return m;
    }
};

// All length-r paths from x to y.  Sum of mult() over the result equals
// E^r(x, y).  Suffix path counts prune dead branches.
inline std::vector<Chain> chains(const LabelledReseau& g, int x, int y, int r) {
    if (r < 0) throw std::invalid_argument("chain length must be >= 0");
    // remaining[j][v] = number of length-j paths from v to y
    std::vector<std::vector<long long>> remaining(static_cast<size_t>(r) + 1,
                                                  std::vector<long long>(g.size(), 0));
    remaining[0][static_cast<size_t>(y)] = 1;
    for (int j = 1; j <= r; ++j)
        for (int v = 0; v < g.size(); ++v)
            for (int e : g.out_edges(v)) {
                const ReseauEdge& ed = g.edges()[static_cast<size_t>(e)];
                remaining[static_cast<size_t>(j)][static_cast<size_t>(v)] +=
                    ed.mult * remaining[static_cast<size_t>(j) - 1][static_cast<size_t>(ed.to)];
            }

    std::vector<Chain> out;
    Chain cur{&g, x, {}};
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (remaining[static_cast<size_t>(left)][static_cast<size_t>(v)] == 0) return;
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int e : g.out_edges(v)) {
            cur.edge_indices.push_back(e);
            self(self, g.edges()[static_cast<size_t>(e)].to, left - 1);
            cur.edge_indices.pop_back();
        }
    };
    rec(rec, x, r);
    return out;
}

// The doubled reseau: every edge is duplicated with the negated label.
// Defined for positively labelled input.
inline LabelledReseau double_reseau(const LabelledReseau& p) {
    LabelledReseau::Builder b;
    for (int v = 0; v < p.size(); ++v) b.add_vertex(p.id(v), p.ranked() ? p.rank(v) : -1);
    for (const ReseauEdge& e : p.edges()) {
        if (e.label <= 0) throw std::invalid_argument("doubling needs positive labels");
        b.add_edge(p.id(e.from), p.id(e.to), e.label, e.mult);
        b.add_edge(p.id(e.from), p.id(e.to), -e.label, e.mult);
    }
    return std::move(b).build();
}

// Removes the negative twin of each positively labelled cover matched by the
// predicate.  The input must be a doubling: every positive edge has a
// negative twin of equal multiplicity.
inline LabelledReseau erase_negative(const LabelledReseau& doubled,
                                     const std::function<bool(const LabelledReseau&,
                                                              const ReseauEdge&)>& predicate) {
    std::map<std::tuple<int, int, int>, long long> mults;
    for (const ReseauEdge& e : doubled.edges()) mults[{e.from, e.to, e.label}] += e.mult;
    for (const ReseauEdge& e : doubled.edges()) {
        if (e.label == 0) throw std::invalid_argument("doubled reseau has nonzero labels");
        auto it = mults.find({e.from, e.to, -e.label});
        if (it == mults.end() || it->second != e.mult)
            throw std::invalid_argument("input is not a doubling");
    }
    LabelledReseau::Builder b;
    for (int v = 0; v < doubled.size(); ++v)
        b.add_vertex(doubled.id(v), doubled.ranked() ? doubled.rank(v) : -1);
    for (const ReseauEdge& e : doubled.edges()) {
        if (e.label < 0) {
            ReseauEdge twin{e.from, e.to, -e.label, e.mult};
            if (predicate(doubled, twin)) continue;
        }
        b.add_edge(doubled.id(e.from), doubled.id(e.to), e.label, e.mult);
    }
    return std::move(b).build();
}

}  // namespace qspieri
