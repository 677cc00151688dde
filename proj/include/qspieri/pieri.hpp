#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qspieri/composition.hpp"
#include "qspieri/interval_hopf.hpp"
#include "qspieri/qsym.hpp"
#include "qspieri/reseau.hpp"

namespace qspieri {

// Pieri operator families on a reseau.  A family is the collection of
// degree-k linear operators h_k on the free module over the vertices; every
// kind here sums, over length-k chains out of a vertex and subject to a
// label condition, the end of the chain:
//
//   rank_selection    no condition, each reachable end counted once
//   path_count        no condition, ends counted with path multiplicity
//   descent           weakly increasing labels
//   modified_descent  signed labels; consecutive pair allowed when
//                     b < b' or b = b' > 0
//   quantum(m, p)     weakly increasing labels, every label below the
//                     first entry of the start sequence plus m + p (the
//                     strip stays within one period of the cylinder);
//                     defined for k <= p
//
// A family may carry a scalar applied to each operator (the halved families
// h_k -> s * h_k); the scalar participates in every evaluation.
//
// Families are safe to share across threads: the operator cache fills
// idempotently under a lock, and the reseau itself is immutable.

enum class PieriKind { RankSelection, PathCount, Descent, ModifiedDescent, Quantum };

class PieriFamily {
public:
    static PieriFamily rank_selection(const LabelledReseau& g) {
        return PieriFamily(g, PieriKind::RankSelection);
    }
    static PieriFamily path_count(const LabelledReseau& g) {
        return PieriFamily(g, PieriKind::PathCount);
    }
    static PieriFamily descent(const LabelledReseau& g) {
        return PieriFamily(g, PieriKind::Descent);
    }
    static PieriFamily modified_descent(const LabelledReseau& g) {
        return PieriFamily(g, PieriKind::ModifiedDescent);
    }
    static PieriFamily quantum(const LabelledReseau& g, int m, int p) {
        if (m < 1 || p < 1) throw std::invalid_argument("quantum family needs m, p >= 1");
        PieriFamily f(g, PieriKind::Quantum);
        f.qm_ = m;
        f.qp_ = p;
        return f;
    }

    // Families keep a reference to the reseau; a temporary would dangle.
    static PieriFamily rank_selection(const LabelledReseau&&) = delete;
    static PieriFamily path_count(const LabelledReseau&&) = delete;
    static PieriFamily descent(const LabelledReseau&&) = delete;
    static PieriFamily modified_descent(const LabelledReseau&&) = delete;
    static PieriFamily quantum(const LabelledReseau&&, int, int) = delete;

    PieriFamily(const PieriFamily& other)
        : g_(other.g_), kind_(other.kind_), qm_(other.qm_), qp_(other.qp_), scale_(other.scale_) {
        std::lock_guard<std::mutex> lock(other.cache_mutex_);
        cache_ = other.cache_;
    }

    PieriFamily& operator=(const PieriFamily& other) {
        if (this == &other) return *this;
        std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
        g_ = other.g_;
        kind_ = other.kind_;
        qm_ = other.qm_;
        qp_ = other.qp_;
        scale_ = other.scale_;
        cache_ = other.cache_;
        return *this;
    }

    // The same operators scaled by s per degree.
    PieriFamily halved(const Rational& s = Rational(1, 2)) const {
        PieriFamily f = *this;
        f.scale_ *= s;
        f.cache_.clear();
        return f;
    }

    const LabelledReseau& reseau() const { return *g_; }
    PieriKind kind() const { return kind_; }
    const Rational& scale() const { return scale_; }

    bool has_operator(int k) const {
        return k >= 1 && (kind_ != PieriKind::Quantum || k <= qp_);
    }

    // x.h_k for a single vertex.  References into the cache stay valid for
    // the family's lifetime; fills are idempotent.
    const Lin<int>& apply_h(int x, int k) const {
        if (k <= 0) throw std::invalid_argument("pieri operators have positive degree");
        if (kind_ == PieriKind::Quantum && k > qp_)
            throw std::domain_error("quantum operators are defined for k <= p");
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = cache_.find({x, k});
            if (it != cache_.end()) return it->second;
        }
        Lin<int> out;
        if (kind_ == PieriKind::RankSelection) {
            for (int y = 0; y < g_->size(); ++y)
                if (g_->count_paths(x, y, k) > 0) add_term(out, y, scale_);
        } else {
            for (const Chain& ch : chains_with_condition(x, k))
                add_term(out, ch.end(), scale_ * ch.mult());
        }
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return cache_.emplace(std::make_pair(x, k), std::move(out)).first->second;
    }

    Lin<int> apply_h(const Lin<int>& v, int k) const {
        Lin<int> out;
        for (const auto& [x, c] : v)
            for (const auto& [y, cy] : apply_h(x, k)) add_term(out, y, c * cy);
        return out;
    }

    // x.S^alpha = x.h_{a_1}...h_{a_l}, applied left to right.
    Lin<int> apply_word(int x, const Composition& alpha) const {
        Lin<int> v = lin_unit(x);
        for (int i = 0; i < alpha.length(); ++i) v = apply_h(v, alpha.part(i));
        return v;
    }

    // The chains of length k out of x whose labels satisfy the kind's
    // condition (all chains for the unconditioned kinds).
    std::vector<Chain> chains_with_condition(int x, int k) const {
        std::vector<Chain> all;
        Chain cur{g_, x, {}};
        int label_cap = kind_ == PieriKind::Quantum ? quantum_label_cap(x) : 0;
        auto rec = [&](auto&& self, int v, int left, int last_label) -> void {
            if (left == 0) {
                all.push_back(cur);
                return;
            }
            for (int e : g_->out_edges(v)) {
                const ReseauEdge& ed = g_->edges()[static_cast<size_t>(e)];
                if (!label_ok(last_label, ed.label, cur.length(), label_cap)) continue;
                cur.edge_indices.push_back(e);
                self(self, ed.to, left - 1, ed.label);
                cur.edge_indices.pop_back();
            }
        };
        rec(rec, x, k, 0);
        return all;
    }

private:
    PieriFamily(const LabelledReseau& g, PieriKind kind) : g_(&g), kind_(kind) {}

    bool label_ok(int last, int next, int pos, int label_cap) const {
        switch (kind_) {
            case PieriKind::RankSelection:
            case PieriKind::PathCount:
                return true;
            case PieriKind::Descent:
                return pos == 0 || last <= next;
            case PieriKind::ModifiedDescent:
                if (next == 0) throw std::invalid_argument("modified descent needs nonzero labels");
                return pos == 0 || last < next || (last == next && next > 0);
            case PieriKind::Quantum:
                return next < label_cap && (pos == 0 || last <= next);
        }
        return false;
    }

    // Labels of one multiplication stay below (first start entry) + m + p;
    // the start sequence is read off the vertex id.
    int quantum_label_cap(int x) const {
        const std::string& id = g_->id(x);
        size_t open = id.find('(');
        size_t stop = id.find_first_of(",)", open + 1);
        if (open == std::string::npos || stop == std::string::npos)
            throw std::invalid_argument("quantum family needs sequence vertex ids");
        return std::stoi(id.substr(open + 1, stop - open - 1)) + qm_ + qp_;
    }

    const LabelledReseau* g_;
    PieriKind kind_;
    int qm_ = 0, qp_ = 0;
    Rational scale_ = 1;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<int, int>, Lin<int>> cache_;
};

namespace detail {

inline int interval_length(const PieriFamily& f, int x, int y, std::optional<int> r) {
    if (r) {
        if (*r < 0) throw std::invalid_argument("interval length must be >= 0");
        return *r;
    }
    const LabelledReseau& g = f.reseau();
    if (!g.ranked())
        throw std::invalid_argument("interval length is required on an unranked reseau");
    return g.rank(y) - g.rank(x);
}

}  // namespace detail

// K of the graded interval [x,y]^(r): the degree-r component of the Cauchy
// evaluation, sum over compositions alpha of r of <x.S^alpha, y> M_alpha.
// On a ranked reseau r defaults to the rank difference.  x = y with r = 0
// yields the unit; vertices joined by no chains yield zero.
inline QSymElem kfunction(const PieriFamily& f, int x, int y, std::optional<int> r = {}) {
    int length = detail::interval_length(f, x, y, r);
    if (length < 0) return qsym_zero();
    QSymElem out{QBasis::M, {}};
    std::vector<int> prefix;
    auto rec = [&](auto&& self, const Lin<int>& v, int remaining) -> void {
        if (remaining == 0) {
            auto it = v.find(y);
            if (it != v.end()) add_term(out.coeffs, Composition(prefix), it->second);
            return;
        }
        if (v.empty()) return;
        for (int k = 1; k <= remaining; ++k) {
            if (!f.has_operator(k)) continue;
            prefix.push_back(k);
            self(self, f.apply_h(v, k), remaining - k);
            prefix.pop_back();
        }
    };
    rec(rec, lin_unit(x), length);
    return out;
}

inline QSymElem kfunction(const PieriFamily& f, const std::string& x, const std::string& y,
                          std::optional<int> r = {}) {
    return kfunction(f, f.reseau().vertex_checked(x), f.reseau().vertex_checked(y), r);
}

// The chain expansion of K for descent families:
//   K_{[x,y]} = sum over saturated chains of F_{D(omega)},
// with the descent set taken under the family's rule.  This is the second
// evaluation route; it must agree with the Cauchy route.
inline QSymElem kfunction_chains(const PieriFamily& f, int x, int y, std::optional<int> r = {}) {
    if (f.kind() != PieriKind::Descent && f.kind() != PieriKind::ModifiedDescent)
        throw std::invalid_argument("chain formula applies to descent-type families");
    int length = detail::interval_length(f, x, y, r);
    if (length < 0) return qsym_zero();
    // Each operator application contributes one factor of the family scale.
    Rational s = 1;
    for (int i = 0; i < length; ++i) s *= f.scale();
    QSymElem out{QBasis::M, {}};
    for (const Chain& ch : chains(f.reseau(), x, y, length)) {
        std::vector<int> labels = ch.labels();
        Composition d = f.kind() == PieriKind::Descent ? descent_composition(labels)
                                                       : modified_descent_composition(labels);
        out = qsym_add(out, to_monomial(fundamental(d, s * ch.mult())));
    }
    return out;
}

// Peak enumerator of a positively labelled poset: the sum of
// theta_{Lambda(omega)} over saturated chains of [x,y].
inline QSymElem peak_kfunction(const LabelledReseau& g, int x, int y, std::optional<int> r = {}) {
    for (const ReseauEdge& e : g.edges())
        if (e.label <= 0) throw std::invalid_argument("peak enumerator needs positive labels");
    int length;
    if (r) {
        length = *r;
        if (length < 0) throw std::invalid_argument("interval length must be >= 0");
    } else {
        if (!g.ranked())
            throw std::invalid_argument("interval length is required on an unranked reseau");
        length = g.rank(y) - g.rank(x);
        if (length < 0) return qsym_zero();
    }
    QSymElem out{QBasis::M, {}};
    for (const Chain& ch : chains(g, x, y, length))
        out = qsym_add(out, qsym_scale(theta(peak_composition(ch.labels())), ch.mult()));
    return out;
}

inline QSymElem peak_kfunction(const LabelledReseau& g, const std::string& x,
                               const std::string& y, std::optional<int> r = {}) {
    return peak_kfunction(g, g.vertex_checked(x), g.vertex_checked(y), r);
}

// h_a h_b = h_b h_a for all a + b <= degree_bound (over the degrees the
// family defines).
inline bool is_symmetric(const PieriFamily& f, int degree_bound) {
    for (int a = 1; a <= degree_bound; ++a)
        for (int b = a + 1; a + b <= degree_bound; ++b) {
            if (!f.has_operator(a) || !f.has_operator(b)) continue;
            for (int x = 0; x < f.reseau().size(); ++x) {
                Lin<int> ab = f.apply_h(f.apply_h(x, a), b);
                Lin<int> ba = f.apply_h(f.apply_h(x, b), a);
                if (ab != ba) return false;
            }
        }
    return true;
}

// The even Euler relations for the rescaled operators c_k h_k:
//   sum_{i+j=2n} (-1)^i (c_i h_i)(c_j h_j) = 0,  c_0 h_0 = id,
// as operator identities for all 2n <= degree_bound.  `scalars[k-1]` is c_k;
// missing entries default to 1.
inline bool is_eulerian(const PieriFamily& f, const std::vector<Rational>& scalars,
                        int degree_bound) {
    auto scalar = [&](int k) {
        return k == 0                                   ? Rational(1)
               : k <= static_cast<int>(scalars.size()) ? scalars[static_cast<size_t>(k) - 1]
                                                        : Rational(1);
    };
    for (int two_n = 2; two_n <= degree_bound; two_n += 2) {
        for (int x = 0; x < f.reseau().size(); ++x) {
            Lin<int> acc;
            for (int i = 0; i <= two_n; ++i) {
                int j = two_n - i;
                if (i > 0 && !f.has_operator(i)) continue;
                if (j > 0 && !f.has_operator(j)) continue;
                Lin<int> v = lin_unit(x);
                if (i > 0) v = f.apply_h(v, i);
                if (j > 0) v = f.apply_h(v, j);
                Rational c = scalar(i) * scalar(j);
                if (i % 2) c = -c;
                for (const auto& [k, cv] : v) add_term(acc, k, c * cv);
            }
            if (!acc.empty()) return false;
        }
    }
    return true;
}

inline bool is_eulerian(const PieriFamily& f, int degree_bound) {
    return is_eulerian(f, {}, degree_bound);
}

// K of a formal product of intervals, computed factorwise and multiplied in
// QSym.  All factors must live on the family's reseau.
inline QSymElem hp_kfunction(const PieriFamily& f, const IntervalProduct& a) {
    QSymElem out = qsym_one();
    for (const IntervalFactor& fac : a.factors()) {
        if (fac.g != &f.reseau())
            throw std::invalid_argument("interval product factor on a different reseau");
        out = qsym_product(out, kfunction(f, fac.x, fac.y, fac.r));
    }
    return out;
}

inline QSymElem hp_kfunction(const PieriFamily& f, const HPElem& a) {
    QSymElem out = qsym_zero();
    for (const auto& [k, c] : a) out = qsym_add(out, qsym_scale(hp_kfunction(f, k), c));
    return out;
}

}  // namespace qspieri
