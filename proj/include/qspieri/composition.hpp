#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspieri {

// A composition is a finite sequence of positive integers.  The empty
// sequence is the unique composition of 0.  Compositions index every graded
// basis in this library, so they are ordered values: the total order is
// length-lexicographic (fewer parts first, then lexicographic), which fixes
// the printed form of algebra elements.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); }
    int last() const { return parts_.back(); }

    Composition concat(const Composition& other) const {
        std::vector<int> v = parts_;
        v.insert(v.end(), other.parts_.begin(), other.parts_.end());
        return Composition(std::move(v));
    }

    // alpha^+ : last part increased by 1; the empty composition goes to (1).
    Composition plus_last() const {
        std::vector<int> v = parts_;
        if (v.empty())
            v.push_back(1);
        else
            ++v.back();
        return Composition(std::move(v));
    }

    // alpha . 1 : a new part of size 1 appended.
    Composition append_one() const {
        std::vector<int> v = parts_;
        v.push_back(1);
        return Composition(std::move(v));
    }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }

    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (a.parts_.size() != b.parts_.size())
            return a.parts_.size() <=> b.parts_.size();
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ')';
        return s;
    }

private:
    std::vector<int> parts_;
};

// A partition is a weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must weakly decrease");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // part(i) is 0 past the end, which makes containment checks uniform.
    int part(int i) const {
        return i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    // Inclusion of Young diagrams.
    bool contains(const Partition& mu) const {
        for (int i = 0; i < mu.length(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (a.parts_.size() != b.parts_.size())
            return a.parts_.size() <=> b.parts_.size();
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ')';
        return s;
    }

private:
    std::vector<int> parts_;
};

// Sorting the parts of a composition gives the partition it determines.
inline Partition partition_of(const Composition& alpha) {
    std::vector<int> v = alpha.parts();
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

// Subsets {j_1 < j_2 < ... < j_k} of [n-1] correspond to compositions of n
// via (j_1, j_2 - j_1, ..., n - j_k).
inline Composition composition_from_subset(int n, const std::vector<int>& subset) {
    if (n == 0) return Composition();
    std::vector<int> parts;
    int prev = 0;
    for (int j : subset) {
        if (j <= prev || j >= n) throw std::invalid_argument("subset must be strictly increasing inside [1,n-1]");
        parts.push_back(j - prev);
        prev = j;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

inline std::vector<int> subset_of_composition(const Composition& alpha) {
    std::vector<int> subset;
    int acc = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha.part(i);
        subset.push_back(acc);
    }
    return subset;
}

// All 2^{n-1} compositions of n (the single empty composition for n = 0).
inline std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> subset;
        for (int j = 1; j < n; ++j)
            if (mask & (1u << (j - 1))) subset.push_back(j);
        out.push_back(composition_from_subset(n, subset));
    }
    return out;
}

// beta refines alpha (beta <= alpha in refinement order) when consecutive
// blocks of beta sum to the parts of alpha in order.
inline bool refines(const Composition& beta, const Composition& alpha) {
    if (beta.weight() != alpha.weight()) return false;
    size_t bi = 0;
    for (int i = 0; i < alpha.length(); ++i) {
        int target = alpha.part(i);
        int acc = 0;
        while (acc < target) {
            if (bi >= beta.parts().size()) return false;
            acc += beta.parts()[bi++];
        }
        if (acc != target) return false;
    }
    return bi == beta.parts().size();
}

// All refinements of alpha: each part is split independently into a
// composition of that part, and the results are concatenated.
inline std::vector<Composition> refinements_of(const Composition& alpha) {
    std::vector<Composition> out{Composition()};
    for (int i = 0; i < alpha.length(); ++i) {
        std::vector<Composition> next;
        for (const Composition& prefix : out)
            for (const Composition& block : compositions_of(alpha.part(i)))
                next.push_back(prefix.concat(block));
        out = std::move(next);
    }
    return out;
}

// All coarsenings of alpha: group consecutive parts and sum each group.
inline std::vector<Composition> coarsenings_of(const Composition& alpha) {
    std::vector<Composition> out;
    int l = alpha.length();
    if (l == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        // bit j set: keep a boundary after part j (0-based)
        std::vector<int> parts;
        int acc = 0;
        for (int j = 0; j < l; ++j) {
            acc += alpha.part(j);
            bool boundary = (j == l - 1) || (mask & (1u << j));
            if (boundary) {
                parts.push_back(acc);
                acc = 0;
            }
        }
        out.push_back(Composition(std::move(parts)));
    }
    return out;
}

// beta* : every part beta_i > 1 with i > 1 is replaced by the pair
// (1, beta_i - 1); the first part is left untouched.
inline Composition star(const Composition& beta) {
    std::vector<int> parts;
    for (int i = 0; i < beta.length(); ++i) {
        int p = beta.part(i);
        if (i > 0 && p > 1) {
            parts.push_back(1);
            parts.push_back(p - 1);
        } else {
            parts.push_back(p);
        }
    }
    return Composition(std::move(parts));
}

// Descent set {i | b_i > b_{i+1}} of a word, 1-based positions.
inline std::vector<int> descent_set(const std::vector<int>& labels) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < labels.size(); ++i)
        if (labels[i] > labels[i + 1]) out.push_back(static_cast<int>(i + 1));
    return out;
}

inline Composition descent_composition(const std::vector<int>& labels) {
    return composition_from_subset(static_cast<int>(labels.size()), descent_set(labels));
}

// Descents of a signed word: b_i > b_{i+1}, or b_i = b_{i+1} < 0.
// Labels must be nonzero.
inline std::vector<int> modified_descent_set(const std::vector<int>& labels) {
    std::vector<int> out;
    for (int b : labels)
        if (b == 0) throw std::invalid_argument("modified descent rule needs nonzero labels");
    for (size_t i = 0; i + 1 < labels.size(); ++i)
        if (labels[i] > labels[i + 1] || (labels[i] == labels[i + 1] && labels[i] < 0))
            out.push_back(static_cast<int>(i + 1));
    return out;
}

inline Composition modified_descent_composition(const std::vector<int>& labels) {
    return composition_from_subset(static_cast<int>(labels.size()), modified_descent_set(labels));
}

// Peak set {i | 1 < i < n, b_{i-1} <= b_i > b_{i+1}}.  Words of length 1 and
// 2 have no peaks.
inline std::vector<int> peak_set(const std::vector<int>& labels) {
    std::vector<int> out;
    for (size_t i = 1; i + 1 < labels.size(); ++i)
        if (labels[i - 1] <= labels[i] && labels[i] > labels[i + 1])
            out.push_back(static_cast<int>(i + 1));
    return out;
}

inline Composition peak_composition(const std::vector<int>& labels) {
    return composition_from_subset(static_cast<int>(labels.size()), peak_set(labels));
}

// Peak compositions have every part > 1 except possibly the last; they are
// exactly the compositions arising as peak compositions of words.
inline bool is_peak_composition(const Composition& alpha) {
    for (int i = 0; i + 1 < alpha.length(); ++i)
        if (alpha.part(i) < 2) return false;
    return true;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

}  // namespace qspieri
