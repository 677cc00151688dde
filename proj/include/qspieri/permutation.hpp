#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspieri {

// Permutations of {1..n} in one-line (window) notation.  Composition is
// (u*v)(i) = u(v(i)), so right multiplication by the transposition (i,j)
// swaps the window entries at positions i and j.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> window) : w_(std::move(window)) {
        std::vector<bool> seen(w_.size(), false);
        for (int v : w_) {
            if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<size_t>(v) - 1])
                throw std::invalid_argument("not a permutation window");
            seen[static_cast<size_t>(v) - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_.at(static_cast<size_t>(i) - 1); }
    const std::vector<int>& window() const { return w_; }

    Permutation compose(const Permutation& v) const {
        std::vector<int> w(w_.size());
        for (int i = 1; i <= size(); ++i) w[static_cast<size_t>(i) - 1] = (*this)(v(i));
        return Permutation(std::move(w));
    }

    Permutation inverse() const {
        std::vector<int> w(w_.size());
        for (int i = 1; i <= size(); ++i) w[static_cast<size_t>((*this)(i)) - 1] = i;
        return Permutation(std::move(w));
    }

    static Permutation transposition(int n, int i, int j) {
        Permutation t = identity(n);
        std::swap(t.w_[static_cast<size_t>(i) - 1], t.w_[static_cast<size_t>(j) - 1]);
        return t;
    }

    // Coxeter length = number of inversions of the window.
    int length() const {
        int inv = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (w_[static_cast<size_t>(i)] > w_[static_cast<size_t>(j)]) ++inv;
        return inv;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return std::lexicographical_compare_three_way(a.w_.begin(), a.w_.end(), b.w_.begin(),
                                                      b.w_.end());
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < w_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(w_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> w_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do out.push_back(Permutation(w));
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Signed permutations: windows (w(1),...,w(n)) of nonzero integers whose
// absolute values form a permutation of {1..n}.  They act on {-n..-1,1..n}
// with w(-i) = -w(i); composition is again (u*v)(i) = u(v(i)).
class SignedPermutation {
public:
    SignedPermutation() = default;

    explicit SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
        std::vector<bool> seen(w_.size(), false);
        for (int v : w_) {
            int a = std::abs(v);
            if (a < 1 || a > static_cast<int>(w_.size()) || seen[static_cast<size_t>(a) - 1])
                throw std::invalid_argument("not a signed permutation window");
            seen[static_cast<size_t>(a) - 1] = true;
        }
    }

    static SignedPermutation identity(int n) {
        std::vector<int> w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
        return SignedPermutation(std::move(w));
    }

    int size() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& window() const { return w_; }

    int operator()(int i) const {
        if (i > 0) return w_.at(static_cast<size_t>(i) - 1);
        if (i < 0) return -w_.at(static_cast<size_t>(-i) - 1);
        throw std::invalid_argument("signed permutations act on nonzero integers");
    }

    SignedPermutation compose(const SignedPermutation& v) const {
        std::vector<int> w(w_.size());
        for (int i = 1; i <= size(); ++i) w[static_cast<size_t>(i) - 1] = (*this)(v(i));
        return SignedPermutation(std::move(w));
    }

    SignedPermutation inverse() const {
        std::vector<int> w(w_.size());
        for (int i = 1; i <= size(); ++i) {
            int v = (*this)(i);
            if (v > 0)
                w[static_cast<size_t>(v) - 1] = i;
            else
                w[static_cast<size_t>(-v) - 1] = -i;
        }
        return SignedPermutation(std::move(w));
    }

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.w_ == b.w_;
    }
    friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                            const SignedPermutation& b) {
        return std::lexicographical_compare_three_way(a.w_.begin(), a.w_.end(), b.w_.begin(),
                                                      b.w_.end());
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < w_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(w_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> w_;
};

// Parses the window rendering "(a,b,...)" back into entries.
inline std::vector<int> parse_window(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("bad window: " + s);
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline int sign_changes(const SignedPermutation& w) {
    int s = 0;
    for (int v : w.window())
        if (v < 0) ++s;
    return s;
}

// Simple reflections of type B: s_0 flips the sign in position 1, s_i for
// i >= 1 swaps positions i, i+1.
inline SignedPermutation bn_simple_reflection(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("bad type B simple reflection index");
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = j + 1;
    if (i == 0)
        w[0] = -1;
    else
        std::swap(w[static_cast<size_t>(i) - 1], w[static_cast<size_t>(i)]);
    return SignedPermutation(std::move(w));
}

// Simple reflections of type D, indexed 0 for s_{1^} (the fork generator
// sending (w(1), w(2)) to (-w(2), -w(1))) and i >= 1 for the swap s_i.
inline SignedPermutation dn_simple_reflection(int n, int i) {
    if (i < 0 || i >= n || n < 2) throw std::invalid_argument("bad type D simple reflection index");
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = j + 1;
    if (i == 0) {
        w[0] = -2;
        w[1] = -1;
    } else {
        std::swap(w[static_cast<size_t>(i) - 1], w[static_cast<size_t>(i)]);
    }
    return SignedPermutation(std::move(w));
}

namespace detail {

// Breadth-first search from the identity over right multiplication by the
// given generators; the word length is the Coxeter length.
inline std::map<std::vector<int>, int> length_table(int n,
                                                    const std::vector<SignedPermutation>& gens) {
    std::map<std::vector<int>, int> dist;
    std::deque<SignedPermutation> queue;
    SignedPermutation e = SignedPermutation::identity(n);
    dist[e.window()] = 0;
    queue.push_back(e);
    while (!queue.empty()) {
        SignedPermutation w = queue.front();
        queue.pop_front();
        int d = dist[w.window()];
        for (const SignedPermutation& s : gens) {
            SignedPermutation ws = w.compose(s);
            if (dist.emplace(ws.window(), d + 1).second) queue.push_back(ws);
        }
    }
    return dist;
}

}  // namespace detail

inline int bn_length(const SignedPermutation& w) {
    static std::map<int, std::map<std::vector<int>, int>> cache;
    int n = w.size();
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<SignedPermutation> gens;
        for (int i = 0; i < n; ++i) gens.push_back(bn_simple_reflection(n, i));
        it = cache.emplace(n, detail::length_table(n, gens)).first;
    }
    auto jt = it->second.find(w.window());
    if (jt == it->second.end()) throw std::invalid_argument("window is not in the group");
    return jt->second;
}

inline int dn_length(const SignedPermutation& w) {
    static std::map<int, std::map<std::vector<int>, int>> cache;
    int n = w.size();
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<SignedPermutation> gens;
        for (int i = 0; i < n; ++i) gens.push_back(dn_simple_reflection(n, i));
        it = cache.emplace(n, detail::length_table(n, gens)).first;
    }
    auto jt = it->second.find(w.window());
    if (jt == it->second.end())
        throw std::invalid_argument("window is not in the type D group (even sign changes)");
    return jt->second;
}

inline std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> base(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i + 1;
    std::sort(base.begin(), base.end());
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> w = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
            out.push_back(SignedPermutation(std::move(w)));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline std::vector<SignedPermutation> all_even_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    for (const SignedPermutation& w : all_signed_permutations(n))
        if (sign_changes(w) % 2 == 0) out.push_back(w);
    return out;
}

// Reflections admitted as covers of the 0-Bruhat order, applied on the right:
// sign changes t_i : i -> -i, and rotations i -> -j, j -> -i for i < j.
inline std::vector<SignedPermutation> zero_bruhat_reflections(int n) {
    std::vector<SignedPermutation> out;
    for (int i = 1; i <= n; ++i) {
        SignedPermutation t = SignedPermutation::identity(n);
        std::vector<int> w = t.window();
        w[static_cast<size_t>(i) - 1] = -i;
        out.push_back(SignedPermutation(std::move(w)));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<int> w = SignedPermutation::identity(n).window();
            w[static_cast<size_t>(i) - 1] = -j;
            w[static_cast<size_t>(j) - 1] = -i;
            out.push_back(SignedPermutation(std::move(w)));
        }
    return out;
}

// Classifies t = w u^{-1} for a 0-Bruhat cover: either the sign change
// (beta-, beta), or the transposition pattern (beta-, alpha-)(alpha, beta)
// with 0 < alpha < beta.  Returns the label beta, with is_sign_change set
// accordingly.  Throws when t has neither shape.
struct LeftReflection {
    bool is_sign_change;
    int label;
};

inline LeftReflection classify_left_reflection(const SignedPermutation& t) {
    int n = t.size();
    std::vector<int> moved;
    for (int i = 1; i <= n; ++i)
        if (t(i) != i) moved.push_back(i);
    if (moved.size() == 1 && t(moved[0]) == -moved[0])
        return LeftReflection{true, moved[0]};
    if (moved.size() == 2) {
        int a = moved[0], b = moved[1];
        if (t(a) == b && t(b) == a) return LeftReflection{false, b};
    }
    throw std::invalid_argument("not a reflection of a 0-Bruhat cover");
}

}  // namespace qspieri
