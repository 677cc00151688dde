#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qspieri/composition.hpp"
#include "qspieri/permutation.hpp"
#include "qspieri/pieri.hpp"
#include "qspieri/reseau.hpp"

namespace qspieri {

// ---------------------------------------------------------------------------
// Boolean lattices and chains

inline std::string subset_id(unsigned mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i)
        if (mask & (1u << (i - 1))) {
            if (!first) s += ',';
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

// Subsets of {1..n} ordered by inclusion; the cover S < S + {i} is labelled i.
inline LabelledReseau boolean_lattice(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("boolean lattice size out of range");
    LabelledReseau::Builder b;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        b.add_vertex(subset_id(mask, n), __builtin_popcount(mask));
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        for (int i = 1; i <= n; ++i)
            if (!(mask & (1u << (i - 1))))
                b.add_edge(subset_id(mask, n), subset_id(mask | (1u << (i - 1)), n), i);
    return std::move(b).build();
}

// A chain with n vertices c0 < c1 < ... and increasing labels 1, 2, ...
inline LabelledReseau chain_poset(int n) {
    if (n < 1) throw std::invalid_argument("chain needs at least one vertex");
    LabelledReseau::Builder b;
    for (int i = 0; i < n; ++i) b.add_vertex("c" + std::to_string(i), i);
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge("c" + std::to_string(i), "c" + std::to_string(i + 1), i + 1);
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Young's lattice

inline std::vector<Partition> partition_covers_above(const Partition& mu, const Partition& bound) {
    std::vector<Partition> out;
    for (int row = 0; row <= mu.length(); ++row) {
        // add one box at the end of `row`
        if (row < mu.length() && row > 0 && mu.part(row) == mu.part(row - 1)) continue;
        std::vector<int> v = mu.parts();
        if (row == mu.length())
            v.push_back(1);
        else
            ++v[static_cast<size_t>(row)];
        Partition lam(v);
        if (bound.contains(lam)) out.push_back(lam);
    }
    return out;
}

// content of the box added when passing from mu to lambda (one-box cover)
inline int added_box_content(const Partition& mu, const Partition& lambda) {
    for (int row = 0; row < lambda.length(); ++row)
        if (lambda.part(row) != mu.part(row)) return lambda.part(row) - 1 - row;
    throw std::invalid_argument("not a one-box cover");
}

// The interval [mu, bound] of Young's lattice with covers labelled by the
// content of the added box.
inline LabelledReseau young_interval(const Partition& mu, const Partition& bound) {
    if (!bound.contains(mu)) throw std::invalid_argument("young interval needs mu inside bound");
    std::set<Partition> verts;
    std::vector<Partition> frontier{mu};
    verts.insert(mu);
    while (!frontier.empty()) {
        std::vector<Partition> next;
        for (const Partition& nu : frontier)
            for (const Partition& lam : partition_covers_above(nu, bound))
                if (verts.insert(lam).second) next.push_back(lam);
        frontier = std::move(next);
    }
    LabelledReseau::Builder b;
    for (const Partition& nu : verts) b.add_vertex(nu.str(), nu.weight());
    for (const Partition& nu : verts)
        for (const Partition& lam : partition_covers_above(nu, bound))
            if (verts.count(lam)) b.add_edge(nu.str(), lam.str(), added_box_content(nu, lam));
    return std::move(b).build();
}

// All partitions of weight <= n, as a finite truncation of Young's lattice.
inline LabelledReseau young_lattice_upto(int n) {
    LabelledReseau::Builder b;
    std::vector<Partition> verts;
    for (int w = 0; w <= n; ++w)
        for (const Partition& p : partitions_of(w)) verts.push_back(p);
    for (const Partition& p : verts) b.add_vertex(p.str(), p.weight());
    for (const Partition& p : verts) {
        if (p.weight() == n) continue;
        for (int row = 0; row <= p.length(); ++row) {
            if (row < p.length() && row > 0 && p.part(row) == p.part(row - 1)) continue;
            std::vector<int> v = p.parts();
            if (row == p.length())
                v.push_back(1);
            else
                ++v[static_cast<size_t>(row)];
            Partition lam(v);
            b.add_edge(p.str(), lam.str(), added_box_content(p, lam));
        }
    }
    return std::move(b).build();
}

// Horizontal strips: the on-demand form of the descent operators on Young's
// lattice.  mu.h_k sums the partitions lambda containing mu with
// |lambda| - |mu| = k and lambda/mu a horizontal strip (no two added boxes in
// one column).
inline std::vector<Partition> horizontal_strips_above(const Partition& mu, int k) {
    // lambda/mu is a horizontal strip iff the shapes interlace:
    // mu_i <= lambda_i and lambda_{i+1} <= mu_i.
    std::vector<Partition> out;
    int rows = mu.length() + 1;
    std::vector<int> lam(static_cast<size_t>(rows), 0);
    auto rec = [&](auto&& self, int row, int rem) -> void {
        if (row == rows) {
            if (rem == 0) {
                std::vector<int> parts(lam.begin(), lam.end());
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                out.push_back(Partition(parts));
            }
            return;
        }
        int lo = mu.part(row);
        int hi = row == 0 ? mu.part(0) + rem : std::min(mu.part(row - 1), mu.part(row) + rem);
        for (int v = lo; v <= hi; ++v) {
            lam[static_cast<size_t>(row)] = v;
            self(self, row + 1, rem - (v - lo));
        }
    };
    rec(rec, 0, k);
    return out;
}

// ---------------------------------------------------------------------------
// Weak order and k-Bruhat order on the symmetric group

inline LabelledReseau weak_order_sn(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("weak order guard: 1 <= n <= 6");
    std::vector<Permutation> elems = all_permutations(n);
    LabelledReseau::Builder b;
    for (const Permutation& w : elems) b.add_vertex(w.str(), w.length());
    for (const Permutation& w : elems)
        for (int i = 1; i < n; ++i) {
            Permutation ws = w.compose(Permutation::transposition(n, i, i + 1));
            if (ws.length() == w.length() + 1) b.add_edge(w.str(), ws.str(), i);
        }
    return std::move(b).build();
}

// Covers u < w with l(u)+1 = l(w) and u^{-1} w = (i, j), i <= k < j, labelled
// with b where w u^{-1} = (a, b), a < b.
inline LabelledReseau k_bruhat_sn(int n, int k) {
    if (n < 1 || n > 6) throw std::invalid_argument("k-Bruhat guard: 1 <= n <= 6");
    if (k < 1 || k >= n) throw std::invalid_argument("k-Bruhat needs 1 <= k < n");
    std::vector<Permutation> elems = all_permutations(n);
    LabelledReseau::Builder b;
    for (const Permutation& u : elems) b.add_vertex(u.str(), u.length());
    for (const Permutation& u : elems)
        for (int i = 1; i <= k; ++i)
            for (int j = k + 1; j <= n; ++j) {
                Permutation w = u.compose(Permutation::transposition(n, i, j));
                if (w.length() == u.length() + 1)
                    b.add_edge(u.str(), w.str(), std::max(u(i), u(j)));
            }
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Finite posets with vertex labels; ideal lattices and P-partitions

// A finite strict partial order on {0..n-1} given by its full relation
// matrix.  gamma is a positive vertex labelling.
struct FinitePoset {
    int n = 0;
    std::vector<std::vector<bool>> less;  // less[x][y] : x < y

    bool valid() const {
        if (static_cast<int>(less.size()) != n) return false;
        for (int x = 0; x < n; ++x) {
            if (static_cast<int>(less[static_cast<size_t>(x)].size()) != n) return false;
            if (less[static_cast<size_t>(x)][static_cast<size_t>(x)]) return false;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (less[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
                    less[static_cast<size_t>(y)][static_cast<size_t>(x)])
                    return false;
                for (int z = 0; z < n; ++z)
                    if (less[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
                        less[static_cast<size_t>(y)][static_cast<size_t>(z)] &&
                        !less[static_cast<size_t>(x)][static_cast<size_t>(z)])
                        return false;
            }
        return true;
    }

    bool covers(int x, int y) const {  // y covers x
        if (!less[static_cast<size_t>(x)][static_cast<size_t>(y)]) return false;
        for (int z = 0; z < n; ++z)
            if (less[static_cast<size_t>(x)][static_cast<size_t>(z)] &&
                less[static_cast<size_t>(z)][static_cast<size_t>(y)])
                return false;
        return true;
    }
};

inline FinitePoset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    FinitePoset p;
    p.n = n;
    p.less.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (auto [x, y] : covers) p.less[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (p.less[static_cast<size_t>(x)][static_cast<size_t>(k)] &&
                    p.less[static_cast<size_t>(k)][static_cast<size_t>(y)])
                    p.less[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
    if (!p.valid()) throw std::invalid_argument("covers do not define a poset");
    return p;
}

inline std::string ideal_id(unsigned mask, int n) { return subset_id(mask, n); }

// The lattice of lower order ideals ordered by inclusion, with the cover
// I < I + {x} labelled gamma(x).
inline LabelledReseau ideal_lattice(const FinitePoset& p, const std::vector<int>& gamma) {
    if (static_cast<int>(gamma.size()) != p.n)
        throw std::invalid_argument("gamma must label every element");
    for (int g : gamma)
        if (g < 1) throw std::invalid_argument("gamma must be positive");
    auto is_ideal = [&](unsigned mask) {
        for (int x = 0; x < p.n; ++x)
            for (int y = 0; y < p.n; ++y)
                if ((mask & (1u << y)) && p.less[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
                    !(mask & (1u << x)))
                    return false;
        return true;
    };
    std::vector<unsigned> ideals;
    for (unsigned mask = 0; mask < (1u << p.n); ++mask)
        if (is_ideal(mask)) ideals.push_back(mask);
    std::sort(ideals.begin(), ideals.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    LabelledReseau::Builder b;
    for (unsigned mask : ideals) b.add_vertex(ideal_id(mask, p.n), __builtin_popcount(mask));
    std::set<unsigned> ideal_set(ideals.begin(), ideals.end());
    for (unsigned mask : ideals)
        for (int x = 0; x < p.n; ++x)
            if (!(mask & (1u << x)) && ideal_set.count(mask | (1u << x)))
                b.add_edge(ideal_id(mask, p.n), ideal_id(mask | (1u << x), p.n),
                           gamma[static_cast<size_t>(x)]);
    return std::move(b).build();
}

inline std::vector<std::vector<int>> linear_extensions(const FinitePoset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(static_cast<size_t>(p.n), false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == p.n) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x < p.n; ++x) {
            if (used[static_cast<size_t>(x)]) continue;
            bool minimal = true;
            for (int y = 0; y < p.n; ++y)
                if (!used[static_cast<size_t>(y)] &&
                    p.less[static_cast<size_t>(y)][static_cast<size_t>(x)])
                    minimal = false;
            if (!minimal) continue;
            used[static_cast<size_t>(x)] = true;
            cur.push_back(x);
            self(self);
            cur.pop_back();
            used[static_cast<size_t>(x)] = false;
        }
    };
    rec(rec);
    return out;
}

// Brute-force weight enumerator of (P, gamma)-partitions truncated to
// z_1..z_nvars: order-preserving f with f(x) < f(y) along covers where
// gamma descends.
inline Lin<std::vector<int>> p_partition_enumerator(const FinitePoset& p,
                                                    const std::vector<int>& gamma, int nvars) {
    if (nvars < 1 || nvars > 6) throw std::invalid_argument("p-partition guard: 1 <= nvars <= 6");
    std::vector<std::pair<int, int>> cov;
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (p.covers(x, y)) cov.emplace_back(x, y);
    Lin<std::vector<int>> out;
    std::vector<int> f(static_cast<size_t>(p.n), 1);
    while (true) {
        bool ok = true;
        for (auto [x, y] : cov) {
            if (f[static_cast<size_t>(x)] > f[static_cast<size_t>(y)] ||
                (gamma[static_cast<size_t>(x)] > gamma[static_cast<size_t>(y)] &&
                 f[static_cast<size_t>(x)] >= f[static_cast<size_t>(y)])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> expo(static_cast<size_t>(nvars), 0);
            for (int x = 0; x < p.n; ++x) ++expo[static_cast<size_t>(f[static_cast<size_t>(x)]) - 1];
            add_term(out, expo, Rational(1));
        }
        int pos = 0;
        while (pos < p.n && f[static_cast<size_t>(pos)] == nvars) f[static_cast<size_t>(pos++)] = 1;
        if (pos == p.n) break;
        ++f[static_cast<size_t>(pos)];
    }
    return out;
}

// Enriched (P, gamma)-partitions into {1-, 1, 2-, 2, ...} truncated at nvars
// values; encoding v = 1..2*nvars with odd v = barred (k-), even v = plain k.
inline Lin<std::vector<int>> enriched_enumerator(const FinitePoset& p,
                                                 const std::vector<int>& gamma, int nvars) {
    if (nvars < 1 || nvars > 6) throw std::invalid_argument("p-partition guard: 1 <= nvars <= 6");
    std::vector<std::pair<int, int>> cov;
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (p.covers(x, y)) cov.emplace_back(x, y);
    Lin<std::vector<int>> out;
    int top = 2 * nvars;
    std::vector<int> f(static_cast<size_t>(p.n), 1);
    while (true) {
        bool ok = true;
        for (auto [x, y] : cov) {
            int a = f[static_cast<size_t>(x)], b = f[static_cast<size_t>(y)];
            if (a > b) { ok = false; break; }
            if (a == b) {
                // equal barred values force gamma to descend, equal unbarred
                // values force it to ascend (the convention under which the
                // doubled-reseau theorem holds)
                bool barred = (a % 2 == 1);
                if (barred && !(gamma[static_cast<size_t>(x)] > gamma[static_cast<size_t>(y)])) {
                    ok = false;
                    break;
                }
                if (!barred && !(gamma[static_cast<size_t>(x)] < gamma[static_cast<size_t>(y)])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            std::vector<int> expo(static_cast<size_t>(nvars), 0);
            for (int x = 0; x < p.n; ++x)
                ++expo[static_cast<size_t>((f[static_cast<size_t>(x)] + 1) / 2) - 1];
            add_term(out, expo, Rational(1));
        }
        int pos = 0;
        while (pos < p.n && f[static_cast<size_t>(pos)] == top) f[static_cast<size_t>(pos++)] = 1;
        if (pos == p.n) break;
        ++f[static_cast<size_t>(pos)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weak orders of types B and D; the 0-Bruhat order

// Covers w < w s_i with label i+1.
inline LabelledReseau weak_order_bn(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("type B guard: 1 <= n <= 4");
    std::vector<SignedPermutation> elems = all_signed_permutations(n);
    LabelledReseau::Builder b;
    for (const SignedPermutation& w : elems) b.add_vertex(w.str(), bn_length(w));
    for (const SignedPermutation& w : elems)
        for (int i = 0; i < n; ++i) {
            SignedPermutation ws = w.compose(bn_simple_reflection(n, i));
            if (bn_length(ws) == bn_length(w) + 1) b.add_edge(w.str(), ws.str(), i + 1);
        }
    return std::move(b).build();
}

// Covers w < w s_i labelled by i under the order 1^ < 1 < 2 < ...; the label
// alphabet is encoded as 1^ -> 1, 1 -> 2, i -> i+1 for i >= 2, which
// preserves that order.
inline LabelledReseau weak_order_dn(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("type D guard: 2 <= n <= 4");
    std::vector<SignedPermutation> elems = all_even_signed_permutations(n);
    LabelledReseau::Builder b;
    for (const SignedPermutation& w : elems) b.add_vertex(w.str(), dn_length(w));
    for (const SignedPermutation& w : elems)
        for (int i = 0; i < n; ++i) {
            SignedPermutation ws = w.compose(dn_simple_reflection(n, i));
            if (dn_length(ws) == dn_length(w) + 1) b.add_edge(w.str(), ws.str(), i + 1);
        }
    return std::move(b).build();
}

// The 0-Bruhat order: covers u < w with l(u)+1 = l(w) and u^{-1} w a sign
// change or a rotation, labelled beta from w u^{-1}.  Covers coming from a
// left sign change (beta-, beta) are recorded so the symplectic reseau can
// erase their negative twins.
struct ZeroBruhatPoset {
    LabelledReseau reseau;
    std::set<std::pair<int, int>> sign_change_covers;  // (from, to) vertex indices
};

inline ZeroBruhatPoset zero_bruhat_bn(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("type B guard: 1 <= n <= 4");
    std::vector<SignedPermutation> elems = all_signed_permutations(n);
    std::vector<SignedPermutation> refl = zero_bruhat_reflections(n);
    LabelledReseau::Builder b;
    for (const SignedPermutation& u : elems) b.add_vertex(u.str(), bn_length(u));
    struct Cover {
        std::string from, to;
        int label;
        bool sign_change;
    };
    std::vector<Cover> covers;
    for (const SignedPermutation& u : elems)
        for (const SignedPermutation& t : refl) {
            SignedPermutation w = u.compose(t);
            if (bn_length(w) != bn_length(u) + 1) continue;
            LeftReflection lr = classify_left_reflection(w.compose(u.inverse()));
            covers.push_back(Cover{u.str(), w.str(), lr.label, lr.is_sign_change});
            b.add_edge(u.str(), w.str(), lr.label);
        }
    LabelledReseau g = std::move(b).build();
    ZeroBruhatPoset out{std::move(g), {}};
    for (const Cover& c : covers)
        if (c.sign_change)
            out.sign_change_covers.insert({out.reseau.vertex_checked(c.from),
                                           out.reseau.vertex_checked(c.to)});
    return out;
}

// The symplectic reseau: doubled 0-Bruhat order with the negative twin of
// each sign-change cover erased.
inline LabelledReseau lbn_zero_bruhat(const ZeroBruhatPoset& zb) {
    LabelledReseau doubled = double_reseau(zb.reseau);
    return erase_negative(doubled, [&](const LabelledReseau&, const ReseauEdge& e) {
        return zb.sign_change_covers.count({e.from, e.to}) > 0;
    });
}

// Type C weak-order reseau: doubled type B weak order with negative twins of
// the s_0 covers (label 1) erased.
inline LabelledReseau lbn_weak_order(int n) {
    return erase_negative(double_reseau(weak_order_bn(n)),
                          [](const LabelledReseau&, const ReseauEdge& e) { return e.label == 1; });
}

// Type D reseau: negative twins of the s_1^ and s_1 covers (encoded labels 1
// and 2) erased.
inline LabelledReseau ldn_weak_order(int n) {
    return erase_negative(double_reseau(weak_order_dn(n)),
                          [](const LabelledReseau&, const ReseauEdge& e) {
                              return e.label == 1 || e.label == 2;
                          });
}

// Label words of all saturated chains from x to y; in a weak order these are
// the reduced words.
inline std::vector<std::vector<int>> chain_words(const LabelledReseau& g, int x, int y) {
    std::vector<std::vector<int>> out;
    for (const Chain& ch : chains(g, x, y, g.rank(y) - g.rank(x))) out.push_back(ch.labels());
    return out;
}

// ---------------------------------------------------------------------------
// The quantum poset C_{m,p}

inline std::string sequence_id(const std::vector<int>& seq) {
    std::string s = "(";
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(seq[i]);
    }
    return s + ")";
}

inline bool valid_quantum_sequence(const std::vector<int>& a, int m, int p) {
    if (static_cast<int>(a.size()) != p) return false;
    if (a.front() < 1) return false;
    for (size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] >= a[i + 1]) return false;
    return a.back() - a.front() < m + p;
}

inline int quantum_rank(const std::vector<int>& a) {
    int r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] - (static_cast<int>(i) + 1);
    return r;
}

// Sequences 0 < a_1 < ... < a_p with a_p - a_1 < m + p, componentwise order,
// generated up to the rank bound.  The cover increasing position i is
// labelled with the new value.
inline LabelledReseau quantum_poset(int m, int p, int rank_bound) {
    if (m < 1 || p < 1) throw std::invalid_argument("quantum poset needs m, p >= 1");
    if (rank_bound < 0 || rank_bound > 12)
        throw std::invalid_argument("quantum poset guard: 0 <= rank bound <= 12");
    std::vector<int> base(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) base[static_cast<size_t>(i)] = i + 1;
    std::set<std::vector<int>> verts;
    std::vector<std::vector<int>> frontier{base};
    verts.insert(base);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& a : frontier) {
            if (quantum_rank(a) >= rank_bound) continue;
            for (int i = 0; i < p; ++i) {
                std::vector<int> bseq = a;
                ++bseq[static_cast<size_t>(i)];
                if (!valid_quantum_sequence(bseq, m, p)) continue;
                if (verts.insert(bseq).second) next.push_back(bseq);
            }
        }
        frontier = std::move(next);
    }
    LabelledReseau::Builder b;
    std::vector<std::vector<int>> ordered(verts.begin(), verts.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& c) {
        int ra = quantum_rank(a), rc = quantum_rank(c);
        return ra != rc ? ra < rc : a < c;
    });
    for (const auto& a : ordered) b.add_vertex(sequence_id(a), quantum_rank(a));
    for (const auto& a : ordered) {
        if (quantum_rank(a) >= rank_bound) continue;
        for (int i = 0; i < p; ++i) {
            std::vector<int> bseq = a;
            ++bseq[static_cast<size_t>(i)];
            if (valid_quantum_sequence(bseq, m, p) && verts.count(bseq))
                b.add_edge(sequence_id(a), sequence_id(bseq), bseq[static_cast<size_t>(i)]);
        }
    }
    return std::move(b).build();
}

// (a, lambda) -> sequence: the residues lambda_j + (p + 1 - j) are strictly
// decreasing in [1, m+p]; the sequence consists of one representative per
// residue class, shifted so the total matches a, and sorted increasingly.
inline std::vector<int> quantum_index_to_sequence(int a, const Partition& lambda, int m, int p) {
    if (a < 0) throw std::invalid_argument("q-degree must be >= 0");
    if (lambda.length() > p || (lambda.length() > 0 && lambda.part(0) > m))
        throw std::invalid_argument("partition must fit in a p x m box");
    std::vector<int> res(static_cast<size_t>(p));
    for (int j = 1; j <= p; ++j) res[static_cast<size_t>(j) - 1] = lambda.part(j - 1) + (p + 1 - j);
    std::sort(res.begin(), res.end());  // ascending
    int target = 0;
    for (int j = 1; j <= p; ++j) target += lambda.part(j - 1) + j;
    target += a * (m + p);
    int base = 0;
    for (int r : res) base += r;
    int diff = target - base;
    if (diff < 0 || diff % (m + p) != 0)
        throw std::invalid_argument("inconsistent quantum index");
    int q = diff / (m + p);
    int c = q / p, t = q % p;
    // the t smallest residues get one extra period
    std::vector<int> seq;
    for (int j = 0; j < p; ++j)
        seq.push_back(res[static_cast<size_t>(j)] + (m + p) * (c + (j < t ? 1 : 0)));
    std::sort(seq.begin(), seq.end());
    if (!valid_quantum_sequence(seq, m, p)) throw std::invalid_argument("inconsistent quantum index");
    return seq;
}

inline std::pair<int, Partition> quantum_sequence_to_index(const std::vector<int>& seq, int m,
                                                           int p) {
    if (!valid_quantum_sequence(seq, m, p)) throw std::invalid_argument("invalid quantum sequence");
    std::vector<int> res;
    for (int v : seq) res.push_back(((v - 1) % (m + p)) + 1);
    std::sort(res.begin(), res.end(), std::greater<int>());
    std::vector<int> lam;
    for (int j = 1; j <= p; ++j) {
        int l = res[static_cast<size_t>(j) - 1] - (p + 1 - j);
        if (l < 0 || l > m) throw std::invalid_argument("invalid quantum sequence");
        if (l > 0) lam.push_back(l);
    }
    for (size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) throw std::invalid_argument("invalid quantum sequence");
    Partition lambda(lam);
    int total = 0;
    for (int j = 1; j <= p; ++j) total += seq[static_cast<size_t>(j) - 1] - lambda.part(j - 1) - j;
    if (total < 0 || total % (m + p) != 0) throw std::invalid_argument("invalid quantum sequence");
    return {total / (m + p), lambda};
}

// ---------------------------------------------------------------------------
// Stanley symmetric functions of types B, C, D

inline QSymElem stanley_b(const SignedPermutation& w) {
    int n = w.size();
    LabelledReseau delta = double_reseau(weak_order_bn(n));
    PieriFamily f = PieriFamily::modified_descent(delta);
    return kfunction(f, SignedPermutation::identity(n).str(), w.str());
}

inline QSymElem stanley_c(const SignedPermutation& w) {
    int n = w.size();
    LabelledReseau lb = lbn_weak_order(n);
    PieriFamily f = PieriFamily::modified_descent(lb);
    return kfunction(f, SignedPermutation::identity(n).str(), w.str());
}

inline QSymElem stanley_d(const SignedPermutation& w) {
    int n = w.size();
    LabelledReseau ld = ldn_weak_order(n);
    PieriFamily f = PieriFamily::modified_descent(ld);
    return kfunction(f, SignedPermutation::identity(n).str(), w.str());
}

}  // namespace qspieri
