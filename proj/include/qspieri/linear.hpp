#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "qspieri/rational.hpp"

namespace qspieri {

// Finitely supported linear combinations over an ordered key type.  The zero
// coefficient is never stored, so equality of maps is equality of elements.
template <class K>
using Lin = std::map<K, Rational>;

template <class K>
using Lin2 = std::map<std::pair<K, K>, Rational>;

template <class K>
using Lin3 = std::map<std::tuple<K, K, K>, Rational>;

template <class M, class K>
void add_term(M& m, const K& key, const Rational& c) {
    if (c == 0) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

template <class M>
M lin_add(const M& a, const M& b) {
    M out = a;
    for (const auto& [k, c] : b) add_term(out, k, c);
    return out;
}

template <class M>
M lin_sub(const M& a, const M& b) {
    M out = a;
    for (const auto& [k, c] : b) add_term(out, k, -c);
    return out;
}

template <class M>
M lin_scale(const M& a, const Rational& s) {
    M out;
    if (s == 0) return out;
    for (const auto& [k, c] : a) out.emplace(k, c * s);
    return out;
}

template <class K>
Lin<K> lin_unit(const K& k) {
    return Lin<K>{{k, Rational(1)}};
}

// A graded connected Hopf basis.  B supplies, for basis keys:
//   int degree(key);  K unit();  Lin<K> product(key, key);  Lin2<K> coproduct(key).
// Everything below is the bilinear/linear extension of those maps, plus the
// antipode of a graded connected bialgebra computed by the recursion
// s(1) = 1,  s(x) = -sum s(y) z  over the terms y (x) z of Delta(x) - x (x) 1.
template <class B>
Lin<typename B::Key> lin_product(const Lin<typename B::Key>& a, const Lin<typename B::Key>& b) {
    Lin<typename B::Key> out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            for (const auto& [k, c] : B::product(ka, kb)) add_term(out, k, ca * cb * c);
    return out;
}

template <class B>
Lin2<typename B::Key> lin_coproduct(const Lin<typename B::Key>& a) {
    Lin2<typename B::Key> out;
    for (const auto& [k, c] : a)
        for (const auto& [kk, cc] : B::coproduct(k)) add_term(out, kk, c * cc);
    return out;
}

template <class B>
Rational counit(const Lin<typename B::Key>& a) {
    auto it = a.find(B::unit());
    return it == a.end() ? Rational(0) : it->second;
}

namespace detail {

template <class B>
const Lin<typename B::Key>& antipode_key(const typename B::Key& key,
                                         std::map<typename B::Key, Lin<typename B::Key>>& memo) {
    using K = typename B::Key;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Lin<K> result;
    if (B::degree(key) == 0) {
        result = lin_unit(B::unit());
    } else {
        for (const auto& [kk, c] : B::coproduct(key)) {
            if (kk.second == B::unit() && kk.first == key) continue;  // the x (x) 1 term
            const Lin<K>& sa = antipode_key<B>(kk.first, memo);
            for (const auto& [k2, c2] : sa)
                for (const auto& [k3, c3] : B::product(k2, kk.second))
                    add_term(result, k3, -c * c2 * c3);
        }
    }
    return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

template <class B>
Lin<typename B::Key> lin_antipode(const Lin<typename B::Key>& a) {
    std::map<typename B::Key, Lin<typename B::Key>> memo;
    Lin<typename B::Key> out;
    for (const auto& [k, c] : a)
        for (const auto& [k2, c2] : detail::antipode_key<B>(k, memo)) add_term(out, k2, c * c2);
    return out;
}

// Hopf axiom checks on a single basis key, used by the verification suites.

template <class B>
bool check_coassociative(const typename B::Key& key) {
    using K = typename B::Key;
    Lin3<K> left, right;
    for (const auto& [kk, c] : B::coproduct(key)) {
        for (const auto& [kk2, c2] : B::coproduct(kk.first))
            add_term(left, std::tuple<K, K, K>(kk2.first, kk2.second, kk.second), c * c2);
        for (const auto& [kk2, c2] : B::coproduct(kk.second))
            add_term(right, std::tuple<K, K, K>(kk.first, kk2.first, kk2.second), c * c2);
    }
    return left == right;
}

template <class B>
bool check_counit(const typename B::Key& key) {
    using K = typename B::Key;
    Lin<K> left, right;
    for (const auto& [kk, c] : B::coproduct(key)) {
        if (kk.first == B::unit()) add_term(left, kk.second, c);
        if (kk.second == B::unit()) add_term(right, kk.first, c);
    }
    Lin<K> id = lin_unit(key);
    return left == id && right == id;
}

template <class B>
bool check_antipode_law(const typename B::Key& key) {
    using K = typename B::Key;
    std::map<K, Lin<K>> memo;
    Lin<K> left, right;
    for (const auto& [kk, c] : B::coproduct(key)) {
        const Lin<K>& sa = detail::antipode_key<B>(kk.first, memo);
        for (const auto& [k2, c2] : sa)
            for (const auto& [k3, c3] : B::product(k2, kk.second)) add_term(left, k3, c * c2 * c3);
        const Lin<K>& sb = detail::antipode_key<B>(kk.second, memo);
        for (const auto& [k2, c2] : sb)
            for (const auto& [k3, c3] : B::product(kk.first, k2)) add_term(right, k3, c * c2 * c3);
    }
    Lin<K> expected;  // u(eps(x)): zero unless x has degree 0
    if (B::degree(key) == 0) expected = lin_unit(B::unit());
    return left == expected && right == expected;
}

}  // namespace qspieri
