#pragma once

#include <stdexcept>
#include <vector>

#include "qspieri/composition.hpp"
#include "qspieri/linear.hpp"

namespace qspieri {

// The Hopf algebra NC of noncommutative symmetric functions: the free
// associative algebra on generators h_1, h_2, ... with coproduct
//   Delta h_k = sum_{i=0}^{k} h_i (x) h_{k-i},   h_0 = 1.
// The complete basis S^alpha = h_{a_1} ... h_{a_l} is canonical here; its
// product is concatenation of indices and its coproduct multiplies out the
// generator coproducts.  The ribbon basis R is defined by duality with the
// fundamental quasi-symmetric functions, which forces
//   R_alpha = sum over coarsenings gamma of alpha of (-1)^{l(alpha)-l(gamma)} S^gamma
//   S^alpha = sum over coarsenings gamma of alpha of R_gamma.

enum class NBasis { S, R };

struct NCElem {
    NBasis basis = NBasis::S;
    Lin<Composition> coeffs;

    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const NCElem& a, const NCElem& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

inline NCElem nc_zero(NBasis b = NBasis::S) { return NCElem{b, {}}; }

inline NCElem nc_one() { return NCElem{NBasis::S, lin_unit(Composition())}; }

inline NCElem complete(const Composition& alpha, const Rational& c = Rational(1)) {
    NCElem e{NBasis::S, {}};
    add_term(e.coeffs, alpha, c);
    return e;
}

inline NCElem ribbon(const Composition& alpha, const Rational& c = Rational(1)) {
    NCElem e{NBasis::R, {}};
    add_term(e.coeffs, alpha, c);
    return e;
}

struct CompleteHopf {
    using Key = Composition;
    static int degree(const Key& k) { return k.weight(); }
    static Key unit() { return Composition(); }
    static Lin<Key> product(const Key& a, const Key& b) { return lin_unit(a.concat(b)); }
    // Each part a_i splits as a_i = s + (a_i - s) with s in [0, a_i]; zero
    // summands disappear because h_0 = 1.
    static Lin2<Key> coproduct(const Key& alpha) {
        Lin2<Key> out{{std::make_pair(Composition(), Composition()), Rational(1)}};
        for (int i = 0; i < alpha.length(); ++i) {
            Lin2<Key> next;
            for (const auto& [kk, c] : out)
                for (int s = 0; s <= alpha.part(i); ++s) {
                    Composition left = kk.first, right = kk.second;
                    if (s > 0) left = left.concat(Composition{s});
                    if (s < alpha.part(i)) right = right.concat(Composition{alpha.part(i) - s});
                    add_term(next, std::make_pair(left, right), c);
                }
            out = std::move(next);
        }
        return out;
    }
};

inline NCElem to_complete(const NCElem& x) {
    if (x.basis == NBasis::S) return x;
    NCElem out{NBasis::S, {}};
    for (const auto& [alpha, c] : x.coeffs)
        for (const Composition& gamma : coarsenings_of(alpha)) {
            int sign = ((alpha.length() - gamma.length()) % 2 == 0) ? 1 : -1;
            add_term(out.coeffs, gamma, c * sign);
        }
    return out;
}

inline NCElem to_ribbon(const NCElem& x) {
    if (x.basis == NBasis::R) return x;
    NCElem out{NBasis::R, {}};
    for (const auto& [alpha, c] : x.coeffs)
        for (const Composition& gamma : coarsenings_of(alpha)) add_term(out.coeffs, gamma, c);
    return out;
}

inline NCElem nc_add(const NCElem& x, const NCElem& y) {
    NCElem a = to_complete(x), b = to_complete(y);
    return NCElem{NBasis::S, lin_add(a.coeffs, b.coeffs)};
}

inline NCElem nc_scale(const NCElem& x, const Rational& s) {
    return NCElem{x.basis, lin_scale(x.coeffs, s)};
}

inline NCElem nc_product(const NCElem& x, const NCElem& y) {
    NCElem a = to_complete(x), b = to_complete(y);
    return NCElem{NBasis::S, lin_product<CompleteHopf>(a.coeffs, b.coeffs)};
}

inline Lin2<Composition> nc_coproduct(const NCElem& x) {
    return lin_coproduct<CompleteHopf>(to_complete(x).coeffs);
}

inline NCElem nc_antipode(const NCElem& x) {
    return NCElem{NBasis::S, lin_antipode<CompleteHopf>(to_complete(x).coeffs)};
}

inline std::optional<int> homogeneous_degree(const NCElem& x) {
    std::optional<int> d;
    for (const auto& [k, c] : x.coeffs) {
        if (!d)
            d = k.weight();
        else if (*d != k.weight())
            return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

// The even Euler element
//   X_{2n} = 2 h_{2n} + sum_{i=1}^{2n-1} (-1)^i h_i h_{2n-i}.
// The two-sided ideal generated by all X_{2n} encodes the generalised
// Dehn-Sommerville relations; the principal ideal generated by X_2 alone is
// the annihilator of the span of all shifted quasi-symmetric functions.
inline NCElem euler_element(int n) {
    if (n <= 0) throw std::invalid_argument("euler_element needs n >= 1");
    NCElem out{NBasis::S, {}};
    add_term(out.coeffs, Composition{2 * n}, Rational(2));
    for (int i = 1; i <= 2 * n - 1; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        add_term(out.coeffs, Composition{i, 2 * n - i}, Rational(sign));
    }
    return out;
}

}  // namespace qspieri
