#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qspieri/composition.hpp"
#include "qspieri/linear.hpp"

namespace qspieri {

// The Hopf algebra QSym of quasi-symmetric functions over the rationals.
//
// Elements are finitely supported rational combinations of compositions,
// tagged with the basis they are expressed in.  The monomial basis M is the
// internal canonical one; the fundamental basis F is related to it by
//   F_beta = sum_{alpha refines beta} M_alpha
// and its Moebius inverse.  The product on M is the overlapping shuffle
// (quasi-shuffle); the coproduct is deconcatenation.  Under the pairing
// <S^alpha, M_beta> = delta these are dual to the coproduct and product of
// the noncommutative symmetric functions.

enum class QBasis { M, F };

struct QSymElem {
    QBasis basis = QBasis::M;
    Lin<Composition> coeffs;

    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const QSymElem& a, const QSymElem& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

inline QSymElem qsym_zero(QBasis b = QBasis::M) { return QSymElem{b, {}}; }

inline QSymElem qsym_one() { return QSymElem{QBasis::M, lin_unit(Composition())}; }

inline QSymElem monomial(const Composition& alpha, const Rational& c = Rational(1)) {
    QSymElem e{QBasis::M, {}};
    add_term(e.coeffs, alpha, c);
    return e;
}

inline QSymElem fundamental(const Composition& alpha, const Rational& c = Rational(1)) {
    QSymElem e{QBasis::F, {}};
    add_term(e.coeffs, alpha, c);
    return e;
}

// Overlapping shuffle of two compositions: the first parts either go in
// order or merge, recursively.
inline Lin<Composition> quasi_shuffle(const Composition& a, const Composition& b) {
    if (a.empty()) return lin_unit(b);
    if (b.empty()) return lin_unit(a);
    Lin<Composition> out;
    std::vector<int> ra(a.parts().begin() + 1, a.parts().end());
    std::vector<int> rb(b.parts().begin() + 1, b.parts().end());
    Composition resta{ra}, restb{rb};
    auto prepend = [&](int head, const Lin<Composition>& tail) {
        for (const auto& [k, c] : tail) {
            std::vector<int> v{head};
            v.insert(v.end(), k.parts().begin(), k.parts().end());
            add_term(out, Composition(std::move(v)), c);
        }
    };
    prepend(a.part(0), quasi_shuffle(resta, b));
    prepend(b.part(0), quasi_shuffle(a, restb));
    prepend(a.part(0) + b.part(0), quasi_shuffle(resta, restb));
    return out;
}

struct MonomialHopf {
    using Key = Composition;
    static int degree(const Key& k) { return k.weight(); }
    static Key unit() { return Composition(); }
    static Lin<Key> product(const Key& a, const Key& b) { return quasi_shuffle(a, b); }
    static Lin2<Key> coproduct(const Key& g) {
        Lin2<Key> out;
        const auto& p = g.parts();
        for (size_t i = 0; i <= p.size(); ++i) {
            Composition left{std::vector<int>(p.begin(), p.begin() + i)};
            Composition right{std::vector<int>(p.begin() + i, p.end())};
            add_term(out, std::make_pair(left, right), Rational(1));
        }
        return out;
    }
};

inline QSymElem to_monomial(const QSymElem& x) {
    if (x.basis == QBasis::M) return x;
    QSymElem out{QBasis::M, {}};
    for (const auto& [beta, c] : x.coeffs)
        for (const Composition& alpha : refinements_of(beta)) add_term(out.coeffs, alpha, c);
    return out;
}

inline QSymElem to_fundamental(const QSymElem& x) {
    if (x.basis == QBasis::F) return x;
    QSymElem out{QBasis::F, {}};
    for (const auto& [beta, c] : x.coeffs)
        for (const Composition& alpha : refinements_of(beta)) {
            int sign = ((alpha.length() - beta.length()) % 2 == 0) ? 1 : -1;
            add_term(out.coeffs, alpha, c * sign);
        }
    return out;
}

inline QSymElem qsym_add(const QSymElem& x, const QSymElem& y) {
    QSymElem a = to_monomial(x), b = to_monomial(y);
    return QSymElem{QBasis::M, lin_add(a.coeffs, b.coeffs)};
}

inline QSymElem qsym_scale(const QSymElem& x, const Rational& s) {
    return QSymElem{x.basis, lin_scale(x.coeffs, s)};
}

inline QSymElem qsym_product(const QSymElem& x, const QSymElem& y) {
    QSymElem a = to_monomial(x), b = to_monomial(y);
    return QSymElem{QBasis::M, lin_product<MonomialHopf>(a.coeffs, b.coeffs)};
}

inline Lin2<Composition> qsym_coproduct(const QSymElem& x) {
    return lin_coproduct<MonomialHopf>(to_monomial(x).coeffs);
}

inline QSymElem qsym_antipode(const QSymElem& x) {
    return QSymElem{QBasis::M, lin_antipode<MonomialHopf>(to_monomial(x).coeffs)};
}

// Degree of a homogeneous element; nullopt when supported in mixed degrees.
// The zero element is homogeneous of every degree; we report 0.
inline std::optional<int> homogeneous_degree(const QSymElem& x) {
    std::optional<int> d;
    for (const auto& [k, c] : x.coeffs) {
        if (!d)
            d = k.weight();
        else if (*d != k.weight())
            return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

// Shifted quasi-symmetric function of an arbitrary composition alpha:
//   theta_alpha = sum over beta of weight |alpha| with beta* refining alpha
//                 of 2^{k(beta)} M_beta.
inline QSymElem theta(const Composition& alpha) {
    QSymElem out{QBasis::M, {}};
    int m = alpha.weight();
    for (const Composition& beta : compositions_of(m))
        if (refines(star(beta), alpha))
            add_term(out.coeffs, beta, pow2(beta.length()));
    return out;
}

// The raising maps QSym_n -> QSym_{n+1}:
//   psi(M_beta) = M_{beta^+} + 2 M_{beta.1}
//   phi(M_beta) = [last part of beta is 1] M_{beta^+} + 2 M_{beta.1}
// On the empty composition only the appended-part term is meaningful, which
// is what the degree-0 chain calculations require.
inline QSymElem psi(const QSymElem& x) {
    if (!homogeneous_degree(to_monomial(x)))
        throw std::invalid_argument("psi needs a homogeneous element");
    QSymElem out{QBasis::M, {}};
    for (const auto& [beta, c] : to_monomial(x).coeffs) {
        if (!beta.empty()) add_term(out.coeffs, beta.plus_last(), c);
        add_term(out.coeffs, beta.append_one(), 2 * c);
    }
    return out;
}

inline QSymElem phi(const QSymElem& x) {
    if (!homogeneous_degree(to_monomial(x)))
        throw std::invalid_argument("phi needs a homogeneous element");
    QSymElem out{QBasis::M, {}};
    for (const auto& [beta, c] : to_monomial(x).coeffs) {
        if (!beta.empty() && beta.last() == 1) add_term(out.coeffs, beta.plus_last(), c);
        add_term(out.coeffs, beta.append_one(), 2 * c);
    }
    return out;
}

// Truncation to finitely many variables z_1..z_nvars: the monomial function
// M_alpha expands as the sum of z_{i_1}^{a_1} ... z_{i_l}^{a_l} over
// increasing index choices.  Keys are dense exponent vectors of length nvars.
inline Lin<std::vector<int>> truncate_to_variables(const QSymElem& x, int nvars) {
    Lin<std::vector<int>> out;
    QSymElem m = to_monomial(x);
    for (const auto& [alpha, c] : m.coeffs) {
        int l = alpha.length();
        if (l > nvars) continue;
        std::vector<int> idx(l);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == l) {
                std::vector<int> expo(nvars, 0);
                for (int t = 0; t < l; ++t) expo[idx[t]] = alpha.part(t);
                add_term(out, expo, c);
                return;
            }
            for (int i = lo; i < nvars; ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

}  // namespace qspieri
