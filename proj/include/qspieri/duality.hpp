#pragma once

#include "qspieri/nc.hpp"
#include "qspieri/qsym.hpp"

namespace qspieri {

// The bilinear pairing NC x QSym -> Q extending <S^alpha, M_beta> = delta.
// Different degrees pair to zero automatically.
inline Rational pairing(const NCElem& f, const QSymElem& g) {
    NCElem s = to_complete(f);
    QSymElem m = to_monomial(g);
    Rational out = 0;
    const auto& small = s.coeffs.size() <= m.coeffs.size() ? s.coeffs : m.coeffs;
    const auto& large = s.coeffs.size() <= m.coeffs.size() ? m.coeffs : s.coeffs;
    for (const auto& [k, c] : small) {
        auto it = large.find(k);
        if (it != large.end()) out += c * it->second;
    }
    return out;
}

// The quasi-symmetric function of a graded module action, evaluated through
// the homogeneous components of the Cauchy element:
//   K = sum over compositions alpha of weight <= max_degree of
//       <x . S^alpha, y> M_alpha.
// The evaluator maps (vector over vertices, k) to the image vector under the
// degree-k operator; Key is any ordered vertex type, so lazily generated
// posets can use their natural vertex encodings directly.
template <class Key, class Evaluator>
QSymElem cauchy_functional(Evaluator&& apply_h, const Key& x, const Key& y, int max_degree) {
    QSymElem out{QBasis::M, {}};
    std::vector<int> prefix;
    auto record = [&](const Lin<Key>& v) {
        auto it = v.find(y);
        if (it != v.end()) add_term(out.coeffs, Composition(prefix), it->second);
    };
    auto rec = [&](auto&& self, const Lin<Key>& v, int remaining) -> void {
        record(v);
        if (v.empty()) return;
        for (int k = 1; k <= remaining; ++k) {
            Lin<Key> next = apply_h(v, k);
            prefix.push_back(k);
            self(self, next, remaining - k);
            prefix.pop_back();
        }
    };
    rec(rec, lin_unit(x), max_degree);
    return out;
}

}  // namespace qspieri
