#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qspieri/composition.hpp"
#include "qspieri/linear.hpp"
#include "qspieri/qsym.hpp"

namespace qspieri {

// Symmetric-function views of quasi-symmetric elements.  A quasi-symmetric
// function is symmetric exactly when its M-coefficients are constant on the
// composition classes of each partition; then it is a combination of the
// monomial symmetric functions m_lambda = sum_{sort(alpha)=lambda} M_alpha.
// Schur expansions go through the Kostka matrix, computed by brute-force
// semistandard tableau enumeration so that the oracle stays independent of
// everything else in the library.

enum class SymBasis { m, s };

struct SymExpansion {
    SymBasis basis = SymBasis::m;
    Lin<Partition> coeffs;

    friend bool operator==(const SymExpansion& a, const SymExpansion& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

inline std::optional<SymExpansion> try_symmetric(const QSymElem& x) {
    QSymElem m = to_monomial(x);
    std::map<Partition, Rational> classes;
    for (const auto& [alpha, c] : m.coeffs) classes.emplace(partition_of(alpha), c);
    // every composition in a touched class must carry the class coefficient
    SymExpansion out{SymBasis::m, {}};
    for (const auto& [lambda, c] : classes) {
        for (const Composition& alpha : compositions_of(lambda.weight())) {
            if (!(partition_of(alpha) == lambda)) continue;
            auto it = m.coeffs.find(alpha);
            Rational have = it == m.coeffs.end() ? Rational(0) : it->second;
            if (have != c) return std::nullopt;
        }
        add_term(out.coeffs, lambda, c);
    }
    return out;
}

// Number of semistandard tableaux of the given shape and content: rows
// weakly increase, columns strictly increase, entry i appears content_i
// times.
inline long long kostka_number(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight()) return 0;
    int rows = shape.length();
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) t[static_cast<size_t>(r)].resize(static_cast<size_t>(shape.part(r)), 0);
    std::vector<int> remaining(static_cast<size_t>(content.length()));
    for (int i = 0; i < content.length(); ++i) remaining[static_cast<size_t>(i)] = content.part(i);
    long long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        for (int v = 1; v <= content.length(); ++v) {
            if (remaining[static_cast<size_t>(v) - 1] == 0) continue;
            if (c > 0 && v < t[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]) continue;
            if (r > 0 && c < shape.part(r - 1) && v <= t[static_cast<size_t>(r) - 1][static_cast<size_t>(c)])
                continue;
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            --remaining[static_cast<size_t>(v) - 1];
            self(self, nr, nc);
            ++remaining[static_cast<size_t>(v) - 1];
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(rec, 0, 0);
    return count;
}

// s_lambda = sum_mu K_{lambda,mu} m_mu
inline SymExpansion schur_in_monomial(const Partition& lambda) {
    SymExpansion out{SymBasis::m, {}};
    for (const Partition& mu : partitions_of(lambda.weight())) {
        long long k = kostka_number(lambda, mu);
        if (k) add_term(out.coeffs, mu, Rational(k));
    }
    return out;
}

// Change of basis m -> s by forward substitution: the Kostka matrix is
// unitriangular with respect to any order refining dominance, and
// lexicographically larger partitions dominate.
inline SymExpansion m_to_schur(const SymExpansion& e) {
    if (e.basis != SymBasis::m) throw std::invalid_argument("m_to_schur needs an m-expansion");
    Lin<Partition> rest = e.coeffs;
    SymExpansion out{SymBasis::s, {}};
    while (!rest.empty()) {
        // lexicographically largest partition of maximal degree not yet consumed
        auto best = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            bool better = false;
            if (it->first.weight() != best->first.weight())
                better = it->first.weight() > best->first.weight();
            else
                better = std::lexicographical_compare(best->first.parts().begin(),
                                                      best->first.parts().end(),
                                                      it->first.parts().begin(),
                                                      it->first.parts().end());
            if (better) best = it;
        }
        Partition lambda = best->first;
        Rational c = best->second;
        add_term(out.coeffs, lambda, c);
        for (const auto& [mu, k] : schur_in_monomial(lambda).coeffs) add_term(rest, mu, -c * k);
    }
    return out;
}

inline SymExpansion schur_to_m(const SymExpansion& e) {
    if (e.basis != SymBasis::s) throw std::invalid_argument("schur_to_m needs an s-expansion");
    SymExpansion out{SymBasis::m, {}};
    for (const auto& [lambda, c] : e.coeffs)
        for (const auto& [mu, k] : schur_in_monomial(lambda).coeffs)
            add_term(out.coeffs, mu, c * k);
    return out;
}

// Brute-force skew Schur function: the generating function of semistandard
// fillings of lambda/mu with entries 1..nvars, collected into monomial
// symmetric functions.  With nvars >= |lambda/mu| this m-expansion is exact.
inline SymExpansion skew_schur_m(const Partition& lambda, const Partition& mu, int nvars) {
    if (!lambda.contains(mu)) throw std::invalid_argument("skew shape needs mu inside lambda");
    if (lambda.weight() > 8) throw std::invalid_argument("skew shape guard: |lambda| <= 8");
    int rows = lambda.length();
    std::map<std::vector<int>, long long> by_content;  // content vector -> count
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        t[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), 0);
    std::vector<int> content(static_cast<size_t>(nvars), 0);
    // cells in row-major order, skipping the mu part
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = mu.part(r); c < lambda.part(r); ++c) cells.emplace_back(r, c);
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == cells.size()) {
            ++by_content[content];
            return;
        }
        auto [r, c] = cells[pos];
        for (int v = 1; v <= nvars; ++v) {
            if (c > mu.part(r) && v < t[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]) continue;
            if (r > 0 && c >= mu.part(r - 1) && c < lambda.part(r - 1) &&
                v <= t[static_cast<size_t>(r) - 1][static_cast<size_t>(c)])
                continue;
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++content[static_cast<size_t>(v) - 1];
            self(self, pos + 1);
            --content[static_cast<size_t>(v) - 1];
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(rec, 0);
    // group monomials by sorted content; the coefficient of m_nu is the
    // count of any single monomial in the class
    SymExpansion out{SymBasis::m, {}};
    for (const auto& [cont, count] : by_content) {
        std::vector<int> sorted = cont;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        // coefficient of m_nu = count of the representative monomial with
        // weakly decreasing exponents packed into the leading variables
        std::vector<int> rep = sorted;
        rep.resize(cont.size(), 0);
        if (cont == rep) add_term(out.coeffs, Partition(sorted), Rational(count));
    }
    return out;
}

}  // namespace qspieri
