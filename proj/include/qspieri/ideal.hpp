#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qspieri/duality.hpp"
#include "qspieri/linalg.hpp"
#include "qspieri/nc.hpp"
#include "qspieri/qsym.hpp"

namespace qspieri {

// Degree-n slice of the two-sided ideal generated by homogeneous elements:
// the spanning set { S^beta g S^gamma } over all sandwiching compositions.
inline std::vector<NCElem> ideal_degree_basis(const std::vector<NCElem>& generators, int n) {
    std::vector<NCElem> out;
    for (const NCElem& g : generators) {
        auto d = homogeneous_degree(g);
        if (!d) throw std::invalid_argument("ideal generators must be homogeneous");
        if (g.is_zero() || *d > n) continue;
        for (int b = 0; b + *d <= n; ++b) {
            int c = n - *d - b;
            for (const Composition& beta : compositions_of(b))
                for (const Composition& gamma : compositions_of(c))
                    out.push_back(nc_product(nc_product(complete(beta), g), complete(gamma)));
        }
    }
    return out;
}

inline int ideal_degree_rank(const std::vector<NCElem>& generators, int n) {
    std::vector<Lin<Composition>> rows;
    for (const NCElem& e : ideal_degree_basis(generators, n)) rows.push_back(to_complete(e).coeffs);
    return rank_of(rows);
}

// dim NC_n = 2^{n-1} for n >= 1, and 1 for n = 0.
inline long long nc_dimension(int n) { return n == 0 ? 1 : (1LL << (n - 1)); }

inline long long quotient_dimension(const std::vector<NCElem>& generators, int n) {
    return nc_dimension(n) - ideal_degree_rank(generators, n);
}

// X_2, X_4, ..., X_{2m} with 2m <= n: the generators that can contribute to
// the degree-n slice.
inline std::vector<NCElem> euler_generators_upto(int n) {
    std::vector<NCElem> gens;
    for (int m = 1; 2 * m <= n; ++m) gens.push_back(euler_element(m));
    return gens;
}

// x (viewed as a linear functional on NC via the pairing) annihilates the
// degree slice of the given ideal.
inline bool annihilates_ideal_slice(const QSymElem& x, const std::vector<NCElem>& generators) {
    auto d = homogeneous_degree(x);
    if (!d) throw std::invalid_argument("membership test needs a homogeneous element");
    for (const NCElem& e : ideal_degree_basis(generators, *d))
        if (pairing(e, x) != 0) return false;
    return true;
}

// Membership in the peak algebra: annihilates every S^beta X_{2m} S^gamma.
inline bool peak_membership(const QSymElem& x) {
    auto d = homogeneous_degree(x);
    if (!d) throw std::invalid_argument("membership test needs a homogeneous element");
    return annihilates_ideal_slice(x, euler_generators_upto(*d));
}

// Membership in the span of all shifted quasi-symmetric functions:
// annihilates every S^beta X_2 S^gamma.
inline bool xi_membership(const QSymElem& x) {
    return annihilates_ideal_slice(x, {euler_element(1)});
}

// Index sets for spans of theta functions.
enum class ThetaIndexSet {
    Peak,           // all parts > 1 except possibly the last
    FirstPartLarge, // first part > 1 (no constraint when weight <= 1)
    All,
};

inline std::vector<Composition> theta_index_set(int n, ThetaIndexSet which) {
    std::vector<Composition> out;
    for (const Composition& alpha : compositions_of(n)) {
        bool keep = true;
        switch (which) {
            case ThetaIndexSet::Peak: keep = is_peak_composition(alpha); break;
            case ThetaIndexSet::FirstPartLarge:
                keep = (n <= 1) || (!alpha.empty() && alpha.part(0) > 1);
                break;
            case ThetaIndexSet::All: keep = true; break;
        }
        if (keep) out.push_back(alpha);
    }
    return out;
}

inline int theta_span_dimension(int n, ThetaIndexSet which) {
    std::vector<Lin<Composition>> rows;
    for (const Composition& alpha : theta_index_set(n, which))
        rows.push_back(theta(alpha).coeffs);
    return rank_of(rows);
}

// Expands a homogeneous element in the peak functions
// { theta_alpha : alpha a peak composition }.  These are independent, so the
// expansion is unique when it exists.
inline std::optional<Lin<Composition>> expand_in_theta(const QSymElem& x) {
    auto d = homogeneous_degree(x);
    if (!d) return std::nullopt;
    std::vector<Composition> idx = theta_index_set(*d, ThetaIndexSet::Peak);
    std::vector<Lin<Composition>> basis;
    for (const Composition& alpha : idx) basis.push_back(theta(alpha).coeffs);
    auto sol = solve_in_span(basis, to_monomial(x).coeffs);
    if (!sol) return std::nullopt;
    Lin<Composition> out;
    for (size_t i = 0; i < idx.size(); ++i) add_term(out, idx[i], (*sol)[i]);
    return out;
}

inline std::vector<long long> fibonacci_sequence(int n) {
    // f(1) = f(2) = 1
    std::vector<long long> f(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        f[static_cast<size_t>(i)] = i <= 2 ? 1 : f[static_cast<size_t>(i) - 1] + f[static_cast<size_t>(i) - 2];
    return f;
}

// pi_n = pi_{n-1} + pi_{n-2} + pi_{n-4}, pi_1..pi_4 = 1, 1, 2, 4; counts the
// compositions of n with no part equal to 2.
inline std::vector<long long> pi_sequence(int n) {
    std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        if (i == 1 || i == 2)
            p[static_cast<size_t>(i)] = 1;
        else if (i == 3)
            p[static_cast<size_t>(i)] = 2;
        else if (i == 4)
            p[static_cast<size_t>(i)] = 4;
        else
            p[static_cast<size_t>(i)] = p[static_cast<size_t>(i) - 1] + p[static_cast<size_t>(i) - 2] +
                                        p[static_cast<size_t>(i) - 4];
    }
    return p;
}

}  // namespace qspieri
