#pragma once

#include <compare>
#include <tuple>
#include <vector>

#include "qspieri/linear.hpp"
#include "qspieri/reseau.hpp"

namespace qspieri {

// The interval Hopf algebra of a reseau: basis elements are formal products
// of graded intervals [x,y]^(r), with [x,x]^(0) identified with the unit and
// intervals without chains identified with zero.  Products of intervals are
// kept as factor lists (sorted, so the product is commutative); the
// coproduct of a single interval is
//   Delta [x,y]^(r) = sum_{s=0}^{r} sum_z [x,z]^(s) (x) [z,y]^(r-s)
// extended multiplicatively to products.

struct IntervalFactor {
    const LabelledReseau* g = nullptr;
    int x = 0;
    int y = 0;
    int r = 0;

    friend bool operator==(const IntervalFactor& a, const IntervalFactor& b) = default;
    friend std::strong_ordering operator<=>(const IntervalFactor& a, const IntervalFactor& b) {
        return std::tie(a.g, a.x, a.y, a.r) <=> std::tie(b.g, b.x, b.y, b.r);
    }
};

class IntervalProduct {
public:
    IntervalProduct() = default;  // the unit

    explicit IntervalProduct(std::vector<IntervalFactor> factors) : factors_(std::move(factors)) {
        std::erase_if(factors_, [](const IntervalFactor& f) { return f.r == 0 && f.x == f.y; });
        std::sort(factors_.begin(), factors_.end());
    }

    const std::vector<IntervalFactor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const IntervalFactor& f : factors_) d += f.r;
        return d;
    }

    IntervalProduct times(const IntervalProduct& other) const {
        std::vector<IntervalFactor> fs = factors_;
        fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
        return IntervalProduct(std::move(fs));
    }

    friend bool operator==(const IntervalProduct& a, const IntervalProduct& b) = default;
    friend std::strong_ordering operator<=>(const IntervalProduct& a, const IntervalProduct& b) {
        return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                      b.factors_.begin(), b.factors_.end());
    }

private:
    std::vector<IntervalFactor> factors_;
};

using HPElem = Lin<IntervalProduct>;

// [x,y]^(r) as an element: the unit for x = y, r = 0; zero when the interval
// carries no length-r chains.
inline HPElem hp_interval(const LabelledReseau& g, int x, int y, int r) {
    if (g.count_paths(x, y, r) == 0) return {};
    return lin_unit(IntervalProduct({IntervalFactor{&g, x, y, r}}));
}

inline HPElem hp_interval(const LabelledReseau& g, const std::string& x, const std::string& y,
                          int r) {
    return hp_interval(g, g.vertex_checked(x), g.vertex_checked(y), r);
}

// Interval products keep a reference to the reseau; a temporary would dangle.
HPElem hp_interval(const LabelledReseau&& g, int x, int y, int r) = delete;
HPElem hp_interval(const LabelledReseau&& g, const std::string& x, const std::string& y,
                   int r) = delete;

struct IntervalHopf {
    using Key = IntervalProduct;

    static int degree(const Key& k) { return k.degree(); }
    static Key unit() { return IntervalProduct(); }

    static Lin<Key> product(const Key& a, const Key& b) { return lin_unit(a.times(b)); }

    static Lin2<Key> coproduct(const Key& a) {
        Lin2<Key> out{{std::make_pair(unit(), unit()), Rational(1)}};
        for (const IntervalFactor& f : a.factors()) {
            Lin2<Key> next;
            for (const auto& [kk, c] : out)
                for (int s = 0; s <= f.r; ++s)
                    for (int z = 0; z < f.g->size(); ++z) {
                        if (f.g->count_paths(f.x, z, s) == 0) continue;
                        if (f.g->count_paths(z, f.y, f.r - s) == 0) continue;
                        Key left = kk.first.times(IntervalProduct({IntervalFactor{f.g, f.x, z, s}}));
                        Key right =
                            kk.second.times(IntervalProduct({IntervalFactor{f.g, z, f.y, f.r - s}}));
                        add_term(next, std::make_pair(left, right), c);
                    }
            out = std::move(next);
        }
        return out;
    }
};

inline Lin2<IntervalProduct> hp_coproduct(const HPElem& a) {
    return lin_coproduct<IntervalHopf>(a);
}

inline HPElem hp_product(const HPElem& a, const HPElem& b) {
    return lin_product<IntervalHopf>(a, b);
}

inline HPElem hp_antipode(const HPElem& a) { return lin_antipode<IntervalHopf>(a); }

}  // namespace qspieri
