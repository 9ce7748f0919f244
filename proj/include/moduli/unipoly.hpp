#pragma once

#include "moduli/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace moduli {

// Dense univariate polynomial over Rat. coeffs()[i] is the coefficient of
// x^i. The highest-index coefficient is nonzero unless the polynomial is
// zero, which is stored as an empty vector (degree() == -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rat c) { return UniPoly({std::move(c)}); }

    // c * x^k
    static UniPoly monomial(int k, Rat c = Rat(1)) {
        std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
        v.back() = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return Rat(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const Rat& leading() const {
        if (is_zero())
            throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(v));
    }

    UniPoly scaled(const Rat& c) const {
        if (c == 0)
            return UniPoly();
        std::vector<Rat> v = coeffs_;
        for (auto& x : v)
            x *= c;
        return UniPoly(std::move(v));
    }

    UniPoly monic() const {
        if (is_zero())
            return UniPoly();
        return scaled(Rat(1) / leading());
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1)
            return UniPoly();
        std::vector<Rat> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
        return UniPoly(std::move(v));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

struct PolyDivMod {
    UniPoly quot;
    UniPoly rem;
};

inline PolyDivMod divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree())
        return {UniPoly(), num};
    std::vector<Rat> rem = num.coeffs();
    std::vector<Rat> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rat(0));
    const Rat& lead = den.leading();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        Rat c = rem[static_cast<std::size_t>(k + den.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * den.coeff(j);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

// Monic gcd; gcd(p, 0) = monic(p); gcd(0, 0) = 0.
inline UniPoly poly_gcd(UniPoly p, UniPoly q) {
    while (!q.is_zero()) {
        UniPoly r = divmod(p, q).rem;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

struct SquarefreeFactor {
    UniPoly factor;       // monic, squarefree
    int multiplicity = 0; // >= 1
};

// Yun's recurrence (characteristic 0). Returns pairs (A_m, m), trivial
// factors omitted, ordered by increasing multiplicity. The A_m are monic,
// squarefree and pairwise coprime, and c * prod A_m^m = p for the scalar c
// that matches leading coefficients.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero())
        throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> result;
    if (p.degree() == 0)
        return result;
    // Normalizing the input monic keeps every quotient below monic as well,
    // so the recurrence needs no rescaling.
    const UniPoly q = p.monic();
    const UniPoly dq = q.derivative();
    UniPoly g = poly_gcd(q, dq);
    UniPoly c = divmod(q, g).quot;
    UniPoly d = divmod(dq, g).quot - c.derivative();
    for (int m = 1; c.degree() > 0; ++m) {
        UniPoly a = poly_gcd(c, d);
        c = divmod(c, a).quot;
        d = divmod(d, a).quot - c.derivative();
        if (a.degree() > 0)
            result.push_back({std::move(a), m});
    }
    return result;
}

} // namespace moduli
