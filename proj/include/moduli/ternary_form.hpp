#pragma once

#include "moduli/binary_form.hpp"
#include "moduli/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace moduli {

struct TernaryTerm {
    int ex = 0, ey = 0, ez = 0;
    Rat coeff;
};

// Homogeneous form of degree d in x, y, z; sparse exponent->coefficient map.
// No zero coefficients are stored.
class TernaryForm {
public:
    TernaryForm(int degree, const std::vector<TernaryTerm>& terms) : degree_(degree) {
        if (degree_ < 0)
            throw std::domain_error("ternary form degree must be nonnegative");
        for (const auto& t : terms) {
            if (t.ex < 0 || t.ey < 0 || t.ez < 0 || t.ex + t.ey + t.ez != degree_)
                throw std::domain_error("ternary term exponents must be nonnegative and sum to the degree");
            terms_[{t.ex, t.ey, t.ez}] += t.coeff;
        }
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::array<int, 3>, Rat>& terms() const { return terms_; }

    Rat eval(const Rat& x, const Rat& y, const Rat& z) const {
        const auto power = [](const Rat& base, int e) {
            Rat acc(1);
            for (int i = 0; i < e; ++i)
                acc *= base;
            return acc;
        };
        Rat acc(0);
        for (const auto& [e, c] : terms_)
            acc += c * power(x, e[0]) * power(y, e[1]) * power(z, e[2]);
        return acc;
    }

private:
    int degree_;
    std::map<std::array<int, 3>, Rat> terms_;
};

enum class Chart { X = 0, Y = 1, Z = 2 };

struct ProjectivePoint {
    Rat x, y, z;

    Rat coord(int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    bool is_valid() const { return x != 0 || y != 0 || z != 0; }
};

// Dehomogenizes f in the given affine chart, translates center to the
// origin, and returns the graded pieces F_0 .. F_d of the result by total
// degree. Each F_n is returned as a binary form of degree n in the two
// remaining coordinates, taken in x < y < z order (chart Z gives (x, y),
// with x playing the X0 role).
inline std::vector<BinaryForm> homogeneous_components(const TernaryForm& f, Chart chart,
                                                      const ProjectivePoint& center) {
    const int c = static_cast<int>(chart);
    const Rat scale = center.coord(c);
    if (scale == 0)
        throw std::domain_error("center does not lie in the chosen affine chart");
    const int u_index = (c == 0) ? 1 : 0;
    const int v_index = (c == 2) ? 1 : 2;
    const Rat u0 = center.coord(u_index) / scale;
    const Rat v0 = center.coord(v_index) / scale;

    std::vector<BinaryForm> pieces;
    pieces.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int n = 0; n <= f.degree(); ++n)
        pieces.push_back(BinaryForm::zero(n));

    // Each term contributes c * (u0 + U)^eu * (v0 + V)^ev; expand binomially
    // and bucket by total degree in (U, V).
    for (const auto& [e, coeff] : f.terms()) {
        const int eu = e[static_cast<std::size_t>(u_index)];
        const int ev = e[static_cast<std::size_t>(v_index)];
        std::vector<Rat> upow(static_cast<std::size_t>(eu) + 1, Rat(1));
        std::vector<Rat> vpow(static_cast<std::size_t>(ev) + 1, Rat(1));
        for (std::size_t i = 1; i < upow.size(); ++i)
            upow[i] = upow[i - 1] * u0;
        for (std::size_t i = 1; i < vpow.size(); ++i)
            vpow[i] = vpow[i - 1] * v0;
        for (int s = 0; s <= eu; ++s) {
            const Rat us = coeff * Rat(binomial(eu, s)) * upow[static_cast<std::size_t>(eu - s)];
            if (us == 0)
                continue;
            for (int t = 0; t <= ev; ++t) {
                const Rat term =
                    us * Rat(binomial(ev, t)) * vpow[static_cast<std::size_t>(ev - t)];
                if (term == 0)
                    continue;
                pieces[static_cast<std::size_t>(s + t)] =
                    pieces[static_cast<std::size_t>(s + t)] +
                    BinaryForm::monomial(s + t, s, term);
            }
        }
    }
    return pieces;
}

} // namespace moduli
