#pragma once

#include "moduli/rational.hpp"
#include "moduli/unipoly.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moduli {

// Homogeneous form of degree d in X0, X1 with exact coefficients.
// coeff(i) multiplies X0^i * X1^(d-i), so coefficients are listed from the
// pure X1^d term (i = 0) up to the pure X0^d term (i = d).
class BinaryForm {
public:
    BinaryForm(int degree, std::vector<Rat> coeffs)
        : degree_(degree), coeffs_(std::move(coeffs)) {
        if (degree_ < 0)
            throw std::domain_error("binary form degree must be nonnegative");
        if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
            throw std::domain_error("binary form needs exactly degree+1 coefficients");
    }

    static BinaryForm zero(int degree) {
        return BinaryForm(degree, std::vector<Rat>(static_cast<std::size_t>(degree) + 1, Rat(0)));
    }

    // c * X0^i * X1^(d-i)
    static BinaryForm monomial(int degree, int i, Rat c = Rat(1)) {
        if (i < 0 || i > degree)
            throw std::domain_error("monomial exponent out of range");
        BinaryForm f = zero(degree);
        f.coeffs_[static_cast<std::size_t>(i)] = std::move(c);
        return f;
    }

    // Linear form q*X0 - p*X1, vanishing exactly at the point (p : q).
    static BinaryForm vanishing_at(const Rat& p, const Rat& q) {
        if (p == 0 && q == 0)
            throw std::domain_error("(0:0) is not a projective point");
        return BinaryForm(1, {-p, q});
    }

    int degree() const { return degree_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat coeff(int i) const {
        if (i < 0 || i > degree_)
            return Rat(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree_ != b.degree_)
            throw std::domain_error("cannot add forms of different degrees");
        BinaryForm r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] += b.coeffs_[i];
        return r;
    }

    // Degrees add; plain coefficient convolution.
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r = zero(a.degree_ + b.degree_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    BinaryForm scaled(const Rat& c) const {
        BinaryForm r = *this;
        for (auto& x : r.coeffs_)
            x *= c;
        return r;
    }

    Rat eval(const Rat& x0, const Rat& x1) const {
        Rat acc(0);
        Rat p0(1);
        std::vector<Rat> p1(coeffs_.size(), Rat(1));
        for (std::size_t i = 1; i < p1.size(); ++i)
            p1[i] = p1[i - 1] * x1;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0)
                acc += coeffs_[i] * p0 * p1[coeffs_.size() - 1 - i];
            p0 *= x0;
        }
        return acc;
    }

    // Substitution X0 -> m[0][0]*X0 + m[0][1]*X1, X1 -> m[1][0]*X0 + m[1][1]*X1.
    BinaryForm substituted(const std::array<std::array<long, 2>, 2>& m) const {
        const BinaryForm row0(1, {Rat(m[0][1]), Rat(m[0][0])});
        const BinaryForm row1(1, {Rat(m[1][1]), Rat(m[1][0])});
        // pow0[i] = row0^i, pow1[j] = row1^j
        std::vector<BinaryForm> pow0{BinaryForm(0, {Rat(1)})};
        std::vector<BinaryForm> pow1{BinaryForm(0, {Rat(1)})};
        for (int i = 1; i <= degree_; ++i) {
            pow0.push_back(pow0.back() * row0);
            pow1.push_back(pow1.back() * row1);
        }
        BinaryForm r = zero(degree_);
        for (int i = 0; i <= degree_; ++i) {
            if (coeffs_[static_cast<std::size_t>(i)] == 0)
                continue;
            r = r + (pow0[static_cast<std::size_t>(i)] *
                     pow1[static_cast<std::size_t>(degree_ - i)])
                        .scaled(coeffs_[static_cast<std::size_t>(i)]);
        }
        return r;
    }

private:
    int degree_;
    std::vector<Rat> coeffs_;
};

struct Dehomogenized {
    UniPoly poly;             // f(x, 1)
    int mult_at_infinity = 0; // multiplicity of the root (1:0), i.e. the X1-divisibility
};

inline Dehomogenized binary_to_unipoly(const BinaryForm& f) {
    if (f.is_zero())
        throw std::domain_error("cannot dehomogenize the zero form");
    UniPoly p(f.coeffs());
    return {p, f.degree() - p.degree()};
}

} // namespace moduli
