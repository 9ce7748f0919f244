#pragma once

#include "moduli/binary_form.hpp"
#include "moduli/ternary_form.hpp"
#include "moduli/unipoly.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace moduli {

enum class StabilityStatus { Stable, StrictlySemistable, Unstable };

inline bool is_semistable(StabilityStatus s) { return s != StabilityStatus::Unstable; }

inline const char* to_string(StabilityStatus s) {
    switch (s) {
    case StabilityStatus::Stable: return "stable";
    case StabilityStatus::StrictlySemistable: return "strictly_semistable";
    default: return "unstable";
    }
}

// Diagonal one-parameter subgroup of SL(2): X0 -> t^r X0, X1 -> t^(-r) X1.
// The weights on the two coordinates sum to zero; r = 0 (the trivial
// subgroup) is excluded.
struct OnePS {
    long r;

    explicit OnePS(long weight) : r(weight) {
        if (r == 0)
            throw std::domain_error("one-parameter subgroup weight must be nonzero");
    }
};

enum class LambdaStatus { Stable, Semistable, Unstable };

inline const char* to_string(LambdaStatus s) {
    switch (s) {
    case LambdaStatus::Stable: return "lambda_stable";
    case LambdaStatus::Semistable: return "lambda_semistable";
    default: return "lambda_unstable";
    }
}

struct LambdaReport {
    std::set<long long> weights_present; // weights of monomials with nonzero coefficient
    long long min_weight = 0;
    LambdaStatus status = LambdaStatus::Unstable;

    // stable: some weight is negative; semistable: some weight is nonpositive
    bool is_lambda_stable() const { return min_weight < 0; }
    bool is_lambda_semistable() const { return min_weight <= 0; }
};

// Weight of the coefficient a_i of X0^i X1^(d-i): r * (2i - d).
// Listed by increasing i, so for d = 4, r = 1 this is [-4, -2, 0, 2, 4].
inline std::vector<long long> monomial_weights(int degree, OnePS lam) {
    if (degree < 0)
        throw std::domain_error("degree must be nonnegative");
    std::vector<long long> w;
    w.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i)
        w.push_back(static_cast<long long>(lam.r) * (2 * i - degree));
    return w;
}

inline LambdaReport lambda_status(const BinaryForm& f, OnePS lam) {
    if (f.is_zero())
        throw std::domain_error("lambda status of the zero form");
    const auto weights = monomial_weights(f.degree(), lam);
    LambdaReport report;
    for (int i = 0; i <= f.degree(); ++i)
        if (f.coeff(i) != 0)
            report.weights_present.insert(weights[static_cast<std::size_t>(i)]);
    report.min_weight = *report.weights_present.begin();
    report.status = report.min_weight < 0    ? LambdaStatus::Stable
                    : report.min_weight == 0 ? LambdaStatus::Semistable
                                             : LambdaStatus::Unstable;
    return report;
}

struct MultiplicityWitness {
    int multiplicity = 0;
    int factor_degree = 0; // number of distinct geometric roots with this multiplicity
};

struct RootMultiplicities {
    int max = 0;
    std::vector<MultiplicityWitness> witnesses; // sorted by multiplicity
};

// Maximum multiplicity of a geometric root of f on the projective line.
// Finite roots come from the squarefree decomposition of f(x, 1); the point
// (1:0) contributes its X1-divisibility as a degree-1 witness.
inline RootMultiplicities max_multiplicity(const BinaryForm& f) {
    if (f.is_zero())
        throw std::domain_error("root multiplicities of the zero form");
    if (f.degree() < 1)
        throw std::domain_error("constant forms cut out no points");
    const Dehomogenized dh = binary_to_unipoly(f);
    std::map<int, int> by_mult;
    for (const auto& part : squarefree_decomposition(dh.poly))
        by_mult[part.multiplicity] += part.factor.degree();
    if (dh.mult_at_infinity > 0)
        by_mult[dh.mult_at_infinity] += 1;
    RootMultiplicities result;
    for (const auto& [m, deg] : by_mult) {
        result.witnesses.push_back({m, deg});
        result.max = std::max(result.max, m);
    }
    return result;
}

// Hilbert-Mumford classification of a binary form of degree d >= 3: the form
// is stable / strictly semistable / unstable according to whether twice the
// maximal root multiplicity is below / at / above d.
inline StabilityStatus binary_form_stability(const BinaryForm& f) {
    if (f.is_zero())
        throw std::domain_error("stability of the zero form");
    if (f.degree() < 3)
        throw std::domain_error(
            "stability undefined for binary forms of degree < 3 (orbit-dimension convention)");
    const int m2 = 2 * max_multiplicity(f).max;
    if (m2 < f.degree())
        return StabilityStatus::Stable;
    if (m2 == f.degree())
        return StabilityStatus::StrictlySemistable;
    return StabilityStatus::Unstable;
}

enum class PointClass { NotOnCurve, SmoothPoint, Node, WorseSingularity };

inline const char* to_string(PointClass c) {
    switch (c) {
    case PointClass::NotOnCurve: return "not_on_curve";
    case PointClass::SmoothPoint: return "smooth_point";
    case PointClass::Node: return "node";
    default: return "worse_singularity";
    }
}

// Classifies the plane-curve point by its low-order jets at p: not on the
// curve (F_0 != 0), smooth (F_1 != 0), node (F_2 a nondegenerate quadratic,
// i.e. discriminant b^2 - 4ac != 0), anything else worse.
inline PointClass classify_point(const TernaryForm& f, const ProjectivePoint& p) {
    if (f.is_zero())
        throw std::domain_error("cannot classify points of the zero form");
    if (!p.is_valid())
        throw std::domain_error("(0:0:0) is not a projective point");
    Chart chart = Chart::X;
    if (p.z != 0)
        chart = Chart::Z;
    else if (p.y != 0)
        chart = Chart::Y;
    const auto pieces = homogeneous_components(f, chart, p);
    if (!pieces[0].is_zero())
        return PointClass::NotOnCurve;
    if (pieces.size() > 1 && !pieces[1].is_zero())
        return PointClass::SmoothPoint;
    if (pieces.size() > 2) {
        const BinaryForm& jet = pieces[2];
        const Rat disc = jet.coeff(1) * jet.coeff(1) - Rat(4) * jet.coeff(2) * jet.coeff(0);
        if (disc != 0)
            return PointClass::Node;
    }
    return PointClass::WorseSingularity;
}

} // namespace moduli
