#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

// P(t) = linear * t + constant with linear > 0.
struct HilbertPoly {
    long long linear = 1;
    long long constant = 0;

    long long eval(long long t) const { return linear * t + constant; }

    std::string to_string() const {
        std::string s = std::to_string(linear) + "*t";
        if (constant > 0)
            s += " + " + std::to_string(constant);
        else if (constant < 0)
            s += " - " + std::to_string(-constant);
        return s;
    }

    friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

struct CanonicalEmbedding {
    HilbertPoly poly;         // P_{g,n}(t) = 2n(g-1) t - (g-1)
    long long rank = 0;       // (2n-1)(g-1)
    long long ambient_dim = 0; // rank - 1
};

// Numerology of the n-canonical embedding: the n-th power of the dualizing
// sheaf is relatively very ample only from n = 3 on, so smaller n is
// rejected.
inline CanonicalEmbedding canonical_hilbert(long long g, long long n) {
    if (g < 2)
        throw std::domain_error("canonical embedding numerology needs genus >= 2");
    if (n < 3)
        throw std::domain_error("very-ampleness threshold: n must be at least 3");
    CanonicalEmbedding e;
    e.poly = {2 * n * (g - 1), -(g - 1)};
    e.rank = (2 * n - 1) * (g - 1);
    e.ambient_dim = e.rank - 1;
    return e;
}

struct GiesekerParameters {
    long long ambient_dim = 0; // N = d - g
    HilbertPoly poly;          // P(t) = d t - g + 1
};

inline GiesekerParameters gieseker_parameters(long long g, long long d) {
    if (g < 3)
        throw std::domain_error("Gieseker parameters need genus >= 3");
    if (d < 20 * (g - 1))
        throw std::domain_error("Gieseker parameters need degree d >= 20(g-1), got d = " +
                                std::to_string(d) + " < " + std::to_string(20 * (g - 1)));
    return {d - g, {d, -(g - 1)}};
}

// Genus of a degree-k cover of the line simply branched over b points:
// g = b/2 - k + 1.
inline long long hurwitz_genus(long long k, long long b) {
    if (k < 2)
        throw std::domain_error("cover degree must be at least 2");
    if (b < 0 || b % 2 != 0)
        throw std::domain_error("branch point count must be even and nonnegative");
    const long long g = b / 2 - k + 1;
    if (g < 0)
        throw std::domain_error("branch data gives negative genus");
    return g;
}

struct ModuliFacts {
    long long g = 0;
    long long dimension = 0;              // 3g - 3
    long long boundary_divisor_count = 0; // floor(g/2) + 1, cross-checked against 1-edge graphs
    long long diaz_bound = 0;             // complete subvarieties have dimension <= g - 2
    bool general_type_known = false;      // g > 23
    bool unirationality_known = false;    // g <= 10
    long long min_cover_degree = 0;       // smallest k with k > g + 1
};

inline ModuliFacts moduli_facts(long long g) {
    if (g < 2)
        throw std::domain_error("moduli facts need genus >= 2");
    ModuliFacts f;
    f.g = g;
    f.dimension = 3 * g - 3;
    f.boundary_divisor_count = g / 2 + 1;
    f.diaz_bound = g - 2;
    f.general_type_known = g > 23;
    f.unirationality_known = g <= 10;
    f.min_cover_degree = g + 2;
    return f;
}

} // namespace moduli
