// Shared helpers for the test suites: a tiny deterministic RNG and
// random polynomial/point generators for property checks.
#pragma once

#include <cstdint>
#include <vector>

#include "surml/multipoly.hpp"

namespace testsupport {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long integer(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) / 9007199254740992.0);
    }
};

inline surml::Rational random_rational(Rng& rng) {
    long num = rng.integer(-12, 12);
    long den = rng.integer(1, 9);
    return surml::make_rational(num, den);
}

inline surml::MultiPoly random_poly(Rng& rng, std::size_t nvars, std::uint32_t max_deg,
                                    std::size_t max_terms) {
    surml::MultiPoly p(nvars);
    std::size_t nterms = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < nterms; ++t) {
        std::vector<std::uint32_t> exps(nvars);
        for (auto& e : exps) e = static_cast<std::uint32_t>(rng.integer(0, max_deg));
        p.add_term(surml::Monomial(std::move(exps)), random_rational(rng));
    }
    return p;
}

inline std::vector<surml::Rational> random_point(Rng& rng, std::size_t nvars) {
    std::vector<surml::Rational> pt(nvars);
    for (auto& q : pt) q = random_rational(rng);
    return pt;
}

}  // namespace testsupport
