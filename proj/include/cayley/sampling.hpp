#pragma once

// Deterministic seeded sampling of bounded-height rationals and derived
// objects. mt19937_64 is fully specified by the standard, and raw modulo
// mapping is used instead of std::uniform_int_distribution, so identical
// specs produce identical streams on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/params.hpp"
#include "cayley/rational.hpp"

namespace cayley {

struct SampleSpec {
    std::uint64_t seed = 1;
    int count = 100;
    int bound = 6;  // numerators in [-bound, bound], denominators in [1, bound]
};

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int bound) : rng_(seed), bound_(bound) {
        detail::require(bound >= 1, errc::invalid_parameter, "sampling bound must be >= 1");
    }
    explicit RationalSampler(const SampleSpec& spec) : RationalSampler(spec.seed, spec.bound) {}

    /// n/d with |n| <= bound, 1 <= d <= bound.
    Rational next() {
        std::int64_t span = 2 * static_cast<std::int64_t>(bound_) + 1;
        std::int64_t n = static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(span)) -
                         bound_;
        std::uint64_t d = rng_() % static_cast<std::uint64_t>(bound_) + 1;
        return Rational(Integer(n), Integer(d));
    }

    Rational next_nonzero() {
        while (true) {
            Rational q = next();
            if (q != 0) return q;
        }
    }

    Rational next_admissible_beta() {
        while (true) {
            Rational q = next();
            if (q != 0 && q != 3) return q;
        }
    }

    CubicParams next_params() { return CubicParams(next(), next_admissible_beta(), next()); }

    GroupElem next_group_elem() { return GroupElem(next(), next(), next_nonzero()); }

    /// k pairwise distinct rationals.
    std::vector<Rational> next_distinct(int k) {
        detail::require(k <= 2 * bound_ + 1, errc::invalid_parameter,
                        "bound too small for the requested number of distinct values");
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < k) {
            Rational q = next();
            bool seen = false;
            for (const Rational& r : out)
                if (r == q) { seen = true; break; }
            if (!seen) out.push_back(std::move(q));
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
    int bound_;
};

}  // namespace cayley
