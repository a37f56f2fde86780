#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "schurlab/rational.hpp"

namespace schurlab {

/// Seeded source for every randomized input. The engine is mt19937_64,
/// whose output sequence is fixed by the C++ standard; bounded integers are
/// drawn by rejection from raw 64-bit outputs, so runs reproduce across
/// platforms and standard libraries.
class SeededRng {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/rejection";

    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi);

    /// n pairwise distinct integers in [lo, hi], in draw order.
    std::vector<long> distinct_ints(std::size_t n, long lo, long hi);

    /// Uniform integer vector in [lo, hi]^n.
    std::vector<long> ints(std::size_t n, long lo, long hi);

    /// n pairwise distinct rationals k/denominator in the open interval (0,1).
    std::vector<Rational> distinct_unit_rationals(std::size_t n, long denominator = 97);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

std::vector<Rational> to_rationals(const std::vector<long>& xs);

}  // namespace schurlab
