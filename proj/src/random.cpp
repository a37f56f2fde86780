#include "schurlab/random.hpp"

#include <algorithm>
#include <limits>

#include "schurlab/errors.hpp"

namespace schurlab {

long SeededRng::uniform_int(long lo, long hi) {
    if (lo > hi) throw InvalidInput("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<long>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

std::vector<long> SeededRng::distinct_ints(std::size_t n, long lo, long hi) {
    if (static_cast<std::uint64_t>(hi - lo) + 1 < n) throw InvalidInput("distinct_ints: range too small");
    std::vector<long> out;
    while (out.size() < n) {
        const long x = uniform_int(lo, hi);
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
}

std::vector<long> SeededRng::ints(std::size_t n, long lo, long hi) {
    std::vector<long> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(uniform_int(lo, hi));
    return out;
}

std::vector<Rational> SeededRng::distinct_unit_rationals(std::size_t n, long denominator) {
    std::vector<Rational> out;
    for (long k : distinct_ints(n, 1, denominator - 1)) out.emplace_back(k, denominator);
    return out;
}

std::vector<Rational> to_rationals(const std::vector<long>& xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace schurlab
