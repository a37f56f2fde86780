#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurlab/deriv_profile.hpp"

namespace schurlab {

/// Checks a strictly increasing tuple l_0 < ... < l_{n-1} against the
/// definition directly: every tuple of non-negative integers with sum at most
/// sum(l) must have a repeated entry, hit a zero derivative, or equal {l} as
/// a set. Returns the first tuple (in enumeration order) that does none of
/// these, or nothing if the tuple is admissible.
template <class T>
std::optional<std::vector<int>> admissibility_witness(const std::vector<int>& tuple, const DerivProfile<T>& profile);

template <class T>
bool is_admissible(const std::vector<int>& tuple, const DerivProfile<T>& profile, int n) {
    if (static_cast<int>(tuple.size()) != n)
        throw InvalidInput("is_admissible: tuple length " + std::to_string(tuple.size()) + " != n = " +
                           std::to_string(n));
    return !admissibility_witness(tuple, profile).has_value();
}

/// Closed-form classification of the admissible tuples of length n.
struct AdmissibleClass {
    bool all_admissible = false;
    /// Orders of the n lowest nonzero derivatives (when not all admissible).
    std::vector<int> threshold;
    int threshold_sum = 0;

    /// Whether a strict tuple is admissible under this classification.
    bool admits(const std::vector<int>& tuple) const;
    std::string to_string() const;
};

/// ALL_ADMISSIBLE when f has at most n-1 nonzero derivatives; otherwise the
/// threshold tuple m (the n lowest nonzero orders): l is admissible iff
/// l == m or sum(l) < sum(m). Throws UndecidableProfile when the profile
/// neither shows n nonzero derivatives nor rules out further ones.
template <class T>
AdmissibleClass admissible_characterize(const DerivProfile<T>& profile, int n);

}  // namespace schurlab
