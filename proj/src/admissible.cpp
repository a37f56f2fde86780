#include "schurlab/admissible.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schurlab {

namespace {

void require_strict(const std::vector<int>& tuple) {
    if (tuple.empty()) throw InvalidInput("admissibility: empty tuple");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0) throw InvalidInput("admissibility: negative entry");
        if (i > 0 && tuple[i] <= tuple[i - 1]) throw InvalidInput("admissibility: tuple must be strictly increasing");
    }
}

}  // namespace

template <class T>
std::optional<std::vector<int>> admissibility_witness(const std::vector<int>& tuple, const DerivProfile<T>& profile) {
    require_strict(tuple);
    const int n = static_cast<int>(tuple.size());
    const int budget = std::accumulate(tuple.begin(), tuple.end(), 0);

    std::vector<int> l(static_cast<std::size_t>(n), 0);
    std::vector<int> sorted(static_cast<std::size_t>(n));
    // Odometer over all ordered tuples with sum <= budget.
    while (true) {
        sorted = l;
        std::sort(sorted.begin(), sorted.end());
        const bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
        if (!repeated) {
            const bool hits_zero = std::any_of(l.begin(), l.end(), [&](int k) { return profile.is_zero_at(k); });
            const bool same_set = sorted == tuple;
            if (!hits_zero && !same_set) return l;
        }
        int sum = std::accumulate(l.begin(), l.end(), 0);
        int i = n - 1;
        while (i >= 0) {
            if (sum < budget) {
                ++l[static_cast<std::size_t>(i)];
                break;
            }
            sum -= l[static_cast<std::size_t>(i)];
            l[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return std::nullopt;
}

template <class T>
AdmissibleClass admissible_characterize(const DerivProfile<T>& profile, int n) {
    if (n < 1) throw InvalidInput("admissible_characterize: n must be positive");
    const auto orders = profile.nonzero_orders();
    AdmissibleClass result;
    if (static_cast<int>(orders.size()) >= n) {
        result.threshold.assign(orders.begin(), orders.begin() + n);
        result.threshold_sum = std::accumulate(result.threshold.begin(), result.threshold.end(), 0);
        return result;
    }
    if (!profile.tail_zero)
        throw UndecidableProfile("profile of length " + std::to_string(profile.values.size()) + " shows only " +
                                 std::to_string(orders.size()) + " nonzero derivatives and says nothing beyond; " +
                                 "cannot tell whether f has " + std::to_string(n) + " of them");
    result.all_admissible = true;
    return result;
}

bool AdmissibleClass::admits(const std::vector<int>& tuple) const {
    require_strict(tuple);
    if (all_admissible) return true;
    if (tuple.size() != threshold.size()) throw InvalidInput("admits: tuple length differs from n");
    return tuple == threshold || std::accumulate(tuple.begin(), tuple.end(), 0) < threshold_sum;
}

std::string AdmissibleClass::to_string() const {
    if (all_admissible) return "ALL_ADMISSIBLE";
    std::ostringstream os;
    os << "threshold (";
    for (std::size_t i = 0; i < threshold.size(); ++i) os << (i ? "," : "") << threshold[i];
    os << "), sum " << threshold_sum;
    return os.str();
}

template std::optional<std::vector<int>> admissibility_witness(const std::vector<int>&, const DerivProfile<Rational>&);
template std::optional<std::vector<int>> admissibility_witness(const std::vector<int>&, const DerivProfile<double>&);
template AdmissibleClass admissible_characterize(const DerivProfile<Rational>&, int);
template AdmissibleClass admissible_characterize(const DerivProfile<double>&, int);

}  // namespace schurlab
