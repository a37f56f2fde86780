#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "schurlab/determinant.hpp"
#include "schurlab/multipoly.hpp"
#include "schurlab/rational.hpp"

namespace schurlab {

/// Tuple (m_{n-1}, ..., m_1, m_0) of non-negative integers, stored weakly
/// decreasing. `increasing()` gives the (m_0, ..., m_{n-1}) view.
class PartitionTuple {
public:
    PartitionTuple() = default;
    /// Accepts parts in any order and sorts them; rejects negatives.
    explicit PartitionTuple(std::vector<int> parts);

    /// Staircase (n-1, ..., 1, 0).
    static PartitionTuple staircase(std::size_t n);

    const std::vector<int>& parts() const { return parts_; }
    std::vector<int> increasing() const { return {parts_.rbegin(), parts_.rend()}; }
    std::size_t length() const { return parts_.size(); }
    int total() const;
    bool is_strict() const;

    /// Row lengths m - staircase, top to bottom (longest first). Only
    /// meaningful for strict tuples.
    std::vector<int> shape() const;

    std::string to_string() const;

    friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
    friend auto operator<=>(const PartitionTuple&, const PartitionTuple&) = default;

private:
    std::vector<int> parts_;
};

/// All strict tuples m_{n-1} > ... > m_0 >= 0 summing to `total`, ordered by
/// decreasing m_{n-1}, then lexicographically decreasing.
std::vector<PartitionTuple> enumerate_partitions_distinct(int total, int parts);

/// Column-strict Young tableau in English convention (rows top to bottom,
/// longest first). The bottom-to-top convention with the shortest row at
/// the bottom maps to this one by reversing the row order; the row and
/// column conditions are unchanged by that relabelling of rows.
struct Tableau {
    std::vector<int> shape;
    std::vector<std::vector<int>> rows;

    /// Weakly increasing rows, strictly increasing columns, entries in 1..m.
    bool is_column_strict(int max_entry) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Every column-strict tableau of the given shape with entries in 1..m,
/// in lexicographic order of the row-major reading.
std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape, int max_entry);

/// prod_j u_j^{(number of cells equal to j)}.
MultiPoly tableau_weight(const Tableau& t, std::size_t num_vars);

enum class SchurMethod { tableaux, bialternant };

struct SchurResult {
    PartitionTuple partition;
    std::size_t num_vars = 0;
    MultiPoly value;
    SchurMethod method = SchurMethod::tableaux;
};

/// Sum of tableau weights over the shape m - staircase. Zero when parts
/// repeat.
SchurResult schur_tableaux(const PartitionTuple& m, std::size_t num_vars);

/// det(u^{m_0} | ... | u^{m_{N-1}}) / V(u) with N = num_vars = length of m.
SchurResult schur_bialternant(const PartitionTuple& m, std::size_t num_vars);

/// prod_{j<k} (u_k - u_j); one for a single coordinate.
template <class C>
C vandermonde(std::span<const C> u) {
    if (u.empty()) throw InvalidInput("vandermonde of an empty vector");
    C result = one_like(u[0]);
    for (std::size_t k = 0; k < u.size(); ++k)
        for (std::size_t j = 0; j < k; ++j) result = result * (u[k] - u[j]);
    return result;
}

/// Moment matrix (u_j^{k}) for j, k < n, whose determinant is V(u).
template <class C>
RingMatrix<C> moment_matrix(std::span<const C> u) {
    const std::size_t n = u.size();
    RingMatrix<C> m(n, one_like(u[0]));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 1; k < n; ++k) m(j, k) = m(j, k - 1) * u[j];
    return m;
}

/// The n symbolic variables u1..un of an n-variable ring.
std::vector<MultiPoly> symbolic_vector(std::size_t num_vars, std::size_t first, std::size_t count);

}  // namespace schurlab
