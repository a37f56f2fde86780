#include "schurlab/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace schurlab {

PartitionTuple::PartitionTuple(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw InvalidInput("partition parts must be non-negative");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

PartitionTuple PartitionTuple::staircase(std::size_t n) {
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i) parts[i] = static_cast<int>(n - 1 - i);
    return PartitionTuple(std::move(parts));
}

int PartitionTuple::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool PartitionTuple::is_strict() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::vector<int> PartitionTuple::shape() const {
    const std::size_t n = parts_.size();
    std::vector<int> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = parts_[i] - static_cast<int>(n - 1 - i);
    return rows;
}

std::string PartitionTuple::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::vector<PartitionTuple> enumerate_partitions_distinct(int total, int parts) {
    if (parts < 1) throw InvalidInput("enumerate_partitions_distinct: need at least one part");
    std::vector<PartitionTuple> out;
    if (total < 0) return out;
    std::vector<int> current;
    // Choose parts from the largest down; slot i (0-based from the top)
    // still needs `left` further strictly smaller parts >= 0 below it.
    std::function<void(int, int)> place = [&](int remaining, int upper) {
        const int left = parts - static_cast<int>(current.size());
        if (left == 0) {
            if (remaining == 0) out.emplace_back(current);
            return;
        }
        // Smallest possible sum for `left` distinct parts: 0 + 1 + ... + (left-1).
        const int min_rest = left * (left - 1) / 2;
        for (int p = std::min(upper, remaining); p >= left - 1; --p) {
            if (remaining - p < min_rest - (left - 1)) continue;
            // remaining parts below p: at most (p-1) + ... + (p-left+1)
            const long max_rest = static_cast<long>(left - 1) * (2L * p - left) / 2;
            if (remaining - p > max_rest) break;
            current.push_back(p);
            place(remaining - p, p - 1);
            current.pop_back();
        }
    };
    place(total, total);
    return out;
}

bool Tableau::is_column_strict(int max_entry) const {
    if (rows.size() != shape.size()) return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape[r]) return false;
        if (r > 0 && shape[r] > shape[r - 1]) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int x = rows[r][c];
            if (x < 1 || x > max_entry) return false;
            if (c > 0 && rows[r][c - 1] > x) return false;
            if (r > 0 && rows[r - 1][c] >= x) return false;
        }
    }
    return true;
}

std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape, int max_entry) {
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] < 0) throw InvalidInput("enumerate_ssyt: negative row length");
        if (r > 0 && shape[r] > shape[r - 1]) throw InvalidInput("enumerate_ssyt: shape must be weakly decreasing");
    }
    std::vector<int> rows_shape = shape;
    while (!rows_shape.empty() && rows_shape.back() == 0) rows_shape.pop_back();

    Tableau t{shape, {}};
    for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);

    // Column-by-column fill, top to bottom within a column. Cell (r, c) is
    // bounded below by its left neighbour and by one more than the cell
    // above; a cell in row r also needs room for the rows beneath it in
    // the same column (column height h leaves max_entry - (h-1-r) as cap).
    std::vector<std::pair<int, int>> cells;
    const int width = rows_shape.empty() ? 0 : rows_shape.front();
    std::vector<int> column_height(static_cast<std::size_t>(width), 0);
    for (int c = 0; c < width; ++c) {
        for (std::size_t r = 0; r < rows_shape.size() && rows_shape[r] > c; ++r) {
            cells.emplace_back(static_cast<int>(r), c);
            ++column_height[static_cast<std::size_t>(c)];
        }
    }

    std::vector<Tableau> out;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            out.push_back(t);
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
        const int hi = max_entry - (column_height[static_cast<std::size_t>(c)] - 1 - r);
        for (int x = lo; x <= hi; ++x) {
            t.rows[r][c] = x;
            fill(idx + 1);
        }
        t.rows[r][c] = 0;
    };
    fill(0);
    std::sort(out.begin(), out.end());
    return out;
}

MultiPoly tableau_weight(const Tableau& t, std::size_t num_vars) {
    Exponent e(num_vars, 0);
    for (const auto& row : t.rows) {
        for (int x : row) {
            if (x < 1 || static_cast<std::size_t>(x) > num_vars)
                throw InvalidInput("tableau_weight: entry " + std::to_string(x) + " outside 1.." +
                                   std::to_string(num_vars));
            ++e[static_cast<std::size_t>(x - 1)];
        }
    }
    return MultiPoly::monomial(e, Rational(1));
}

SchurResult schur_tableaux(const PartitionTuple& m, std::size_t num_vars) {
    SchurResult result{m, num_vars, MultiPoly(num_vars), SchurMethod::tableaux};
    if (m.length() == 0) throw InvalidInput("schur_tableaux: empty tuple");
    if (!m.is_strict()) return result;
    // A strict tuple with a negative shaped row would need a part below the
    // staircase, which a strict non-negative tuple cannot have.
    const std::vector<int> shape = m.shape();
    for (const auto& t : enumerate_ssyt(shape, static_cast<int>(num_vars))) result.value += tableau_weight(t, num_vars);
    return result;
}

std::vector<MultiPoly> symbolic_vector(std::size_t num_vars, std::size_t first, std::size_t count) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(MultiPoly::variable(num_vars, first + i));
    return out;
}

SchurResult schur_bialternant(const PartitionTuple& m, std::size_t num_vars) {
    if (num_vars != m.length())
        throw InvalidInput("schur_bialternant: needs as many variables as parts (" + std::to_string(m.length()) + ")");
    SchurResult result{m, num_vars, MultiPoly(num_vars), SchurMethod::bialternant};
    const std::vector<MultiPoly> u = symbolic_vector(num_vars, 0, num_vars);
    const std::vector<int> exps = m.increasing();

    RingMatrix<MultiPoly> alt(num_vars, MultiPoly(num_vars));
    for (std::size_t j = 0; j < num_vars; ++j)
        for (std::size_t k = 0; k < num_vars; ++k) alt(j, k) = pow(u[j], static_cast<unsigned>(exps[k]));
    const MultiPoly numerator = det_laplace(alt);
    const MultiPoly v = vandermonde(std::span<const MultiPoly>(u));
    result.value = poly_divide_exact(numerator, v);
    return result;
}

}  // namespace schurlab
