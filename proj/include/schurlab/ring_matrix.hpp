#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schurlab/errors.hpp"
#include "schurlab/trunc_series.hpp"

namespace schurlab {

/// Square matrix over one ring carrier, stored row-major.
template <class T>
class RingMatrix {
public:
    using value_type = T;

    RingMatrix(std::size_t n, const T& fill) : n_(n), entries_(n * n, fill) {}

    explicit RingMatrix(std::vector<std::vector<T>> rows) : n_(rows.size()) {
        entries_.reserve(n_ * n_);
        for (auto& row : rows) {
            if (row.size() != n_) throw DimensionMismatch("RingMatrix: rows must form a square array");
            for (auto& x : row) entries_.push_back(std::move(x));
        }
        check_uniform();
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t j, std::size_t k) { return entries_[j * n_ + k]; }
    const T& operator()(std::size_t j, std::size_t k) const { return entries_[j * n_ + k]; }
    const std::vector<T>& entries() const { return entries_; }

    bool is_symmetric() const {
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = j + 1; k < n_; ++k)
                if (!((*this)(j, k) == (*this)(k, j))) return false;
        return true;
    }

    RingMatrix transpose() const {
        RingMatrix out = *this;
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) out(j, k) = (*this)(k, j);
        return out;
    }

    /// Leading principal submatrix of size m.
    RingMatrix leading(std::size_t m) const {
        if (m > n_) throw InvalidInput("leading: submatrix larger than the matrix");
        RingMatrix out(m, entries_.empty() ? T{} : entries_[0]);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) out(j, k) = (*this)(j, k);
        return out;
    }

    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

private:
    void check_uniform() const {
        if constexpr (requires(const T& x) { x.cutoff(); }) {
            for (const auto& x : entries_)
                if (x.cutoff() != entries_.front().cutoff())
                    throw DimensionMismatch("RingMatrix: series entries must share one cutoff");
        }
        if constexpr (requires(const T& x) { x.num_vars(); }) {
            for (const auto& x : entries_)
                if (x.num_vars() != entries_.front().num_vars())
                    throw DimensionMismatch("RingMatrix: polynomial entries must share one variable count");
        }
    }

    std::size_t n_ = 0;
    std::vector<T> entries_;
};

}  // namespace schurlab
