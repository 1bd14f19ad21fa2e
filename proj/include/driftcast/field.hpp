#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace driftcast {

/// Flat 2-D array, row-major with j (x-index) fastest: element (j,k) lives at k*nx + j.
/// This layout is part of the snapshot byte format, do not change it.
template <typename T>
class Field2D {
public:
    Field2D() = default;
    Field2D(int nx, int ny, T fill = T{})
        : nx_(nx), ny_(ny), data_(static_cast<std::size_t>(nx) * ny, fill) {
        if (nx <= 0 || ny <= 0)
            throw std::invalid_argument("Field2D: non-positive extent");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    std::size_t size() const { return data_.size(); }

    T& operator()(int j, int k) { return data_[idx(j, k)]; }
    const T& operator()(int j, int k) const { return data_[idx(j, k)]; }

    /// Periodic access; j,k may be any integers.
    T& wrap(int j, int k) { return data_[idx(mod(j, nx_), mod(k, ny_))]; }
    const T& wrap(int j, int k) const { return data_[idx(mod(j, nx_), mod(k, ny_))]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

    void fill(T v) { data_.assign(data_.size(), v); }

    static int mod(int a, int n) {
        int r = a % n;
        return r < 0 ? r + n : r;
    }

    bool same_shape(const Field2D& o) const { return nx_ == o.nx_ && ny_ == o.ny_; }

private:
    std::size_t idx(int j, int k) const {
        return static_cast<std::size_t>(k) * nx_ + j;
    }

    int nx_ = 0, ny_ = 0;
    std::vector<T> data_;
};

using FieldF = Field2D<float>;
using FieldD = Field2D<double>;

} // namespace driftcast
