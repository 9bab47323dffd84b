/*
 * tensor3.hpp
 * -----------
 * Dense rank-3 rational tensors. Houses every structure-constant and
 * costructure-constant grid in the library, plus three-slot YBE defects.
 */
#pragma once

#include <array>
#include <vector>

#include "loday/errors.hpp"
#include "loday/rational.hpp"

namespace loday {

class Tensor3 {
public:
    Tensor3() : d_{0, 0, 0} {}
    Tensor3(int n1, int n2, int n3)
        : d_{n1, n2, n3},
          a_(static_cast<size_t>(n1) * static_cast<size_t>(n2) * static_cast<size_t>(n3),
             Scalar(0)) {
        if (n1 < 0 || n2 < 0 || n3 < 0) throw ContractViolation("negative tensor dimension");
    }
    static Tensor3 cube(int n) { return Tensor3(n, n, n); }

    const std::array<int, 3>& dims() const { return d_; }
    int dim(int axis) const { return d_[static_cast<size_t>(axis)]; }

    Scalar& at(int i, int j, int k) {
        return a_[(static_cast<size_t>(i) * d_[1] + j) * d_[2] + k];
    }
    const Scalar& at(int i, int j, int k) const {
        return a_[(static_cast<size_t>(i) * d_[1] + j) * d_[2] + k];
    }

    bool operator==(const Tensor3& o) const { return d_ == o.d_ && a_ == o.a_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Tensor3 operator+(const Tensor3& o) const {
        require_same_shape(o);
        Tensor3 r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Tensor3 operator-(const Tensor3& o) const {
        require_same_shape(o);
        Tensor3 r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    Tensor3 operator-() const {
        Tensor3 r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

private:
    void require_same_shape(const Tensor3& o) const {
        if (d_ != o.d_) throw ContractViolation("tensor3 shape mismatch");
    }

    std::array<int, 3> d_;
    std::vector<Scalar> a_;
};

}  // namespace loday
