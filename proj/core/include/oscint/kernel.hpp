// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_KERNEL_HPP
#define OSCINT_KERNEL_HPP

#include <functional>
#include <string>
#include <vector>

#include "oscint/multipoly.hpp"

namespace oscint {

enum class Parity { Odd, Even, None };

/// Angular kernel Omega on S^{n-1}, mean-subtracted at construction so that
/// the homogeneous kernel Omega(x/|x|)/|x|^n has a principal value.
///
/// Registry ids: "sign" (n=1); "cos:m", "sin:m", "logsing[:delta]" (n=2);
/// "harmonic:l,m" (n=3, real spherical harmonics, l >= 1); "table:<path>".
class KernelSpec {
  public:
    static KernelSpec from_id(const std::string& id, int dim);
    static KernelSpec from_table_file(const std::string& path);
    static KernelSpec from_function(int dim, std::function<double(const Vec3&)> f,
                                    std::string name, bool singular = false);

    int dim() const { return dim_; }
    const std::string& id() const { return id_; }
    Parity parity() const { return parity_; }
    bool singular() const { return singular_; }

    double l1_norm() const { return l1_; }
    double llogl_norm() const { return llogl_; }
    /// |integral of Omega| after mean subtraction (should be ~0).
    double mean_residual() const { return mean_residual_; }

    /// Mean-subtracted kernel value at a unit vector.
    double operator()(const Vec3& x) const { return raw_(x) - mean_offset_; }

  private:
    KernelSpec() = default;
    void finalize();

    int dim_ = 1;
    std::string id_;
    std::function<double(const Vec3&)> raw_;
    double mean_offset_ = 0.0;
    double l1_ = 0.0;
    double llogl_ = 0.0;
    double mean_residual_ = 0.0;
    Parity parity_ = Parity::None;
    bool singular_ = false;
};

}  // namespace oscint

#endif
