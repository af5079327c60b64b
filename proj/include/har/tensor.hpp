#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <string>
#include <vector>

#include "har/errors.hpp"

namespace har {

using Shape = std::vector<int>;

using MatRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<MatRM>;
using CMapMat = Eigen::Map<const MatRM>;

std::string shape_str(const Shape& s);

// Dense fp64 value with flat row-major storage and an optional gradient
// buffer of the same size. The gradient is allocated lazily on first
// accumulation.
struct Tensor {
    Shape shape;
    Eigen::ArrayXd data;   // numel() entries, row-major
    Eigen::ArrayXd grad;   // empty until accumulated into
    bool requires_grad = false;

    Tensor() = default;

    static Tensor zeros(Shape s);
    static Tensor full(Shape s, double v);
    static Tensor scalar(double v);
    static Tensor from(Shape s, std::initializer_list<double> vals);
    static Tensor from_vec(Shape s, const std::vector<double>& vals);

    int rank() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
    Eigen::Index numel() const { return data.size(); }
    bool is_scalar() const { return numel() == 1; }

    double& at(Eigen::Index i) { return data[i]; }
    double at(Eigen::Index i) const { return data[i]; }

    // 2-D view of the flat buffer (rows*cols must equal numel()).
    MapMat mat(Eigen::Index rows, Eigen::Index cols);
    CMapMat mat(Eigen::Index rows, Eigen::Index cols) const;
    MapMat grad_mat(Eigen::Index rows, Eigen::Index cols);

    void ensure_grad();
    void add_grad(const Eigen::ArrayXd& g);
    void zero_grad();
};

// Shape sanity used across ops: every dim positive, product equals data size.
void check_tensor(const Tensor& t, const char* what);

// Named trainable value; models keep these in declaration order, which is
// also the checkpoint order.
struct Parameter {
    std::string name;
    Tensor tensor;
};

}  // namespace har
