#include "har/tensor.hpp"

#include <numeric>
#include <sstream>

namespace har {

std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << "x";
        os << s[i];
    }
    os << "]";
    return os.str();
}

static Eigen::Index shape_numel(const Shape& s) {
    Eigen::Index n = 1;
    for (int d : s) {
        if (d <= 0) throw ShapeError("tensor dimension must be positive, got shape " + shape_str(s));
        n *= d;
    }
    return n;
}

Tensor Tensor::zeros(Shape s) {
    Tensor t;
    t.data = Eigen::ArrayXd::Zero(shape_numel(s));
    t.shape = std::move(s);
    return t;
}

Tensor Tensor::full(Shape s, double v) {
    Tensor t = zeros(std::move(s));
    t.data.setConstant(v);
    return t;
}

Tensor Tensor::scalar(double v) {
    Tensor t;
    t.shape = {1};
    t.data = Eigen::ArrayXd::Constant(1, v);
    return t;
}

Tensor Tensor::from(Shape s, std::initializer_list<double> vals) {
    Tensor t = zeros(std::move(s));
    if (static_cast<Eigen::Index>(vals.size()) != t.numel())
        throw ShapeError("initializer has " + std::to_string(vals.size()) + " values for shape " +
                         shape_str(t.shape));
    Eigen::Index i = 0;
    for (double v : vals) t.data[i++] = v;
    return t;
}

Tensor Tensor::from_vec(Shape s, const std::vector<double>& vals) {
    Tensor t = zeros(std::move(s));
    if (static_cast<Eigen::Index>(vals.size()) != t.numel())
        throw ShapeError("vector has " + std::to_string(vals.size()) + " values for shape " +
                         shape_str(t.shape));
    for (Eigen::Index i = 0; i < t.numel(); ++i) t.data[i] = vals[static_cast<std::size_t>(i)];
    return t;
}

MapMat Tensor::mat(Eigen::Index rows, Eigen::Index cols) {
    if (rows * cols != numel())
        throw ShapeError("matrix view " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " does not cover tensor " + shape_str(shape));
    return MapMat(data.data(), rows, cols);
}

CMapMat Tensor::mat(Eigen::Index rows, Eigen::Index cols) const {
    if (rows * cols != numel())
        throw ShapeError("matrix view " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " does not cover tensor " + shape_str(shape));
    return CMapMat(data.data(), rows, cols);
}

MapMat Tensor::grad_mat(Eigen::Index rows, Eigen::Index cols) {
    ensure_grad();
    return MapMat(grad.data(), rows, cols);
}

void Tensor::ensure_grad() {
    if (grad.size() != data.size()) grad = Eigen::ArrayXd::Zero(data.size());
}

void Tensor::add_grad(const Eigen::ArrayXd& g) {
    if (g.size() != data.size())
        throw ShapeError("gradient size " + std::to_string(g.size()) + " does not match tensor " +
                         shape_str(shape));
    ensure_grad();
    grad += g;
}

void Tensor::zero_grad() {
    if (grad.size()) grad.setZero();
}

void check_tensor(const Tensor& t, const char* what) {
    if (shape_numel(t.shape) != t.numel())
        throw ShapeError(std::string(what) + ": data length does not match shape " + shape_str(t.shape));
}

}  // namespace har
