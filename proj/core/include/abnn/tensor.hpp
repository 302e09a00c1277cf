#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace abnn {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);  // "[2,3]"

// Dense row-major tensor of 64-bit floats. The grad slot is populated only
// for leaves marked requires_grad once a backward pass has run.
struct Tensor {
  Shape shape;
  std::vector<double> data;
  bool requires_grad = false;
  std::vector<double> grad;

  Tensor() = default;
  Tensor(Shape s, std::vector<double> values);

  static Tensor zeros(const Shape& s);
  static Tensor full(const Shape& s, double value);
  static Tensor scalar(double value);
  static Tensor vec(std::vector<double> values);  // shape [n]
  static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  bool is_scalar() const { return data.size() == 1; }
  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  // 2-D accessors; only valid for rank-2 tensors.
  std::size_t rows() const;
  std::size_t cols() const;
  double& at(std::size_t r, std::size_t c) { return data[r * shape[1] + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * shape[1] + c]; }

  bool all_finite() const;
  void ensure_grad();  // allocate a zeroed grad slot if missing
  void zero_grad();
};

}  // namespace abnn
