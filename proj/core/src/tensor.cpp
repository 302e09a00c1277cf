#include "abnn/tensor.hpp"

#include <cmath>

#include "abnn/error.hpp"

namespace abnn {

std::size_t shape_numel(const Shape& s) {
  std::size_t n = 1;
  for (auto e : s) n *= e;
  return n;
}

std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

Tensor::Tensor(Shape s, std::vector<double> values) : shape(std::move(s)), data(std::move(values)) {
  if (shape_numel(shape) != data.size()) {
    throw Error("Tensor: shape " + shape_str(shape) + " does not match " +
                    std::to_string(data.size()) + " values",
                Error::Code::Shape);
  }
  for (auto e : shape) {
    if (e == 0) throw Error("Tensor: zero extent in shape " + shape_str(shape), Error::Code::Shape);
  }
}

Tensor Tensor::zeros(const Shape& s) { return Tensor(s, std::vector<double>(shape_numel(s), 0.0)); }

Tensor Tensor::full(const Shape& s, double value) {
  return Tensor(s, std::vector<double>(shape_numel(s), value));
}

Tensor Tensor::scalar(double value) { return Tensor({1}, {value}); }

Tensor Tensor::vec(std::vector<double> values) {
  Shape s{values.size()};
  return Tensor(std::move(s), std::move(values));
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols, std::vector<double> values) {
  return Tensor({rows, cols}, std::move(values));
}

std::size_t Tensor::rows() const {
  if (rank() != 2) throw Error("Tensor::rows on shape " + shape_str(shape), Error::Code::Shape);
  return shape[0];
}

std::size_t Tensor::cols() const {
  if (rank() != 2) throw Error("Tensor::cols on shape " + shape_str(shape), Error::Code::Shape);
  return shape[1];
}

bool Tensor::all_finite() const {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Tensor::ensure_grad() {
  if (grad.size() != data.size()) grad.assign(data.size(), 0.0);
}

void Tensor::zero_grad() { grad.assign(data.size(), 0.0); }

}  // namespace abnn
