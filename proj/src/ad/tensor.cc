#include "ad/tensor.h"

#include <cmath>
#include <sstream>

namespace mcasr::ad {

int64_t numel(const Shape& shape) {
  int64_t n = 1;
  for (int d : shape) n *= d;
  return n;
}

std::string shape_str(const Shape& shape) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ',';
    os << shape[i];
  }
  os << ')';
  return os.str();
}

Tensor::Tensor(Shape s, std::vector<double> values)
    : shape(std::move(s)), data(std::make_shared<std::vector<double>>(std::move(values))) {
  if (numel(shape) != static_cast<int64_t>(data->size())) {
    throw ShapeError("tensor: data length " + std::to_string(data->size()) +
                     " does not match shape " + shape_str(shape));
  }
}

double Tensor::scalar() const {
  if (size() != 1) throw ShapeError("scalar() on tensor of shape " + shape_str(shape));
  return (*data)[0];
}

double Tensor::at(std::initializer_list<int> idx) const {
  if (static_cast<int>(idx.size()) != rank()) {
    throw ShapeError("at(): index rank mismatch for shape " + shape_str(shape));
  }
  int64_t off = 0;
  int axis = 0;
  for (int i : idx) {
    off = off * shape[axis] + i;
    ++axis;
  }
  return (*data)[static_cast<size_t>(off)];
}

Tensor Tensor::clone() const {
  Tensor t;
  t.shape = shape;
  t.data = std::make_shared<std::vector<double>>(*data);
  return t;
}

Tensor Tensor::zeros(Shape s) {
  auto n = numel(s);
  return Tensor(std::move(s), std::vector<double>(static_cast<size_t>(n), 0.0));
}

Tensor Tensor::full(Shape s, double v) {
  auto n = numel(s);
  return Tensor(std::move(s), std::vector<double>(static_cast<size_t>(n), v));
}

Tensor Tensor::scalar_value(double v) { return Tensor(Shape{}, std::vector<double>{v}); }

bool same_shape(const Tensor& a, const Tensor& b) { return a.shape == b.shape; }

void check_finite(const Tensor& t, const char* op) {
  for (double v : *t.data) {
    if (!std::isfinite(v)) {
      throw NumericalError(std::string(op) + ": non-finite value produced");
    }
  }
}

}  // namespace mcasr::ad
