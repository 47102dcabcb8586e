// tensor.h
// Dense float64 tensor with optional tape tracking. A rank-0 shape {} is a
// scalar of size 1. Data is shared (copy-on-write is the caller's problem;
// ops never mutate inputs).

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "util/error.h"

namespace mcasr::ad {

class Tape;

using Shape = std::vector<int>;

int64_t numel(const Shape& shape);
std::string shape_str(const Shape& shape);

struct Tensor {
  Shape shape;
  std::shared_ptr<std::vector<double>> data;
  Tape* tape = nullptr;
  int node = -1;  // -1: not tracked

  Tensor() = default;
  Tensor(Shape s, std::vector<double> values);

  int64_t size() const { return data ? static_cast<int64_t>(data->size()) : 0; }
  int rank() const { return static_cast<int>(shape.size()); }
  bool tracked() const { return node >= 0; }
  bool defined() const { return static_cast<bool>(data); }

  const double* ptr() const { return data->data(); }
  double* ptr() { return data->data(); }
  double& operator[](int64_t i) { return (*data)[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return (*data)[static_cast<size_t>(i)]; }

  double scalar() const;  // requires size() == 1
  double at(std::initializer_list<int> idx) const;

  // Deep copy of the buffer, untracked.
  Tensor clone() const;

  static Tensor zeros(Shape s);
  static Tensor full(Shape s, double v);
  static Tensor scalar_value(double v);
  static Tensor from(Shape s, std::vector<double> v) { return Tensor(std::move(s), std::move(v)); }
};

bool same_shape(const Tensor& a, const Tensor& b);
void check_finite(const Tensor& t, const char* op);

}  // namespace mcasr::ad
