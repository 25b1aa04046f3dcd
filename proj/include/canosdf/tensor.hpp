#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace canosdf {

using Shape = std::vector<int64_t>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

// Dense row-major (C-order) array of doubles. All pipeline quantities are
// 64-bit; gradient checks need the precision and the problems are desk scale.
class Tensor {
public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> data);

  static Tensor scalar(double v) { return Tensor(Shape{1}, {v}); }
  static Tensor zeros(Shape shape) { return Tensor(std::move(shape), 0.0); }
  static Tensor full(Shape shape, double v) { return Tensor(std::move(shape), v); }

  const Shape& shape() const { return shape_; }
  int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
  int64_t dim(int64_t i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool is_scalar() const { return data_.size() == 1; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // Leading-dims-as-batch view helpers: collapse all but the last axis.
  int64_t last_dim() const { return shape_.empty() ? 1 : shape_.back(); }
  int64_t batch_rows() const { return last_dim() == 0 ? 0 : numel() / last_dim(); }

  bool all_finite() const;
  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

private:
  Shape shape_;
  std::vector<double> data_;
};

}  // namespace canosdf
