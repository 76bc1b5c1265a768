#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "advdrive/error.hpp"

namespace advdrive::nn {

// Dense row-major array of doubles. Network parameters are kept on the f32
// grid (see quantize_f32) so checkpoints round-trip bit-exactly while all
// arithmetic runs in double.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(static_cast<size_t>(numel_of(shape)), 0.0);
  }
  static Tensor scalar(double v) {
    Tensor t(std::vector<int>{1});
    t.data[0] = v;
    return t;
  }
  static Tensor of(std::vector<int> shape, std::vector<double> values) {
    Tensor t(std::move(shape));
    if (t.data.size() != values.size()) throw ProtocolError("tensor init size mismatch");
    t.data = std::move(values);
    return t;
  }

  static long numel_of(const std::vector<int>& s) {
    long n = 1;
    for (int d : s) n *= d;
    return n;
  }
  long numel() const { return static_cast<long>(data.size()); }
  double& operator[](size_t i) { return data[i]; }
  double operator[](size_t i) const { return data[i]; }
  double item() const {
    if (data.size() != 1) throw ProtocolError("item() on non-scalar tensor");
    return data[0];
  }
  bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

inline double quantize_f32(double v) { return static_cast<double>(static_cast<float>(v)); }

inline void quantize_f32(Tensor& t) {
  for (double& v : t.data) v = quantize_f32(v);
}

inline std::string shape_str(const std::vector<int>& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

}  // namespace advdrive::nn
