#pragma once

#include <functional>

#include "advdrive/tensor.hpp"

namespace advdrive::nn {

// Dynamic reverse-mode tape. Build the graph forward with the op functions
// below, then call backward(loss) and read grad(node). Node values stay
// alive on the tape, so backward closures capture node ids only.
class Tape {
 public:
  using BackwardFn = std::function<void(Tape&, int self, const Tensor& upstream)>;

  int constant(Tensor value) { return make_node(std::move(value), nullptr); }

  int make_node(Tensor value, BackwardFn back) {
    nodes_.push_back(Node{std::move(value), std::move(back)});
    return static_cast<int>(nodes_.size()) - 1;
  }

  const Tensor& value(int id) const { return nodes_[id].value; }
  size_t size() const { return nodes_.size(); }

  void backward(int loss);

  bool has_grad(int id) const { return !grads_[id].data.empty(); }
  const Tensor& grad(int id) const;

  // Accumulation helpers for backward fns.
  Tensor& grad_buffer(int id);
  void add_grad(int id, const Tensor& g);

 private:
  struct Node {
    Tensor value;
    BackwardFn back;
  };
  std::vector<Node> nodes_;
  std::vector<Tensor> grads_;
};

// --- graph ops -------------------------------------------------------------

// x: [H,W,C]; w: [K,K,C,F]; b: [F]; valid padding -> [(H-K)/stride+1, ..., F]
int conv2d(Tape& t, int x, int w, int b, int stride);
// x: [N]; w: [M,N]; b: [M] -> [M]
int dense(Tape& t, int x, int w, int b);
int relu(Tape& t, int x);
int tanh_op(Tape& t, int x);
int flatten(Tape& t, int x);
int concat(Tape& t, int a, int b);  // 1-D
int add(Tape& t, int a, int b);     // same shape
int sub(Tape& t, int a, int b);
int mul(Tape& t, int a, int b);     // elementwise
int add_scalar(Tape& t, int a, double s);
int mul_scalar(Tape& t, int a, double s);
int sum(Tape& t, int x);  // -> scalar
int square(Tape& t, int x);
int exp_op(Tape& t, int x);
int clamp_op(Tape& t, int x, double lo, double hi);  // zero grad outside [lo,hi]
int min_op(Tape& t, int a, int b);                   // elementwise; ties keep a
int huber(Tape& t, int x, double delta);
int pick(Tape& t, int x, int index);  // single element -> scalar
int log_softmax(Tape& t, int x);

}  // namespace advdrive::nn
