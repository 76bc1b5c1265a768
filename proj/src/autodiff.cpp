#include "advdrive/autodiff.hpp"

#include <algorithm>
#include <cmath>

namespace advdrive::nn {

void Tape::backward(int loss) {
  if (value(loss).numel() != 1) throw ProtocolError("backward() needs a scalar loss");
  grads_.assign(nodes_.size(), Tensor{});
  grads_[loss] = Tensor::scalar(1.0);
  for (int id = static_cast<int>(nodes_.size()) - 1; id >= 0; --id) {
    if (grads_[id].data.empty() || !nodes_[id].back) continue;
    nodes_[id].back(*this, id, grads_[id]);
  }
}

const Tensor& Tape::grad(int id) const {
  if (grads_[id].data.empty()) throw ProtocolError("no gradient at node");
  return grads_[id];
}

Tensor& Tape::grad_buffer(int id) {
  if (grads_[id].data.empty()) grads_[id] = Tensor(nodes_[id].value.shape);
  return grads_[id];
}

void Tape::add_grad(int id, const Tensor& g) {
  Tensor& buf = grad_buffer(id);
  for (size_t i = 0; i < buf.data.size(); ++i) buf.data[i] += g.data[i];
}

namespace {

struct ConvDims {
  int h, w, c, k, f, stride, oh, ow;
};

ConvDims conv_dims(const Tensor& x, const Tensor& w, int stride) {
  if (x.shape.size() != 3 || w.shape.size() != 4) throw ProtocolError("conv2d shape ranks");
  ConvDims d{x.shape[0], x.shape[1], x.shape[2], w.shape[0], w.shape[3], stride, 0, 0};
  if (w.shape[1] != d.k || w.shape[2] != d.c) throw ProtocolError("conv2d kernel shape");
  if ((d.h - d.k) % stride != 0 || (d.w - d.k) % stride != 0) {
    throw ProtocolError("conv2d input " + shape_str(x.shape) + " not divisible by stride");
  }
  d.oh = (d.h - d.k) / stride + 1;
  d.ow = (d.w - d.k) / stride + 1;
  return d;
}

}  // namespace

int conv2d(Tape& t, int x, int w, int b, int stride) {
  const Tensor& xv = t.value(x);
  const Tensor& wv = t.value(w);
  const Tensor& bv = t.value(b);
  const ConvDims d = conv_dims(xv, wv, stride);
  Tensor out({d.oh, d.ow, d.f});
  for (int oh = 0; oh < d.oh; ++oh) {
    for (int ow = 0; ow < d.ow; ++ow) {
      for (int f = 0; f < d.f; ++f) {
        double acc = bv.data[f];
        for (int kh = 0; kh < d.k; ++kh) {
          for (int kw = 0; kw < d.k; ++kw) {
            const int ih = oh * stride + kh;
            const int iw = ow * stride + kw;
            const size_t xbase = (static_cast<size_t>(ih) * d.w + iw) * d.c;
            const size_t wbase = ((static_cast<size_t>(kh) * d.k + kw) * d.c) * d.f + f;
            for (int c = 0; c < d.c; ++c) {
              acc += xv.data[xbase + c] * wv.data[wbase + static_cast<size_t>(c) * d.f];
            }
          }
        }
        out.data[(static_cast<size_t>(oh) * d.ow + ow) * d.f + f] = acc;
      }
    }
  }
  return t.make_node(std::move(out), [x, w, b, stride](Tape& tp, int, const Tensor& g) {
    const Tensor& xv = tp.value(x);
    const Tensor& wv = tp.value(w);
    const ConvDims d = conv_dims(xv, wv, stride);
    Tensor& gx = tp.grad_buffer(x);
    Tensor& gw = tp.grad_buffer(w);
    Tensor& gb = tp.grad_buffer(b);
    for (int oh = 0; oh < d.oh; ++oh) {
      for (int ow = 0; ow < d.ow; ++ow) {
        for (int f = 0; f < d.f; ++f) {
          const double go = g.data[(static_cast<size_t>(oh) * d.ow + ow) * d.f + f];
          if (go == 0.0) continue;
          gb.data[f] += go;
          for (int kh = 0; kh < d.k; ++kh) {
            for (int kw = 0; kw < d.k; ++kw) {
              const int ih = oh * stride + kh;
              const int iw = ow * stride + kw;
              const size_t xbase = (static_cast<size_t>(ih) * d.w + iw) * d.c;
              const size_t wbase = ((static_cast<size_t>(kh) * d.k + kw) * d.c) * d.f + f;
              for (int c = 0; c < d.c; ++c) {
                gx.data[xbase + c] += go * wv.data[wbase + static_cast<size_t>(c) * d.f];
                gw.data[wbase + static_cast<size_t>(c) * d.f] += go * xv.data[xbase + c];
              }
            }
          }
        }
      }
    }
  });
}

int dense(Tape& t, int x, int w, int b) {
  const Tensor& xv = t.value(x);
  const Tensor& wv = t.value(w);
  const Tensor& bv = t.value(b);
  if (wv.shape.size() != 2) throw ProtocolError("dense weight rank");
  const int out_dim = wv.shape[0];
  const int in_dim = wv.shape[1];
  if (xv.numel() != in_dim || bv.numel() != out_dim) {
    throw ProtocolError("dense shape mismatch: x " + shape_str(xv.shape) + " w " +
                        shape_str(wv.shape));
  }
  Tensor out({out_dim});
  for (int o = 0; o < out_dim; ++o) {
    double acc = bv.data[o];
    const size_t row = static_cast<size_t>(o) * in_dim;
    for (int i = 0; i < in_dim; ++i) acc += wv.data[row + i] * xv.data[i];
    out.data[o] = acc;
  }
  return t.make_node(std::move(out), [x, w, b, out_dim, in_dim](Tape& tp, int, const Tensor& g) {
    const Tensor& xv = tp.value(x);
    const Tensor& wv = tp.value(w);
    Tensor& gx = tp.grad_buffer(x);
    Tensor& gw = tp.grad_buffer(w);
    Tensor& gb = tp.grad_buffer(b);
    for (int o = 0; o < out_dim; ++o) {
      const double go = g.data[o];
      if (go == 0.0) continue;
      gb.data[o] += go;
      const size_t row = static_cast<size_t>(o) * in_dim;
      for (int i = 0; i < in_dim; ++i) {
        gx.data[i] += go * wv.data[row + i];
        gw.data[row + i] += go * xv.data[i];
      }
    }
  });
}

int relu(Tape& t, int x) {
  Tensor out = t.value(x);
  for (double& v : out.data) v = std::max(v, 0.0);
  return t.make_node(std::move(out), [x](Tape& tp, int self, const Tensor& g) {
    const Tensor& xv = tp.value(x);
    Tensor& gx = tp.grad_buffer(x);
    for (size_t i = 0; i < g.data.size(); ++i) {
      if (xv.data[i] > 0.0) gx.data[i] += g.data[i];
    }
    (void)self;
  });
}

int tanh_op(Tape& t, int x) {
  Tensor out = t.value(x);
  for (double& v : out.data) v = std::tanh(v);
  return t.make_node(std::move(out), [x](Tape& tp, int self, const Tensor& g) {
    const Tensor& y = tp.value(self);
    Tensor& gx = tp.grad_buffer(x);
    for (size_t i = 0; i < g.data.size(); ++i) {
      gx.data[i] += g.data[i] * (1.0 - y.data[i] * y.data[i]);
    }
  });
}

int flatten(Tape& t, int x) {
  Tensor out = t.value(x);
  out.shape = {static_cast<int>(out.data.size())};
  return t.make_node(std::move(out), [x](Tape& tp, int, const Tensor& g) {
    Tensor& gx = tp.grad_buffer(x);
    for (size_t i = 0; i < g.data.size(); ++i) gx.data[i] += g.data[i];
  });
}

int concat(Tape& t, int a, int b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  Tensor out({static_cast<int>(av.numel() + bv.numel())});
  std::copy(av.data.begin(), av.data.end(), out.data.begin());
  std::copy(bv.data.begin(), bv.data.end(), out.data.begin() + av.numel());
  const long na = av.numel();
  return t.make_node(std::move(out), [a, b, na](Tape& tp, int, const Tensor& g) {
    Tensor& ga = tp.grad_buffer(a);
    Tensor& gb = tp.grad_buffer(b);
    for (long i = 0; i < na; ++i) ga.data[i] += g.data[i];
    for (size_t i = na; i < g.data.size(); ++i) gb.data[i - na] += g.data[i];
  });
}

namespace {

int binary_op(Tape& t, int a, int b, double (*fwd)(double, double),
              void (*bwd)(double av, double bv, double g, double& ga, double& gb)) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  if (!av.same_shape(bv)) throw ProtocolError("elementwise op shape mismatch");
  Tensor out(av.shape);
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = fwd(av.data[i], bv.data[i]);
  return t.make_node(std::move(out), [a, b, bwd](Tape& tp, int, const Tensor& g) {
    const Tensor& av = tp.value(a);
    const Tensor& bv = tp.value(b);
    Tensor& ga = tp.grad_buffer(a);
    Tensor& gb = tp.grad_buffer(b);
    for (size_t i = 0; i < g.data.size(); ++i) {
      bwd(av.data[i], bv.data[i], g.data[i], ga.data[i], gb.data[i]);
    }
  });
}

}  // namespace

int add(Tape& t, int a, int b) {
  return binary_op(
      t, a, b, [](double x, double y) { return x + y; },
      [](double, double, double g, double& ga, double& gb) {
        ga += g;
        gb += g;
      });
}

int sub(Tape& t, int a, int b) {
  return binary_op(
      t, a, b, [](double x, double y) { return x - y; },
      [](double, double, double g, double& ga, double& gb) {
        ga += g;
        gb -= g;
      });
}

int mul(Tape& t, int a, int b) {
  return binary_op(
      t, a, b, [](double x, double y) { return x * y; },
      [](double x, double y, double g, double& ga, double& gb) {
        ga += g * y;
        gb += g * x;
      });
}

int min_op(Tape& t, int a, int b) {
  return binary_op(
      t, a, b, [](double x, double y) { return x <= y ? x : y; },
      [](double x, double y, double g, double& ga, double& gb) {
        if (x <= y) {
          ga += g;
        } else {
          gb += g;
        }
      });
}

int add_scalar(Tape& t, int a, double s) {
  Tensor out = t.value(a);
  for (double& v : out.data) v += s;
  return t.make_node(std::move(out), [a](Tape& tp, int, const Tensor& g) { tp.add_grad(a, g); });
}

int mul_scalar(Tape& t, int a, double s) {
  Tensor out = t.value(a);
  for (double& v : out.data) v *= s;
  return t.make_node(std::move(out), [a, s](Tape& tp, int, const Tensor& g) {
    Tensor& ga = tp.grad_buffer(a);
    for (size_t i = 0; i < g.data.size(); ++i) ga.data[i] += g.data[i] * s;
  });
}

int sum(Tape& t, int x) {
  double acc = 0.0;
  for (double v : t.value(x).data) acc += v;
  return t.make_node(Tensor::scalar(acc), [x](Tape& tp, int, const Tensor& g) {
    Tensor& gx = tp.grad_buffer(x);
    for (double& v : gx.data) v += g.data[0];
  });
}

int square(Tape& t, int x) {
  Tensor out = t.value(x);
  for (double& v : out.data) v *= v;
  return t.make_node(std::move(out), [x](Tape& tp, int, const Tensor& g) {
    const Tensor& xv = tp.value(x);
    Tensor& gx = tp.grad_buffer(x);
    for (size_t i = 0; i < g.data.size(); ++i) gx.data[i] += 2.0 * xv.data[i] * g.data[i];
  });
}

int exp_op(Tape& t, int x) {
  Tensor out = t.value(x);
  for (double& v : out.data) v = std::exp(v);
  return t.make_node(std::move(out), [x](Tape& tp, int self, const Tensor& g) {
    const Tensor& y = tp.value(self);
    Tensor& gx = tp.grad_buffer(x);
    for (size_t i = 0; i < g.data.size(); ++i) gx.data[i] += g.data[i] * y.data[i];
  });
}

int clamp_op(Tape& t, int x, double lo, double hi) {
  Tensor out = t.value(x);
  for (double& v : out.data) v = std::clamp(v, lo, hi);
  return t.make_node(std::move(out), [x, lo, hi](Tape& tp, int, const Tensor& g) {
    const Tensor& xv = tp.value(x);
    Tensor& gx = tp.grad_buffer(x);
    for (size_t i = 0; i < g.data.size(); ++i) {
      if (xv.data[i] >= lo && xv.data[i] <= hi) gx.data[i] += g.data[i];
    }
  });
}

int huber(Tape& t, int x, double delta) {
  Tensor out = t.value(x);
  for (double& v : out.data) {
    const double a = std::abs(v);
    v = a <= delta ? 0.5 * v * v : delta * (a - 0.5 * delta);
  }
  return t.make_node(std::move(out), [x, delta](Tape& tp, int, const Tensor& g) {
    const Tensor& xv = tp.value(x);
    Tensor& gx = tp.grad_buffer(x);
    for (size_t i = 0; i < g.data.size(); ++i) {
      const double v = xv.data[i];
      const double d = std::abs(v) <= delta ? v : (v > 0.0 ? delta : -delta);
      gx.data[i] += g.data[i] * d;
    }
  });
}

int pick(Tape& t, int x, int index) {
  const Tensor& xv = t.value(x);
  if (index < 0 || index >= xv.numel()) throw ProtocolError("pick index out of range");
  return t.make_node(Tensor::scalar(xv.data[index]), [x, index](Tape& tp, int, const Tensor& g) {
    tp.grad_buffer(x).data[index] += g.data[0];
  });
}

int log_softmax(Tape& t, int x) {
  const Tensor& xv = t.value(x);
  double mx = xv.data[0];
  for (double v : xv.data) mx = std::max(mx, v);
  double lse = 0.0;
  for (double v : xv.data) lse += std::exp(v - mx);
  lse = mx + std::log(lse);
  Tensor out = xv;
  for (double& v : out.data) v -= lse;
  return t.make_node(std::move(out), [x](Tape& tp, int self, const Tensor& g) {
    const Tensor& y = tp.value(self);
    Tensor& gx = tp.grad_buffer(x);
    double gsum = 0.0;
    for (double v : g.data) gsum += v;
    for (size_t i = 0; i < g.data.size(); ++i) {
      gx.data[i] += g.data[i] - std::exp(y.data[i]) * gsum;
    }
  });
}

}  // namespace advdrive::nn
