#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "abnn/tensor.hpp"

namespace abnn {

enum class OpKind {
  Leaf,
  Matmul,
  Add,
  Sub,
  Mul,
  Div,
  AddRow,   // [b,f] + [f]
  SubRow,   // [b,f] - [f]
  MulRow,   // [b,f] * [f]
  Scale,    // x * constant
  Relu,
  Gelu,
  Tanh,
  Log,
  Exp,
  Sqrt,
  Softplus,
  Softmax,  // rowwise
  SumAll,
  MeanAll,
  MeanBatch,  // [b,f] -> [f], mean over the batch axis
  VarBatch,   // [b,f] -> [f], biased variance over the batch axis
  StandardizeBatch,  // per-feature standardization, stats from the batch
  StandardizeRows,   // per-sample standardization across features
  StandardizeConst,  // standardization against fixed (running) stats
  SoftmaxCrossEntropy,
};

const char* op_name(OpKind kind);

// Handle into a Graph's node list.
struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

// Dynamic (define-by-run) reverse-mode tape over dense tensors. Nodes are
// appended in topological order; backward walks them once in reverse.
// A Graph and its tensors belong to a single worker.
class Graph {
 public:
  Var leaf(Tensor t);            // keeps t.requires_grad
  Var constant(Tensor t);        // leaf that never receives a gradient

  Var matmul(Var a, Var b);
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);
  Var div(Var a, Var b);
  Var add_row(Var m, Var v);
  Var sub_row(Var m, Var v);
  Var mul_row(Var m, Var v);
  Var scale(Var x, double k);
  Var relu(Var x);
  Var gelu(Var x);
  Var tanh_act(Var x);
  Var log_op(Var x);
  Var exp_op(Var x);
  Var sqrt_op(Var x);
  Var softplus(Var x);
  Var softmax(Var x);
  Var sum_all(Var x);
  Var mean_all(Var x);
  Var mean_batch(Var x);
  Var var_batch(Var x);

  Var standardize_batch(Var x, double eps);
  Var standardize_rows(Var x, double eps);
  Var standardize_const(Var x, std::span<const double> mean, std::span<const double> var,
                        double eps);
  // Batch statistics captured by the standardize_batch node (for running-stat
  // updates). Throws for other node kinds.
  void batch_stats(Var standardized, std::vector<double>& mean, std::vector<double>& var) const;

  // Mean over the batch of weights[i] * (-log softmax(logits_i)[labels_i]).
  // Empty weights means all-ones.
  Var softmax_cross_entropy(Var logits, std::span<const int> labels,
                            std::span<const double> weights = {});

  // Accumulates d(loss)/d(leaf) into every requires_grad leaf's grad slot.
  // Non-leaf gradients are scratch and not retained, so repeated calls add up.
  void backward(Var loss);

  const Tensor& value(Var v) const;
  // Gradient of a requires_grad leaf (throws if absent).
  const std::vector<double>& grad(Var leaf) const;
  std::size_t num_nodes() const { return nodes_.size(); }

 private:
  struct Node {
    OpKind kind = OpKind::Leaf;
    std::array<int, 2> in{-1, -1};
    Tensor value;
    bool needs_grad = false;
    // Saved forward context (op-specific): inverse stds, probabilities, means.
    std::vector<double> ctx;
    std::vector<double> ctx2;
    std::vector<int> ilabels;
    double k = 0.0;
  };

  const Node& node(Var v) const;
  Node& node(Var v);
  Var push(Node n);
  Var unary(OpKind kind, Var x, const std::function<double(double)>& f);
  void check_same_shape(OpKind kind, Var a, Var b) const;
  void check_row_broadcast(OpKind kind, Var m, Var v) const;
  void finite_or_throw(OpKind kind, const Tensor& t) const;

  std::vector<Node> nodes_;
};

// Max over coordinates of |analytic - central difference| relative error for
// a scalar-valued tensor function built on a Graph. The analytic side comes
// from backward(); the numeric side from two forward evaluations per
// coordinate. Throws if f(x) is non-finite.
double finite_diff_check(const std::function<Var(Graph&, Var)>& f, const Tensor& x, double step);

}  // namespace abnn
