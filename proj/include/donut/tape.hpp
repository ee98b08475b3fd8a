#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "donut/matrix.hpp"

namespace donut::ad {

// A node handle into a Tape. Valid only for the tape that issued it.
struct NodeId {
  std::uint32_t index = UINT32_MAX;
  bool valid() const { return index != UINT32_MAX; }
};

enum class Op : std::uint8_t {
  kInput,
  kParameter,
  kConstant,
  kMatMul,
  kAddBias,
  kElu,
  kSigmoid,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMean,
  kSquaredErrorMean,
  kBinaryCrossEntropyMean,
  kStopGradient,
};

// Gradients of the scalar terminal with respect to every parameter node,
// in parameter registration order.
struct GradientMap {
  struct Entry {
    std::string name;
    Matrix grad;
  };
  std::vector<Entry> entries;

  const Matrix& at(std::string_view name) const;
  bool contains(std::string_view name) const;
};

struct FiniteDiffParamReport {
  std::string name;
  double max_rel_error = 0.0;  // over entries where |analytic| or |numeric| > floor
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
  std::size_t entries_checked = 0;
  bool exceeds_tolerance = false;
};

struct FiniteDiffReport {
  std::vector<FiniteDiffParamReport> params;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool all_within_tolerance = true;
};

// Reverse-mode tape over a fixed computation graph.
//
// The graph is declared once (shapes are inferred and buffers allocated at
// declaration time) and can then be re-evaluated any number of times with
// fresh input values and updated parameter storage. Supported primitives are
// exactly the ones the training objective needs; the set is deliberately
// closed so the whole engine stays auditable.
//
// Broadcasting rules:
//   add/sub/mul/div : same shape, or either operand 1x1 (scalar broadcast)
//   add_bias        : (n x m) + (1 x m) row-vector bias
// Reductions (mean, squared_error_mean, binary_cross_entropy_mean) yield 1x1.
//
// A Tape is single-threaded; value-semantic matrices may be shared read-only
// across threads, but a tape must not be used concurrently.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;
  Tape(Tape&&) = default;
  Tape& operator=(Tape&&) = default;

  // Leaf declarations. Parameter nodes alias caller-owned storage which must
  // outlive the tape; forward() snapshots the current values.
  NodeId input(std::size_t rows, std::size_t cols, std::string name = {});
  NodeId parameter(Matrix* storage, std::string name);
  NodeId constant(Matrix value, std::string name = {});

  NodeId matmul(NodeId a, NodeId b);
  NodeId add_bias(NodeId x, NodeId bias);
  NodeId elu(NodeId x);
  NodeId sigmoid(NodeId x);
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);
  NodeId div(NodeId a, NodeId b);
  NodeId mean(NodeId x);
  NodeId squared_error_mean(NodeId a, NodeId b);
  NodeId binary_cross_entropy_mean(NodeId prob, NodeId target);
  NodeId stop_gradient(NodeId x);

  // Evaluates every node in declaration order. `inputs` are bound to input
  // nodes in declaration order and must match their declared shapes.
  // Returns the terminal (last declared) node's value. Throws DimensionError
  // on shape mismatch and NumericError if any node produces a non-finite
  // entry.
  const Matrix& forward(std::span<const Matrix> inputs);

  // Gradients of the scalar terminal w.r.t. every parameter. Requires a
  // completed forward pass (StateError otherwise) and a 1x1 terminal.
  GradientMap backward();

  // Central-difference validation of backward() against the same graph.
  // Perturbs parameter storage in place (restoring it afterwards); always
  // returns a report, never throws on mismatch.
  FiniteDiffReport finite_diff_check(std::span<const Matrix> inputs, double step,
                                     double tolerance);

  const Matrix& value(NodeId id) const { return node(id).value; }
  const Matrix& adjoint(NodeId id) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t input_count() const { return input_nodes_.size(); }
  std::size_t parameter_count() const { return parameter_nodes_.size(); }

  // Number of probability entries clamped inside logs during the most recent
  // forward pass.
  std::size_t clamp_events() const { return clamp_events_; }

 private:
  struct Node {
    Op op;
    NodeId lhs;
    NodeId rhs;
    Matrix value;
    Matrix adjoint;
    Matrix* storage = nullptr;  // kParameter only
    std::string name;
  };

  Node& node(NodeId id) { return nodes_[id.index]; }
  const Node& node(NodeId id) const { return nodes_[id.index]; }
  NodeId push(Node n);
  NodeId binary_elementwise(Op op, NodeId a, NodeId b);
  void eval_node(Node& n);
  void backprop_node(Node& n);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> input_nodes_;
  std::vector<std::uint32_t> parameter_nodes_;
  std::size_t clamp_events_ = 0;
  bool forward_done_ = false;
};

}  // namespace donut::ad
