#pragma once

#include <memory>
#include <string>
#include <vector>

#include "canosdf/tensor.hpp"

namespace canosdf {

enum class OpKind {
  kInput,
  kConstant,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kScale,            // a * x
  kAddScalar,        // x + a
  kRelu,
  kSoftplus,         // log(1 + exp(a*x)) / a, numerically stable
  kSigmoid,          // 1 / (1 + exp(-a*x))
  kAbs,
  kClamp,            // truncation to [-a, a]; gradient 0 outside the open interval
  kLinear,           // x [..,n] * w (+ optional bias)
  kConv2d,           // stride 1, odd kernel, zero padding, shape preserving
  kMaskedConv3d,     // dense storage, compute restricted to an active-voxel plan
  kStack0,           // k tensors of shape S -> [k, S]
  kRepeat0,          // S -> [k, S]
  kConcatLast,
  kSliceLast,
  kMean0,
  kVar0,             // biased (divide by k) variance over axis 0
  kSum0,
  kMeanAll,
  kSumLastKeep,      // [.., d] -> [.., 1]
  kSoftmax0,
  kRowsL2Norm,       // [.., d] -> [.., 1]
  kBilinearSample,   // feature map [C,H,W] at normalized uv in [-1,1]^2
  kTrilinearSample,  // volume [C,nx,ny,nz] at world-space points
  kScatterToGrid,    // per-row codes -> averaged voxel grid
};

const char* op_name(OpKind k);

struct Var {
  int32_t id = -1;
  bool valid() const { return id >= 0; }
};

// Gather/scatter bookkeeping for one masked 3D convolution layer. Masks are
// fixed per scene, so plans are built once and shared across training steps.
struct Conv3dPlan {
  int64_t nx = 0, ny = 0, nz = 0;
  std::vector<uint8_t> in_mask;           // nx*ny*nz
  std::vector<uint8_t> out_mask;          // 1-voxel dilation of in_mask
  std::vector<int64_t> out_active;        // linear voxel ids, ascending
  std::vector<int64_t> gather;            // [n_out * 27], -1 where off-grid
  // Inverse map for deterministic input-gradient scatter:
  // for each input voxel (CSR over all grid voxels) the (out_row, offset) pairs.
  std::vector<int64_t> inv_offsets;       // size nvox+1
  std::vector<int64_t> inv_pairs;         // flattened (out_row * 27 + offset)

  static std::shared_ptr<const Conv3dPlan> build(int64_t nx, int64_t ny, int64_t nz,
                                                 const std::vector<uint8_t>& in_mask);
};

// Row -> voxel assignment for scatter_to_grid, with multi-occupancy averaging.
struct ScatterTable {
  int64_t nx = 0, ny = 0, nz = 0;
  std::vector<int64_t> voxel_of_row;
  std::vector<double> inv_count;          // per row: 1 / (#rows in its voxel)
  std::vector<uint8_t> occupied;          // nx*ny*nz mask of receiving voxels
};

// Per-axis affine map from query coordinates to lattice coordinates,
// q_lattice = (q - origin) * inv_step. Lattice nodes sit at integers.
struct SampleMap {
  double origin[3] = {0, 0, 0};
  double inv_step[3] = {1, 1, 1};
};

struct NodePayload {
  double a = 0.0;
  int64_t i0 = 0, i1 = 0;
  bool flag = false;
  SampleMap map;
  std::shared_ptr<const Conv3dPlan> plan;
  std::shared_ptr<const ScatterTable> table;
};

struct Node {
  OpKind kind = OpKind::kInput;
  std::vector<int32_t> parents;
  NodePayload payload;
  Tensor value;
  Tensor grad;
  bool has_grad = false;
  std::string label;
};

// Reverse-mode tape over dense tensors. Nodes evaluate eagerly at
// construction; creation order doubles as topological order, so recompute()
// is a forward sweep and backward() a reverse sweep visiting each node once.
// A graph instance is single-owner; disjoint graphs may run concurrently.
class Graph {
public:
  Var input(Tensor v, std::string label = {});
  Var constant(Tensor v, std::string label = {});

  Var add(Var x, Var y);
  Var sub(Var x, Var y);
  Var mul(Var x, Var y);
  Var div(Var x, Var y);
  Var scale(Var x, double c);
  Var add_scalar(Var x, double c);
  Var relu(Var x);
  Var softplus(Var x, double beta = 1.0);
  Var sigmoid(Var x, double beta = 1.0);
  Var abs(Var x);
  Var clamp(Var x, double delta);
  Var linear(Var x, Var w, Var b = {}, bool transpose_w = true);
  Var conv2d(Var x, Var w, Var b);
  Var masked_conv3d(Var x, Var w, Var b, std::shared_ptr<const Conv3dPlan> plan);
  Var stack0(const std::vector<Var>& xs);
  Var repeat0(Var x, int64_t k);
  Var concat_last(const std::vector<Var>& xs);
  Var slice_last(Var x, int64_t from, int64_t to);
  Var mean0(Var x);
  Var var0(Var x);
  Var sum0(Var x);
  Var mean_all(Var x);
  Var sum_last_keep(Var x);
  Var softmax0(Var x);
  Var rows_l2norm(Var x);
  Var bilinear_sample(Var feat, Var uv);
  Var trilinear_sample(Var vol, Var pts, const SampleMap& map);
  Var scatter_to_grid(Var codes, std::shared_ptr<const ScatterTable> table);

  const Tensor& value(Var v) const;
  const Tensor& grad(Var v) const;
  bool has_grad(Var v) const;
  OpKind kind(Var v) const;
  const NodePayload& payload(Var v) const;

  // Rebinds an input leaf; recompute() must run before the next backward().
  void set_input(Var v, Tensor t);
  void recompute();
  void backward(Var output, const Tensor& seed);

  size_t size() const { return nodes_.size(); }
  std::string describe(Var v) const;

private:
  friend double finite_difference_check(Graph&, Var, Var, double);
  Var emit(OpKind kind, std::vector<int32_t> parents, NodePayload payload,
           std::string label);
  void eval_node(int32_t id);
  void backprop_node(int32_t id);
  Tensor& grad_buffer(int32_t id, const Shape& shape);
  Node& at(Var v);
  const Node& at(Var v) const;

  std::vector<Node> nodes_;
  bool dirty_ = false;
};

// Convenience matching the operational contract: rebind, recompute, read out.
void evaluate(Graph& g, const std::vector<std::pair<Var, Tensor>>& bindings);

// Central-difference oracle against reverse-mode gradients of a scalar output.
// Returns max over input elements of |fd - ad| / max(|fd|, |ad|, 1e-8).
double finite_difference_check(Graph& g, Var output, Var input, double epsilon);

}  // namespace canosdf
