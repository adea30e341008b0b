#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gnewton/hypergraph.hpp"
#include "gnewton/types.hpp"

namespace gnewton {

/// States of the arguments of a node function or cost, in declared order.
using ArgView = std::span<const Vec>;

/// Transition function of a non-input node: maps parent states to the node
/// state. Implementations supply analytic first derivatives and the
/// adjoint-contracted second derivatives; second derivatives are only ever
/// consumed in the contracted form  (a, b) -> sum_k w_k d2 phi_k / (da db).
class NodeFunction {
 public:
  virtual ~NodeFunction() = default;

  virtual int out_dim() const = 0;
  virtual std::vector<int> arg_dims() const = 0;

  virtual Vec eval(ArgView args) const = 0;

  /// d phi / d args[wrt], shape (out_dim x dim(args[wrt])).
  virtual Mat jacobian(ArgView args, int wrt) const = 0;

  /// sum_k w_k d2 phi_k / (d args[a] d args[b]), shape (dim_a x dim_b).
  virtual Mat hessian_contracted(ArgView args, const Vec& w, int a, int b) const = 0;

  /// Name used by the problem file format; empty if not serializable.
  virtual std::string type_name() const { return {}; }
};

/// Scalar local cost attached to a node. Arguments are (node, parents...) in
/// the graph's declared parent order; input-node costs take just (node).
class LocalCost {
 public:
  virtual ~LocalCost() = default;

  virtual std::vector<int> arg_dims() const = 0;
  virtual double eval(ArgView args) const = 0;
  virtual Vec grad(ArgView args, int wrt) const = 0;
  /// d2 l / (d args[a] d args[b]), shape (dim_a x dim_b); hess(a,b) = hess(b,a)^T.
  virtual Mat hess(ArgView args, int a, int b) const = 0;

  virtual std::string type_name() const { return {}; }
};

struct NodeDecl {
  NodeId id = -1;
  int dim = 0;
  std::vector<NodeId> parents;
  std::shared_ptr<const NodeFunction> transition;  // required iff parents nonempty
  std::shared_ptr<const LocalCost> cost;           // optional, scope {id} + parents
};

/// Immutable computational graph: nodes with transition functions and local
/// costs, evaluated input -> outputs in a fixed topological order.
class CompGraph {
 public:
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const NodeDecl& node(NodeId v) const { return nodes_[static_cast<size_t>(v)]; }
  const std::vector<NodeDecl>& nodes() const { return nodes_; }

  /// Node ids in evaluation order (parents before children, ties by id).
  const std::vector<NodeId>& topo_order() const { return topo_; }
  /// Parentless nodes, ascending id; these are the decision variables.
  const std::vector<NodeId>& inputs() const { return inputs_; }
  const std::vector<NodeId>& children(NodeId v) const { return children_[static_cast<size_t>(v)]; }

  bool is_input(NodeId v) const { return node(v).parents.empty(); }
  int dim(NodeId v) const { return node(v).dim; }
  /// Sum of input dims; the dimension of the collapsed objective's domain.
  int total_input_dim() const { return total_input_dim_; }

  /// Argument states of v's cost: (state of v, states of parents...).
  std::vector<Vec> cost_args(NodeId v, const std::vector<Vec>& states) const;
  /// Argument states of v's transition: states of parents in declared order.
  std::vector<Vec> transition_args(NodeId v, const std::vector<Vec>& states) const;

  friend CompGraph build_graph(std::vector<NodeDecl> decls);

 private:
  std::vector<NodeDecl> nodes_;
  std::vector<NodeId> topo_;
  std::vector<NodeId> inputs_;
  std::vector<std::vector<NodeId>> children_;
  int total_input_dim_ = 0;
};

/// One evaluation of the graph: all node states, the summed objective, and
/// the input point the rollout was computed at.
struct EvalTrace {
  std::vector<Vec> states;  // indexed by NodeId
  double objective = 0.0;
  std::vector<Vec> point;   // indexed by input position (graph.inputs() order)
};

/// Validates declarations and fixes the evaluation order.
/// Throws: CycleDetected, MissingTransition, DanglingParent, DimensionMismatch.
CompGraph build_graph(std::vector<NodeDecl> decls);

/// Rolls the graph forward from the input assignment and sums local costs.
/// Throws: DimensionMismatch, NonFiniteState.
EvalTrace evaluate(const CompGraph& g, const std::vector<Vec>& x);

/// Objective at an arbitrary (not necessarily feasible) state assignment.
double objective_at_states(const CompGraph& g, const std::vector<Vec>& states);

/// Moralization: one hyperedge {v} + pa(v) per non-input node, plus one
/// hyperedge per local-cost scope. Vertex set and dims are the graph's.
Hypergraph moralize(const CompGraph& g);

// --- input assignment helpers ------------------------------------------

/// Stacks per-input vectors into one flat vector (graph.inputs() order).
Vec flatten_inputs(const CompGraph& g, const std::vector<Vec>& x);
/// Splits a flat vector back into per-input vectors.
std::vector<Vec> unflatten_inputs(const CompGraph& g, const Vec& flat);

}  // namespace gnewton
