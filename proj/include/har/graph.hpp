#pragma once

#include <deque>
#include <functional>

#include "har/tensor.hpp"

namespace har {

struct NodeRef {
    int idx = -1;
    bool valid() const { return idx >= 0; }
};

// Append-only tape of operator applications. Nodes are created in forward
// order, so the creation order is a topological order by construction;
// backward() walks it in exact reverse. One backward pass per graph.
class Graph {
public:
    struct Node {
        const char* op = "";
        Tensor out;
        // Reads out.grad and scatters into input node / parameter grads.
        std::function<void(Graph&)> backprop;
        bool needs_grad = false;
    };

    // Data leaf. requires_grad on the tensor is honored (VAT needs input
    // gradients); plain batch inputs leave it false.
    NodeRef input(Tensor t);

    // Parameter leaf; copies the current value in. When trainable, backward
    // accumulates into p.tensor.grad; frozen leaves block propagation, so
    // pseudo-label and perturbation-search passes leave parameters untouched.
    NodeRef param(Parameter& p, bool trainable = true);

    NodeRef emplace(const char* op, Tensor out, bool needs_grad, std::function<void(Graph&)> bp);

    Node& node(NodeRef r);
    const Node& node(NodeRef r) const;
    Tensor& value(NodeRef r) { return node(r).out; }
    const Tensor& value(NodeRef r) const { return node(r).out; }

    int size() const { return static_cast<int>(nodes_.size()); }

    // Seeds d(loss)/d(loss) = 1 and visits nodes in reverse creation order.
    // loss must be a scalar node of this graph.
    void backward(NodeRef loss);

private:
    std::deque<Node> nodes_;
};

}  // namespace har
