// Reverse-mode automatic differentiation over dense tensors.
//
// A Graph is a static, topologically ordered program built once (inputs,
// parameters, ops) and then evaluated many times. forward() caches every
// intermediate; backward() seeds the designated output and sweeps the tape
// in reverse, accumulating adjoints for all inputs and parameters.
//
// Single-writer: forward/backward mutate per-node caches, so one Graph
// instance must not be shared across threads. clone() produces an
// independent instance for parallel evaluation over the same weights.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rhi/rng.hpp"
#include "rhi/tensor.hpp"

namespace rhi {

enum class OpKind {
    Input,
    Parameter,
    Constant,
    Dense,          // y = W x + b, W:[out,in], x:[in], b:[out]
    Conv2d,         // x:[Ci,H,W], w:[Co,Ci,K,K], b:[Co]
    ConvTranspose2d,// x:[Ci,H,W], w:[Ci,Co,K,K], b:[Co]
    Relu,
    Sigmoid,
    Tanh,
    Add,
    Mul,
    Scale,          // y = alpha * x
    Reshape,
    MseLoss,        // scalar mean((a-b)^2)
    GaussianKl,     // scalar 0.5*sum(exp(lv) + m^2 - 1 - lv)
    GaussianSample, // z = m + exp(0.5*lv) .* eps, eps ~ N(0,1) from seeded stream
};

struct GraphNode {
    OpKind kind = OpKind::Constant;
    std::vector<int> args;
    std::vector<std::size_t> shape;
    int stride = 1;
    int pad = 0;
    double alpha = 1.0;
    std::string name;  // Input / Parameter only

    Tensor value;    // forward cache
    Tensor adjoint;  // backward accumulator
    Tensor aux;      // op scratch that backward needs (sample eps, im2col buffer)
};

class Graph {
public:
    int input(const std::string& name, std::vector<std::size_t> shape);
    int parameter(const std::string& name, Tensor init);
    int constant(Tensor value);

    int dense(int x, int w, int b);
    int conv2d(int x, int w, int b, int stride, int pad);
    int conv2d_transpose(int x, int w, int b, int stride, int pad);
    int relu(int x);
    int sigmoid(int x);
    int tanh_op(int x);
    int add(int a, int b);
    int mul(int a, int b);
    int scale(int x, double alpha);
    int reshape(int x, std::vector<std::size_t> shape);
    int mse_loss(int pred, int target);
    int gaussian_kl(int mean, int logvar);
    int gaussian_sample(int mean, int logvar);

    void set_output(int node);
    int output() const { return output_; }

    // Reseeds the stream used by GaussianSample nodes. Called per training
    // sample so results do not depend on evaluation interleaving.
    void set_sample_seed(std::uint64_t seed) { sample_rng_ = Rng(seed); }

    // Evaluates the graph on named inputs; returns the output tensor.
    // Every public op checks its result for NaN/Inf.
    const Tensor& forward(const std::map<std::string, Tensor>& inputs);

    // Accumulates d(seed . output)/dx into every node adjoint. Requires a
    // preceding forward() on this instance. Seed shape must match output.
    void backward(const Tensor& output_seed);

    // Convenience used by tests and by the spec-facing API: run backward and
    // collect gradients for all inputs and parameters by name.
    std::map<std::string, Tensor> backward_grad(const Tensor& output_seed);

    // Forward-mode tangent sweep over the cached forward pass: directional
    // derivative of the output for the given input tangents, parameters held
    // fixed. Lets diagnostics assemble full Jacobians one input column at a
    // time instead of one output row at a time.
    Tensor jvp(const std::map<std::string, Tensor>& input_tangents) const;

    Tensor& param_value(const std::string& name);
    const Tensor& param_value(const std::string& name) const;
    const Tensor& param_grad(const std::string& name) const;
    const Tensor& input_grad(const std::string& name) const;
    const Tensor& value_of(int node) const { return nodes_[node].value; }

    std::vector<std::string> param_names() const;  // declaration order
    std::size_t param_count() const;               // total scalar count

    // Deep copy sharing nothing; weights are copied by value.
    Graph clone() const { return *this; }

    // Overwrites this graph's parameters with same-named, same-shaped ones.
    void copy_params_from(const Graph& other);

private:
    int add_node(GraphNode n);
    const GraphNode& node_checked(int id) const;

    std::vector<GraphNode> nodes_;
    std::map<std::string, int> inputs_;
    std::map<std::string, int> params_;
    std::vector<std::string> param_order_;
    int output_ = -1;
    bool forward_done_ = false;
    Rng sample_rng_{0};
};

// Central-difference Jacobian of an arbitrary tensor function, used as the
// gradient oracle throughout the test suites. Column i holds
// (fn(x + eps e_i) - fn(x - eps e_i)) / (2 eps). Row-major [out_n, in_n].
Tensor finite_diff_jacobian(const std::function<Tensor(const Tensor&)>& fn,
                            const Tensor& point, double eps);

}  // namespace rhi
