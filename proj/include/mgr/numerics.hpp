#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mgr/matrix.hpp"

namespace mgr::num {

// a * b with sequential row-major accumulation. Throws DimensionError on
// incompatible shapes.
Matrix matmul(const Matrix& a, const Matrix& b);

// aᵀ * b and a * bᵀ, same accumulation discipline.
Matrix matmul_at_b(const Matrix& a, const Matrix& b);
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

Matrix add(const Matrix& a, const Matrix& b);

Matrix relu(const Matrix& m);

// Masks upstream where the forward input was <= 0 (subgradient 0 at 0).
Matrix relu_backward(const Matrix& input, const Matrix& upstream);

struct LossResult {
    double value = 0.0;
    std::vector<double> grad;
};

// Mean binary cross-entropy on logits, softplus-stabilized:
//   loss_i = max(z,0) - z*y + log(1 + exp(-|z|)),  grad_i = (sigmoid(z) - y)/n.
LossResult bce_loss(std::span<const double> logits, std::span<const double> targets);

// Mean squared error, grad_i = 2*(pred - target)/n.
LossResult mse_loss(std::span<const double> preds, std::span<const double> targets);

double sigmoid(double z);

struct AdamWConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.01;
};

// Decoupled-weight-decay Adam over a fixed group of tensors. Decay is applied
// directly to the parameters, never through the gradient path.
class AdamW {
public:
    explicit AdamW(AdamWConfig cfg) : cfg_(cfg) {}

    void step(std::span<Matrix* const> params, std::span<const Matrix* const> grads);

    std::uint64_t step_count() const { return t_; }
    const AdamWConfig& config() const { return cfg_; }

private:
    AdamWConfig cfg_;
    std::uint64_t t_ = 0;
    std::vector<Matrix> moment1_;
    std::vector<Matrix> moment2_;
};

// Central-difference check of an analytic gradient. `loss` must re-evaluate
// the objective from the current contents of `param`; entries are perturbed
// in place and restored. Returns the max over checked coordinates of
// |fd - analytic| / max(|fd|, |analytic|, 1e-8). When max_coords > 0 and the
// tensor is larger, a seeded subsample of coordinates is checked.
double finite_diff_check(const std::function<double()>& loss, Matrix& param,
                         const Matrix& analytic, double h,
                         std::size_t max_coords = 0, std::uint64_t seed = 0);

} // namespace mgr::num
