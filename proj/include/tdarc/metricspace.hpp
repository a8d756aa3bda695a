#pragma once
// Semantic-logical composite metric: per-step distances combining embedding
// similarity with hierarchy/branch/connectivity disparity, plus the frozen
// orthonormal projection that fuses both views into one feature vector.

#include <cstdint>
#include <span>
#include <vector>

#include "tdarc/trace.hpp"

namespace tdarc {

struct DistanceConfig {
    // local connectivity (deg/CC mix); beta normalizes the weighted sum
    double alpha_deg = 1.0;
    double alpha_cc = 1.0;
    double beta = 2.0;
    // logical distance weights, must sum to 1
    double gamma_d = 1.0 / 3.0;
    double gamma_b = 1.0 / 3.0;
    double gamma_c = 1.0 / 3.0;
    // composite mixing, must sum to 1
    double lambda_s = 0.7;
    double lambda_l = 0.3;
    // edge weight mixing coefficient (semantic vs explicit dependency)
    double alpha_edge = 0.7;

    std::uint64_t projection_seed = 42;
    int projection_dim = 256;

    // Dimension used by the fallback embedder when a trace carries none.
    int fallback_dim = 32;

    // Throws std::invalid_argument when weight constraints are violated.
    void validate() const;
};

// Deterministic unit-norm stand-in embedding derived from a text hash.
// Test/fixture plumbing only; real pipelines ship embeddings in the trace.
std::vector<double> fallback_embed(const std::string& text, int dim);

// Cosine similarity, clamped to [-1, 1]. Bitwise-equal vectors give exactly 1.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

// 1 - cosine similarity, in [0, 2]. Throws on zero-norm input.
double semantic_distance(std::span<const double> a, std::span<const double> b);

// gamma_d |d_i-d_j| + gamma_b 1[b_i != b_j] + gamma_c |norm(c_i)-norm(c_j)|
// where norm(c) = c / c_max over the trace (0 when c_max is 0).
double logical_distance(const ReasoningStep& a, const ReasoningStep& b, double c_a, double c_b,
                        double c_max, const DistanceConfig& cfg);

double composite_distance(double d_semantic, double d_logical, const DistanceConfig& cfg);

// lambda_s * semantic + lambda_l * logical for a concrete step pair.
double composite_distance(const ReasoningStep& a, const ReasoningStep& b,
                          std::span<const double> emb_a, std::span<const double> emb_b, double c_a,
                          double c_b, double c_max, const DistanceConfig& cfg);

// alpha * cos(s_i, s_j) + (1 - alpha) * 1[explicit dependency]
double edge_weight(std::span<const double> emb_a, std::span<const double> emb_b,
                   bool has_explicit_dep, const DistanceConfig& cfg);

struct NodeFeatureVector {
    std::vector<double> values;
    int source_id = 0;
};

// Seed-deterministic frozen linear map. Rows are orthonormal when the output
// dimension fits inside the input dimension; otherwise columns are, making
// the map an exact isometry. Either way it is non-expansive.
class FrozenProjection {
public:
    FrozenProjection(int input_dim, int output_dim, std::uint64_t seed);

    std::vector<double> apply(std::span<const double> x) const;
    int input_dim() const { return input_dim_; }
    int output_dim() const { return output_dim_; }

private:
    int input_dim_;
    int output_dim_;
    std::vector<double> rows_;  // output_dim x input_dim, row major
};

// Fixed-width attribute encodings feeding the projection input.
std::vector<double> depth_encoding(int depth);                                  // 8 dims
std::vector<double> branch_encoding(const std::string& branch, std::uint64_t seed);  // 8 dims
std::vector<double> connectivity_encoding(double c_norm);                       // 4 dims

// Input layout the projection expects: [embedding; p_d; p_b; p_c].
int projection_input_dim(int embedding_dim);

// Project one step's concatenated features through the frozen map.
NodeFeatureVector project(const ReasoningStep& step, std::span<const double> embedding,
                          double c_norm, const DistanceConfig& cfg, const FrozenProjection& proj);

// Per-trace embedding resolution: the step's own embedding when present,
// else the fallback embedder at cfg.fallback_dim.
std::vector<std::vector<double>> resolve_embeddings(const ReasoningTrace& trace,
                                                    const DistanceConfig& cfg);

}  // namespace tdarc
