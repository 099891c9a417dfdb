#ifndef IRSCHED_IRS_HPP
#define IRSCHED_IRS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <armadillo>
#include <json.hpp>

#include "irsched/channel.hpp"
#include "irsched/common.hpp"
#include "irsched/scenario.hpp"

namespace irsched {

// One quantized IRS configuration: per-element phase index on the
// 2^b_irs-step grid. Coefficients are unit modulus (passive reflection).
struct IrsConfiguration {
    std::vector<std::uint32_t> phase_idx;
    int b_irs = 1;

    int size() const { return static_cast<int>(phase_idx.size()); }
    std::vector<double> phases() const;    // theta_n = 2*pi*idx/2^b
    arma::cx_vec coefficients() const;     // e^{j theta_n}

    bool operator==(const IrsConfiguration& other) const = default;
};

// The discrete configuration set addressed by b_codebook bits. Entries are
// pairwise distinct and stored sorted by index vector.
struct Codebook {
    std::vector<IrsConfiguration> entries;
    int b_codebook = 0;
    int b_irs = 1;

    int size() const { return static_cast<int>(entries.size()); }

    nlohmann::json to_json() const;
    static Codebook from_json(const nlohmann::json& j);
    static Codebook from_file(const std::string& path);
    void save(const std::string& path) const;
};

struct ContinuousConfig {
    std::vector<double> phases; // in [0, 2*pi)
    bool degenerate = false;    // all-zero effective channel
};

// Continuous-domain phases approximately maximizing the effective cascade
// gain ||G diag(e^{j theta}) H w|| via alternating optimization between the
// element phases and the receive combiner.
ContinuousConfig optimal_continuous_config(const ChannelSet& channels, int ue, int carrier);

// Nearest grid point per element under circular distance; ties toward the
// lower index.
IrsConfiguration quantize_config(std::span<const double> theta, int b_irs);

// Sum over elements of the squared circular deviation
// min(|da|, 2*pi - |da|)^2. Zero iff the phase vectors are equal mod 2*pi.
double circular_distance(std::span<const double> a, std::span<const double> b);
double circular_distance(const IrsConfiguration& a, const IrsConfiguration& b);

// Index of the codebook entry closest to theta (circular distance, ties to
// the lowest index).
int map_to_codebook(std::span<const double> theta, const Codebook& cb);

struct KmeansTrace {
    std::vector<double> objective; // total circular distance per iteration
};

// k-means with circular distance and circular-mean centroids over raw phase
// vectors; centroids are quantized to b_irs bits and made pairwise distinct.
Codebook codebook_from_training(const std::vector<std::vector<double>>& points, int b_codebook,
                                int b_irs, RngStream& rng, KmeansTrace* trace = nullptr);

// Cell-specific codebook: optimal quantized configurations of M training UEs
// at every carrier, clustered to 2^b_codebook entries.
Codebook build_codebook(const ScenarioConfig& cfg, KmeansTrace* trace = nullptr);

} // namespace irsched

#endif
