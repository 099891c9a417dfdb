#ifndef IRSCHED_SCENARIO_HPP
#define IRSCHED_SCENARIO_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace irsched {

struct GaParams {
    int population = 24;
    int generations = 60;
    double mutation_rate = 0.2;
    int elitism = 1;
};

// All physical and combinatorial parameters of a run. Loaded from a versioned
// JSON document (see configs/ and README for the schema).
struct ScenarioConfig {
    int K = 90;         // user count
    int F = 5;          // carrier count
    int Z = 7;          // max clusters (IRS reconfigurations per frame)
    int n_gnb = 32;     // gNB antennas
    int n_ue = 4;       // UE antennas
    int irs_rows = 20;  // IRS panel rows
    int irs_cols = 40;  // IRS panel columns
    int b_irs = 1;      // phase quantization bits per element
    int b_codebook = 14; // codebook address bits

    double carrier_hz = 28e9;
    double band_hz = 20e6;
    double tx_power_dbm = 33.0;
    double noise_psd_dbm_hz = -174.0;
    double cell_radius_m = 167.0;
    std::array<double, 2> gnb_pos_m{0.0, 0.0};
    std::array<double, 2> irs_pos_m{75.0, 100.0};

    int m_training = 0; // 0 = auto (10*K)
    int n_drops = 50;
    std::uint64_t seed = 1;
    GaParams ga;

    int n_irs() const { return irs_rows * irs_cols; }
    int slots() const { return K / F; } // time slots per frame
    int codebook_size() const { return 1 << b_codebook; }
    int training_count() const { return m_training > 0 ? m_training : 10 * K; }

    // Per-RB signal power: total transmit power split uniformly over carriers.
    double sigma_s2() const;
    // Per-RB noise power: PSD times the per-carrier bandwidth.
    double sigma_n2() const;
    // Carrier frequencies, equally spaced across the band around carrier_hz.
    std::vector<double> carriers() const;

    // Returns invariant violations (empty when the config is usable).
    std::vector<std::string> check() const;
    void validate_or_throw() const;

    static ScenarioConfig from_json(const nlohmann::json& j);
    static ScenarioConfig from_file(const std::string& path);
    nlohmann::json to_json() const;
};

double dbm_to_watt(double dbm);

} // namespace irsched

#endif
