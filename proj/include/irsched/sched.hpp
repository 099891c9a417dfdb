#ifndef IRSCHED_SCHED_HPP
#define IRSCHED_SCHED_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irsched/common.hpp"
#include "irsched/rate.hpp"
#include "irsched/scenario.hpp"

namespace irsched {

struct RbAssignment {
    int cluster = -1;
    int carrier = -1;

    bool operator==(const RbAssignment&) const = default;
};

// Decision variables of one frame: per-UE RB assignment, per-cluster slot
// counts alpha_z and codeword choices. A relaxed grid (UOSCBC) may put any
// number of UEs on the same RB.
struct AssignmentGrid {
    std::vector<std::optional<RbAssignment>> assign; // per UE
    std::vector<int> alpha;                          // per cluster
    std::vector<int> configs;                        // per cluster, codebook index
    bool relaxed = false;

    int n_ue() const { return static_cast<int>(assign.size()); }
    int n_clusters() const { return static_cast<int>(alpha.size()); }
    // Number of UEs on RB (cluster, carrier).
    int occupancy(int cluster, int carrier) const;

    nlohmann::json to_json() const;
    static AssignmentGrid from_json(const nlohmann::json& j);

    bool operator==(const AssignmentGrid&) const = default;
};

// Constraint check against the scenario. Returns human-readable violations;
// empty means feasible. Relaxed grids skip the per-RB cardinality check.
std::vector<std::string> validate(const AssignmentGrid& grid, const ScenarioConfig& cfg);

// Objective: sum of the assigned UEs' table rates (unassigned UEs add 0).
double sum_rate(const AssignmentGrid& grid, const RateTable& table);

struct SeedTriple {
    int ue = -1;
    int codeword = -1;
    int carrier = -1;
};

// Step 1 of the decomposition: the Z (ue, codeword, carrier) triples with the
// highest per-UE peak rates; ties toward lower codeword, carrier, then UE.
std::vector<SeedTriple> configuration_assignment(const RateTable& table, int Z);

// Greedy maximum-rate scheduler: seeds one UE per cluster with alpha_z = 1,
// then repeatedly assigns the best (ue, cluster, carrier) among free slots,
// expanding the best cluster by one slot whenever capacity runs out.
AssignmentGrid gmax(const RateTable& table, const ScenarioConfig& cfg);

// Deterministic assignment baseline: contiguous index-order clusters,
// round-robin carriers, then the best codeword per cluster.
AssignmentGrid da(const RateTable& table, const ScenarioConfig& cfg);

// Unconstrained one-shot baseline: step 1 as gmax, every remaining UE on its
// best (cluster, carrier) with no capacity bound. Output is relaxed.
AssignmentGrid uoscbc(const RateTable& table, const ScenarioConfig& cfg);

// Genetic refinement of a feasible seed: feasibility-preserving operators,
// tournament selection, elitism. Never returns less than the seed's fitness.
AssignmentGrid ga(const RateTable& table, const ScenarioConfig& cfg,
                  const AssignmentGrid& seed_solution, RngStream& rng);

// Global optimum by enumerating cluster cardinality compositions and codeword
// tuples, with an exact assignment solve for the UE-to-RB matching. Refuses
// when the enumeration exceeds kExhaustiveLeafCap leaves.
AssignmentGrid exhaustive(const RateTable& table, const ScenarioConfig& cfg);

inline constexpr long long kExhaustiveLeafCap = 10'000'000;

// Number of IRS reconfigurations in a frame: run-length of the per-cluster
// codeword sequence in slot order (empty clusters skipped).
int reconfiguration_count(const AssignmentGrid& grid);

} // namespace irsched

#endif
