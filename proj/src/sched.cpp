#include "irsched/sched.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "irsched/hungarian.hpp"

namespace irsched {

int AssignmentGrid::occupancy(int cluster, int carrier) const
{
    int count = 0;
    for (const auto& a : assign)
        if (a && a->cluster == cluster && a->carrier == carrier)
            ++count;
    return count;
}

nlohmann::json AssignmentGrid::to_json() const
{
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& a : assign) {
        if (a)
            rows.push_back({{"cluster", a->cluster}, {"carrier", a->carrier}});
        else
            rows.push_back(nullptr);
    }
    j["assign"] = rows;
    j["alpha"] = alpha;
    j["configs"] = configs;
    j["relaxed"] = relaxed;
    return j;
}

AssignmentGrid AssignmentGrid::from_json(const nlohmann::json& j)
{
    AssignmentGrid g;
    for (const auto& row : j.at("assign")) {
        if (row.is_null())
            g.assign.push_back(std::nullopt);
        else
            g.assign.push_back(RbAssignment{row.at("cluster").get<int>(),
                                            row.at("carrier").get<int>()});
    }
    g.alpha = j.at("alpha").get<std::vector<int>>();
    g.configs = j.at("configs").get<std::vector<int>>();
    g.relaxed = j.at("relaxed").get<bool>();
    return g;
}

std::vector<std::string> validate(const AssignmentGrid& grid, const ScenarioConfig& cfg)
{
    std::vector<std::string> v;
    const int Z = grid.n_clusters();

    if (static_cast<int>(grid.configs.size()) != Z)
        v.push_back("alpha and configs disagree on the cluster count");
    if (grid.n_ue() != cfg.K)
        v.push_back("grid covers " + std::to_string(grid.n_ue()) + " UEs, scenario has " +
                    std::to_string(cfg.K));
    if (Z > cfg.Z)
        v.push_back("grid uses " + std::to_string(Z) + " clusters, budget is " +
                    std::to_string(cfg.Z));

    for (int k = 0; k < grid.n_ue(); ++k) {
        const auto& a = grid.assign[k];
        if (!a) {
            v.push_back("UE " + std::to_string(k) + " unassigned");
            continue;
        }
        if (a->cluster < 0 || a->cluster >= Z)
            v.push_back("UE " + std::to_string(k) + " on invalid cluster " +
                        std::to_string(a->cluster));
        if (a->carrier < 0 || a->carrier >= cfg.F)
            v.push_back("UE " + std::to_string(k) + " on invalid carrier " +
                        std::to_string(a->carrier));
    }

    for (int z = 0; z < Z; ++z) {
        if (grid.alpha[z] < 0)
            v.push_back("alpha[" + std::to_string(z) + "] negative");
        if (z < static_cast<int>(grid.configs.size()) &&
            (grid.configs[z] < 0 || grid.configs[z] >= cfg.codebook_size()))
            v.push_back("cluster " + std::to_string(z) + " config " +
                        std::to_string(grid.configs[z]) + " outside the codebook");
    }

    const int total_alpha = std::accumulate(grid.alpha.begin(), grid.alpha.end(), 0);
    if (cfg.F > 0 && total_alpha != cfg.slots())
        v.push_back("sum of alpha is " + std::to_string(total_alpha) + ", expected K/F = " +
                    std::to_string(cfg.slots()));

    if (!grid.relaxed) {
        for (int z = 0; z < Z; ++z)
            for (int i = 0; i < cfg.F; ++i) {
                const int occ = grid.occupancy(z, i);
                if (occ != grid.alpha[z])
                    v.push_back("RB (cluster " + std::to_string(z) + ", carrier " +
                                std::to_string(i) + ") holds " + std::to_string(occ) +
                                " UEs, alpha says " + std::to_string(grid.alpha[z]));
            }
    }
    return v;
}

double sum_rate(const AssignmentGrid& grid, const RateTable& table)
{
    double total = 0.0;
    for (int k = 0; k < grid.n_ue(); ++k) {
        const auto& a = grid.assign[k];
        if (!a)
            continue;
        total += table.rate(k, grid.configs[a->cluster], a->carrier);
    }
    return total;
}

std::vector<SeedTriple> configuration_assignment(const RateTable& table, int Z)
{
    if (Z > table.n_ue)
        throw std::invalid_argument("configuration_assignment: Z exceeds the UE count");

    struct Best {
        double rate;
        int ue, codeword, carrier;
    };
    std::vector<Best> best(table.n_ue);
    for (int k = 0; k < table.n_ue; ++k) {
        Best b{-1.0, k, 0, 0};
        for (int c = 0; c < table.n_codewords; ++c)
            for (int i = 0; i < table.n_carriers; ++i)
                if (table.rate(k, c, i) > b.rate) {
                    b.rate = table.rate(k, c, i);
                    b.codeword = c;
                    b.carrier = i;
                }
        best[k] = b;
    }
    std::stable_sort(best.begin(), best.end(), [](const Best& a, const Best& b) {
        if (a.rate != b.rate)
            return a.rate > b.rate;
        return a.ue < b.ue;
    });

    std::vector<SeedTriple> out;
    out.reserve(Z);
    for (int z = 0; z < Z; ++z)
        out.push_back({best[z].ue, best[z].codeword, best[z].carrier});
    return out;
}

namespace {

struct GreedyPick {
    double rate = -1.0;
    int ue = -1, cluster = -1, carrier = -1;
    bool found() const { return ue >= 0; }
};

// Highest-rate (ue, cluster, carrier) over unassigned UEs; ties fall to the
// lexicographically smallest triple by scanning in (k, z, i) order.
GreedyPick best_candidate(const RateTable& table, const AssignmentGrid& grid,
                          const std::vector<std::vector<int>>& occ, bool respect_capacity)
{
    GreedyPick pick;
    for (int k = 0; k < grid.n_ue(); ++k) {
        if (grid.assign[k])
            continue;
        for (int z = 0; z < grid.n_clusters(); ++z)
            for (int i = 0; i < table.n_carriers; ++i) {
                if (respect_capacity && occ[z][i] >= grid.alpha[z])
                    continue;
                const double r = table.rate(k, grid.configs[z], i);
                if (r > pick.rate) {
                    pick = {r, k, z, i};
                }
            }
    }
    return pick;
}

void check_sched_inputs(const RateTable& table, const ScenarioConfig& cfg)
{
    if (cfg.K != table.n_ue)
        throw std::invalid_argument("scheduler: table UE count differs from scenario K");
    if (cfg.F != table.n_carriers)
        throw std::invalid_argument("scheduler: table carrier count differs from scenario F");
    if (cfg.K % cfg.F != 0)
        throw std::invalid_argument("scheduler: K must be a multiple of F");
    if (cfg.Z < 1 || cfg.Z > cfg.slots())
        throw std::invalid_argument("scheduler: Z must satisfy 1 <= Z <= K/F");
}

} // namespace

AssignmentGrid gmax(const RateTable& table, const ScenarioConfig& cfg)
{
    check_sched_inputs(table, cfg);

    AssignmentGrid grid;
    grid.assign.resize(cfg.K);
    grid.alpha.assign(cfg.Z, 1);
    grid.configs.assign(cfg.Z, 0);

    std::vector<std::vector<int>> occ(cfg.Z, std::vector<int>(cfg.F, 0));
    const auto seeds = configuration_assignment(table, cfg.Z);
    for (int z = 0; z < cfg.Z; ++z) {
        grid.configs[z] = seeds[z].codeword;
        grid.assign[seeds[z].ue] = RbAssignment{z, seeds[z].carrier};
        occ[z][seeds[z].carrier]++;
    }

    int assigned = cfg.Z;
    while (assigned < cfg.K) {
        // Fill free slots greedily.
        while (assigned < cfg.K) {
            const GreedyPick pick = best_candidate(table, grid, occ, true);
            if (!pick.found())
                break;
            grid.assign[pick.ue] = RbAssignment{pick.cluster, pick.carrier};
            occ[pick.cluster][pick.carrier]++;
            ++assigned;
        }
        // Capacity exhausted: expand the best cluster by one time slot.
        if (assigned < cfg.K) {
            const GreedyPick pick = best_candidate(table, grid, occ, false);
            grid.alpha[pick.cluster]++;
            grid.assign[pick.ue] = RbAssignment{pick.cluster, pick.carrier};
            occ[pick.cluster][pick.carrier]++;
            ++assigned;
        }
    }
    return grid;
}

AssignmentGrid da(const RateTable& table, const ScenarioConfig& cfg)
{
    check_sched_inputs(table, cfg);

    AssignmentGrid grid;
    grid.assign.resize(cfg.K);
    grid.alpha.assign(cfg.Z, 0);
    grid.configs.assign(cfg.Z, 0);

    // Equal slot split, remainder to low-index clusters.
    const int slots = cfg.slots();
    for (int z = 0; z < cfg.Z; ++z)
        grid.alpha[z] = slots / cfg.Z + (z < slots % cfg.Z ? 1 : 0);

    int next_ue = 0;
    for (int z = 0; z < cfg.Z; ++z) {
        const int members = grid.alpha[z] * cfg.F;
        const int first = next_ue;
        for (int j = 0; j < members; ++j, ++next_ue)
            grid.assign[next_ue] = RbAssignment{z, j % cfg.F};

        double best_sum = -1.0;
        int best_c = 0;
        for (int c = 0; c < table.n_codewords; ++c) {
            double s = 0.0;
            for (int j = 0; j < members; ++j)
                s += table.rate(first + j, c, j % cfg.F);
            if (s > best_sum) {
                best_sum = s;
                best_c = c;
            }
        }
        grid.configs[z] = best_c;
    }
    return grid;
}

AssignmentGrid uoscbc(const RateTable& table, const ScenarioConfig& cfg)
{
    check_sched_inputs(table, cfg);

    AssignmentGrid grid;
    grid.relaxed = true;
    grid.assign.resize(cfg.K);
    grid.alpha.assign(cfg.Z, 0);
    grid.configs.assign(cfg.Z, 0);

    // Bookkeeping split of the slot budget; the relaxed grid never checks
    // per-RB cardinality against it.
    const int slots = cfg.slots();
    for (int z = 0; z < cfg.Z; ++z)
        grid.alpha[z] = slots / cfg.Z + (z < slots % cfg.Z ? 1 : 0);

    const auto seeds = configuration_assignment(table, cfg.Z);
    for (int z = 0; z < cfg.Z; ++z) {
        grid.configs[z] = seeds[z].codeword;
        grid.assign[seeds[z].ue] = RbAssignment{z, seeds[z].carrier};
    }

    for (int k = 0; k < cfg.K; ++k) {
        if (grid.assign[k])
            continue;
        double best = -1.0;
        RbAssignment pick;
        for (int z = 0; z < cfg.Z; ++z)
            for (int i = 0; i < cfg.F; ++i)
                if (table.rate(k, grid.configs[z], i) > best) {
                    best = table.rate(k, grid.configs[z], i);
                    pick = {z, i};
                }
        grid.assign[k] = pick;
    }
    return grid;
}

namespace {

std::vector<std::vector<int>> occupancy_matrix(const AssignmentGrid& grid, int F)
{
    std::vector<std::vector<int>> occ(grid.n_clusters(), std::vector<int>(F, 0));
    for (const auto& a : grid.assign)
        if (a)
            occ[a->cluster][a->carrier]++;
    return occ;
}

// Swap the RBs of two random UEs, or re-draw one cluster's codeword.
void mutate(AssignmentGrid& g, const RateTable& table, RngStream& rng)
{
    if (rng.uniform(0.0, 1.0) < 0.5 && g.n_ue() >= 2) {
        const int a = static_cast<int>(rng.next_index(g.n_ue()));
        int b = static_cast<int>(rng.next_index(g.n_ue() - 1));
        if (b >= a)
            ++b;
        std::swap(g.assign[a], g.assign[b]);
    } else {
        const int z = static_cast<int>(rng.next_index(g.n_clusters()));
        g.configs[z] = static_cast<int>(rng.next_index(table.n_codewords));
    }
}

// Child inherits parent A, then adopts parent B's codeword and membership for
// one cluster; displaced UEs are re-seated greedily so the cardinalities of A
// are restored.
AssignmentGrid crossover(const AssignmentGrid& pa, const AssignmentGrid& pb,
                         const RateTable& table, int F, RngStream& rng)
{
    AssignmentGrid child = pa;
    const int z = static_cast<int>(rng.next_index(child.n_clusters()));
    child.configs[z] = pb.configs[z];

    // Clear cluster z, then pull in B's members while capacity lasts.
    for (auto& a : child.assign)
        if (a && a->cluster == z)
            a.reset();
    auto occ = occupancy_matrix(child, F);

    for (int k = 0; k < child.n_ue(); ++k) {
        if (!pb.assign[k] || pb.assign[k]->cluster != z)
            continue;
        int carrier = pb.assign[k]->carrier;
        if (occ[z][carrier] >= child.alpha[z]) {
            carrier = -1;
            for (int i = 0; i < F; ++i)
                if (occ[z][i] < child.alpha[z]) {
                    carrier = i;
                    break;
                }
            if (carrier < 0)
                break; // cluster z full
        }
        if (child.assign[k])
            occ[child.assign[k]->cluster][child.assign[k]->carrier]--;
        child.assign[k] = RbAssignment{z, carrier};
        occ[z][carrier]++;
    }

    // Re-seat every unassigned UE on its best free slot.
    for (int k = 0; k < child.n_ue(); ++k) {
        if (child.assign[k])
            continue;
        double best = -1.0;
        int bz = -1, bi = -1;
        for (int zz = 0; zz < child.n_clusters(); ++zz)
            for (int i = 0; i < F; ++i) {
                if (occ[zz][i] >= child.alpha[zz])
                    continue;
                const double r = table.rate(k, child.configs[zz], i);
                if (r > best) {
                    best = r;
                    bz = zz;
                    bi = i;
                }
            }
        child.assign[k] = RbAssignment{bz, bi};
        occ[bz][bi]++;
    }
    return child;
}

} // namespace

AssignmentGrid ga(const RateTable& table, const ScenarioConfig& cfg,
                  const AssignmentGrid& seed_solution, RngStream& rng)
{
    check_sched_inputs(table, cfg);
    if (seed_solution.relaxed || !validate(seed_solution, cfg).empty())
        throw std::invalid_argument("ga: seed solution is infeasible");
    if (cfg.ga.generations == 0)
        return seed_solution;

    const int pop_size = cfg.ga.population;
    std::vector<AssignmentGrid> pop;
    std::vector<double> fit;
    pop.reserve(pop_size);
    pop.push_back(seed_solution);
    for (int p = 1; p < pop_size; ++p) {
        AssignmentGrid g = seed_solution;
        mutate(g, table, rng);
        mutate(g, table, rng);
        pop.push_back(std::move(g));
    }
    fit.resize(pop_size);
    for (int p = 0; p < pop_size; ++p)
        fit[p] = sum_rate(pop[p], table);

    auto tournament = [&]() -> int {
        const int a = static_cast<int>(rng.next_index(pop_size));
        const int b = static_cast<int>(rng.next_index(pop_size));
        if (fit[a] != fit[b])
            return fit[a] > fit[b] ? a : b;
        return std::min(a, b);
    };

    std::vector<int> order(pop_size);
    for (int gen = 0; gen < cfg.ga.generations; ++gen) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fit[a] > fit[b]; });

        std::vector<AssignmentGrid> next;
        std::vector<double> next_fit;
        next.reserve(pop_size);
        for (int e = 0; e < cfg.ga.elitism; ++e) {
            next.push_back(pop[order[e]]);
            next_fit.push_back(fit[order[e]]);
        }
        while (static_cast<int>(next.size()) < pop_size) {
            const int pa = tournament();
            const int pb = tournament();
            AssignmentGrid child = crossover(pop[pa], pop[pb], table, cfg.F, rng);
            if (rng.uniform(0.0, 1.0) < cfg.ga.mutation_rate)
                mutate(child, table, rng);
            next_fit.push_back(sum_rate(child, table));
            next.push_back(std::move(child));
        }
        pop = std::move(next);
        fit = std::move(next_fit);
    }

    int best = 0;
    for (int p = 1; p < pop_size; ++p)
        if (fit[p] > fit[best])
            best = p;
    return pop[best];
}

namespace {

void enumerate_compositions(int remaining, int parts, std::vector<int>& current,
                            std::vector<std::vector<int>>& out)
{
    if (parts == 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int a = 0; a <= remaining; ++a) {
        current.push_back(a);
        enumerate_compositions(remaining - a, parts - 1, current, out);
        current.pop_back();
    }
}

} // namespace

AssignmentGrid exhaustive(const RateTable& table, const ScenarioConfig& cfg)
{
    check_sched_inputs(table, cfg);

    std::vector<std::vector<int>> compositions;
    std::vector<int> scratch;
    enumerate_compositions(cfg.slots(), cfg.Z, scratch, compositions);

    // Empty clusters keep codeword 0, so a composition with m non-empty
    // clusters contributes |C|^m leaves.
    long long leaves = 0;
    for (const auto& comp : compositions) {
        long long l = 1;
        for (int a : comp)
            if (a > 0) {
                l *= table.n_codewords;
                if (l > kExhaustiveLeafCap)
                    break;
            }
        leaves += l;
        if (leaves > kExhaustiveLeafCap)
            throw TooLargeError("exhaustive: search space exceeds " +
                                std::to_string(kExhaustiveLeafCap) + " leaves");
    }

    AssignmentGrid best;
    double best_rate = -1.0;

    std::vector<double> profit(static_cast<std::size_t>(cfg.K) * cfg.K);
    for (const auto& comp : compositions) {
        std::vector<int> nonempty;
        for (int z = 0; z < cfg.Z; ++z)
            if (comp[z] > 0)
                nonempty.push_back(z);

        // Slot list: (cluster, carrier) replicated alpha_z times -> K columns.
        std::vector<RbAssignment> slots;
        slots.reserve(cfg.K);
        for (int z = 0; z < cfg.Z; ++z)
            for (int i = 0; i < cfg.F; ++i)
                for (int rep = 0; rep < comp[z]; ++rep)
                    slots.push_back({z, i});

        std::vector<int> configs(cfg.Z, 0);
        std::vector<int> counter(nonempty.size(), 0);
        while (true) {
            for (std::size_t m = 0; m < nonempty.size(); ++m)
                configs[nonempty[m]] = counter[m];

            for (int k = 0; k < cfg.K; ++k)
                for (int s = 0; s < cfg.K; ++s)
                    profit[static_cast<std::size_t>(k) * cfg.K + s] =
                        table.rate(k, configs[slots[s].cluster], slots[s].carrier);
            const std::vector<int> match = solve_assignment_max(profit, cfg.K);

            double total = 0.0;
            for (int k = 0; k < cfg.K; ++k)
                total += profit[static_cast<std::size_t>(k) * cfg.K + match[k]];
            if (total > best_rate) {
                best_rate = total;
                best.assign.assign(cfg.K, std::nullopt);
                for (int k = 0; k < cfg.K; ++k)
                    best.assign[k] = slots[match[k]];
                best.alpha = comp;
                best.configs = configs;
            }

            // Next codeword tuple.
            std::size_t pos = 0;
            while (pos < counter.size()) {
                if (++counter[pos] < table.n_codewords)
                    break;
                counter[pos] = 0;
                ++pos;
            }
            if (pos == counter.size())
                break;
        }
    }
    return best;
}

int reconfiguration_count(const AssignmentGrid& grid)
{
    int runs = 0;
    int prev = -1;
    bool have_prev = false;
    for (int z = 0; z < grid.n_clusters(); ++z) {
        if (grid.alpha[z] == 0)
            continue;
        if (!have_prev || grid.configs[z] != prev) {
            ++runs;
            prev = grid.configs[z];
            have_prev = true;
        }
    }
    return runs;
}

} // namespace irsched
