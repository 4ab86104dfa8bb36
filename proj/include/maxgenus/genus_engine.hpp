#pragma once

#include "maxgenus/joint_tree.hpp"
#include "maxgenus/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace mg {

struct GenusOptions {
    int jobs = 0;                      // 0: library picks (all cores)
    bool early_exit = true;            // stop once floor(beta/2) is attained
    std::uint64_t budget = 1ull << 30; // max systems; 0 disables the guard
    bool force = false;                // proceed past the budget anyway
    std::uint64_t cross_check_every = 0; // 0: no surface-word cross checks
};

struct GenusReport {
    int max_genus = 0;
    int euler_bound = 0; // floor(beta / 2)
    int betti = 0;
    bool upper_embeddable = false;
    std::uint64_t systems_total = 0;
    std::uint64_t systems_enumerated = 0;
    bool early_exit = false;
    std::uint64_t witness_index = 0;
    RotationSystem witness;
    double elapsed_ms = 0.0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

// Exhaustive scan over anchored rotation systems, parallel across a chunk
// at a time. Deterministic: the reported witness is the lowest index
// attaining the maximum, and early exit happens only at chunk boundaries.
GenusReport max_genus_exhaustive(const Multigraph& g, const GenusOptions& opts = {});

// Single-threaded reference scan; same report contract.
GenusReport max_genus_serial(const Multigraph& g, const GenusOptions& opts = {});

bool is_upper_embeddable(const GenusReport& report);

// include_timing=false drops elapsed_ms so equal runs serialize identically
std::string report_to_json(const GenusReport& report, bool include_witness = true,
                           bool include_timing = true);

} // namespace mg
