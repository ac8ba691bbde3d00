#pragma once

#include <functional>

#include "fermat/classify.hpp"

namespace fermat {

/// Exhaustive enumeration over GF(2) of degree-d tuples with vanishing
/// fifth-power sum, by meet-in-the-middle: the sums over half tuples
/// (G0,G1,G2) are bucketed by value, and in characteristic 2 a full tuple
/// lies on the hypersurface exactly when its two half sums agree. Buckets
/// are sharded by a key hash; shards are independent and reproducible.
struct SearchTask {
    int degree = 1;
    uint32_t shards = 0;      // 0: chosen from threads and the memory budget
    int32_t shard_index = -1; // >= 0: process only this shard (for external partitioning)
    int threads = 0;          // 0: hardware concurrency
    bool canonical_sort = false; // dedup: keep only tuples with nondecreasing form encodings
    bool st_symmetry = false;    // dedup: keep only tuples <= their S<->T mirror
    bool allow_degree9 = false;  // degree 9 is behind this flag
    std::size_t memory_budget_mb = 2048;
    std::size_t sample_limit = 256;
};

struct SearchResult {
    CurveMap curve;
    ClassificationReport report;
};

struct SearchSummary {
    int degree = 0;
    uint64_t total = 0;            // tuples on the hypersurface (per dedup policy)
    uint64_t valid = 0;            // primitive among them
    uint64_t free_count = 0;
    uint64_t very_free_count = 0;
    uint64_t case_4b_count = 0;
    uint64_t refuted = 0;          // degrees 4/5: valid curves with a replayed refutation
    uint64_t identities_checked = 0; // degrees 4/5: valid curves passing the column identities
};

struct SearchOutcome {
    SearchSummary summary;
    std::vector<SearchResult> free_results; // sorted by curve encoding
    std::vector<CurveMap> sample;           // deterministic sample of valid curves
};

/// Classifies every enumerated curve (freeness decided exactly by the
/// packed screen; survivors get the full report) and returns the free ones.
SearchOutcome find_free(const SearchTask& t);

/// Streams every valid curve as packed forms, shard by shard. Single
/// threaded; meant for small degrees and oracle comparisons.
void enumerate_on_fermat(const SearchTask& t,
                         const std::function<void(const std::array<uint16_t, 6>&)>& sink);

int search_degree_cap(); // default 8, overridable via FERMATQ_SEARCH_DEGREE_CAP

} // namespace fermat
