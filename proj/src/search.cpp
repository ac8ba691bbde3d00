#include "fermat/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <thread>

#include "fermat/gf2fast.hpp"
#include "fermat/gf2poly.hpp"

namespace fermat {

namespace {

using PackedTuple = std::array<uint16_t, 6>;

struct Entry {
    uint64_t key;
    uint32_t triple; // (a << 20) | (b << 10) | c, form ids of one half
    uint16_t g3;     // gcd encoding of the three forms
};

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint32_t next_pow2(uint32_t v) { return v <= 1 ? 1 : std::bit_ceil(v); }

struct SearchPlan {
    int degree;
    uint32_t n_forms;
    uint32_t shards;
    int threads;
    std::vector<uint64_t> p5;  // fifth powers per form
    std::vector<uint16_t> g1;  // per-form gcd encoding (of the form with itself)
};

int env_degree_cap() {
    if (const char* s = std::getenv("FERMATQ_SEARCH_DEGREE_CAP")) {
        int v = std::atoi(s);
        if (v >= 1 && v <= 9) return v;
    }
    return 8;
}

SearchPlan make_plan(const SearchTask& t) {
    if (t.degree < 1 || t.degree > 9)
        throw Error(Errc::degree_cap_exceeded,
                    "search supports degrees 1..9, got " + std::to_string(t.degree));
    const int cap = search_degree_cap();
    if (t.degree > cap && !(t.degree == 9 && t.allow_degree9))
        throw Error(Errc::degree_cap_exceeded,
                    "degree " + std::to_string(t.degree) + " exceeds the cap " +
                        std::to_string(cap) +
                        (t.degree == 9 ? " (pass the degree-9 flag to unlock)" : ""));

    SearchPlan p;
    p.degree = t.degree;
    p.n_forms = 1u << (t.degree + 1);
    p.threads = t.threads > 0 ? t.threads
                              : std::max(1u, std::thread::hardware_concurrency());

    const uint64_t n3 = uint64_t(p.n_forms) * p.n_forms * p.n_forms;
    const uint64_t budget = t.memory_budget_mb * 1024ull * 1024ull;
    uint32_t shards = t.shards;
    if (shards == 0) {
        uint64_t per_entry = sizeof(Entry);
        uint64_t needed = (n3 * per_entry * static_cast<uint64_t>(p.threads) * 2) / std::max<uint64_t>(budget, 1) + 1;
        uint64_t floor_shards = n3 >= (1ull << 24) ? 4u * static_cast<uint32_t>(p.threads) : 1u;
        shards = next_pow2(static_cast<uint32_t>(std::max<uint64_t>(needed, floor_shards)));
    } else {
        shards = next_pow2(shards);
        uint64_t per_shard = n3 / shards * sizeof(Entry);
        if (per_shard * static_cast<uint64_t>(p.threads) > budget)
            throw Error(Errc::memory_budget,
                        "half-tuple table would need about " +
                            std::to_string(per_shard * p.threads / (1024 * 1024)) +
                            " MiB; raise the budget or use more shards");
    }
    p.shards = shards;

    p.p5.resize(p.n_forms);
    p.g1.resize(p.n_forms);
    for (uint32_t f = 0; f < p.n_forms; ++f) {
        p.p5[f] = gf2::pow5(f);
        p.g1[f] = gf2::form_gcd_enc(f, t.degree, f, t.degree);
    }
    return p;
}

PackedTuple tuple_of(uint32_t tx, uint32_t ty) {
    return {static_cast<uint16_t>((tx >> 20) & 0x3ff), static_cast<uint16_t>((tx >> 10) & 0x3ff),
            static_cast<uint16_t>(tx & 0x3ff),         static_cast<uint16_t>((ty >> 20) & 0x3ff),
            static_cast<uint16_t>((ty >> 10) & 0x3ff), static_cast<uint16_t>(ty & 0x3ff)};
}

PackedTuple mirror_st(const PackedTuple& t, int degree) {
    PackedTuple m;
    for (int i = 0; i < 6; ++i)
        m[static_cast<size_t>(i)] =
            static_cast<uint16_t>(gf2::reverse_bits(t[static_cast<size_t>(i)], degree + 1));
    return m;
}

// Dedup policy: default keeps every ordered tuple. canonical_sort keeps only
// nondecreasing tuples (one representative per coordinate permutation);
// st_symmetry keeps a tuple only if it does not exceed its S<->T mirror
// (both normalized when canonical_sort is also on).
bool policy_keep(const SearchTask& task, const PackedTuple& tuple) {
    PackedTuple rep = tuple;
    if (task.canonical_sort) {
        PackedTuple sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != tuple) return false;
        rep = sorted;
    }
    if (task.st_symmetry) {
        PackedTuple m = mirror_st(tuple, task.degree);
        if (task.canonical_sort) std::sort(m.begin(), m.end());
        if (m < rep) return false;
    }
    return true;
}

template <class Handler>
void scan_shard(const SearchTask& task, const SearchPlan& plan, uint32_t shard, Handler&& handle) {
    const uint32_t mask = plan.shards - 1;
    const uint32_t n = plan.n_forms;

    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(uint64_t(n) * n * n / plan.shards +
                                        uint64_t(n) * n / 8 + 64));
    for (uint32_t a = 0; a < n; ++a) {
        const uint64_t pa = plan.p5[a];
        for (uint32_t b = 0; b < n; ++b) {
            const uint64_t pab = pa ^ plan.p5[b];
            const uint32_t ab = (a << 20) | (b << 10);
            for (uint32_t c = 0; c < n; ++c) {
                const uint64_t key = pab ^ plan.p5[c];
                if ((mix64(key) & mask) != shard) continue;
                uint16_t g3 = gf2::form_gcd_combine(
                    gf2::form_gcd_combine(plan.g1[a], plan.g1[b]), plan.g1[c]);
                entries.push_back(Entry{key, ab | c, g3});
            }
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        return l.key != r.key ? l.key < r.key : l.triple < r.triple;
    });

    for (size_t lo = 0; lo < entries.size();) {
        size_t hi = lo;
        while (hi < entries.size() && entries[hi].key == entries[lo].key) ++hi;
        for (size_t x = lo; x < hi; ++x) {
            const uint32_t tx = entries[x].triple;
            const uint16_t gx = entries[x].g3;
            const bool left_trivial = gx == gf2::kGcdTrivial;
            for (size_t y = lo; y < hi; ++y) {
                PackedTuple tuple = tuple_of(tx, entries[y].triple);
                bool primitive =
                    left_trivial || entries[y].g3 == gf2::kGcdTrivial ||
                    gf2::form_gcd_combine(gx, entries[y].g3) == gf2::kGcdTrivial;
                handle(tuple, primitive);
            }
        }
        lo = hi;
    }
    (void)task;
}

CurveMap materialize(const PackedTuple& tuple, int degree) {
    std::vector<BinaryForm> forms;
    forms.reserve(6);
    for (uint16_t bits : tuple) forms.push_back(BinaryForm::unpack_gf2(bits, degree));
    return CurveMap::validate(std::move(forms));
}

struct ShardAccum {
    SearchSummary sums;
    std::vector<std::pair<PackedTuple, SearchResult>> free_found;
    std::vector<PackedTuple> sample;
    std::exception_ptr error;
};

void run_shard_pipeline(const SearchTask& task, const SearchPlan& plan, uint32_t shard,
                        ShardAccum& acc) {
    const int d = plan.degree;
    acc.sums.degree = d;
    scan_shard(task, plan, shard, [&](const PackedTuple& tuple, bool primitive) {
        if ((task.canonical_sort || task.st_symmetry) && !policy_keep(task, tuple)) return;
        acc.sums.total++;
        if (!primitive) return;
        acc.sums.valid++;
        if (acc.sample.size() < task.sample_limit) acc.sample.push_back(tuple);

        if (d == 4 || d == 5) {
            // Per-curve refutation bookkeeping, packed: the column identities
            // hold (they are coefficients of the vanishing fifth-power sum)
            // and the coefficient matrix falls short of maximal rank, which
            // is the rank-deficient trace for this curve.
            if (!gf2fast::column_identities_hold(d, tuple))
                throw Error(Errc::internal_error,
                            "fifth-power column identity failed on an enumerated curve");
            acc.sums.identities_checked++;
            if (gf2fast::coefficient_rank(tuple) >= std::min(6, d + 1)) {
                // Impossible for a curve on the hypersurface; replay the full
                // trace so the inconsistency surfaces with a real diagnostic.
                validate_trace(materialize(tuple, d), refute_low_degree(materialize(tuple, d)));
                throw Error(Errc::trace_inconsistent, "maximal-rank curve without a refutation");
            }
            acc.sums.refuted++;
        }

        if (!gf2fast::free_screen(d, tuple)) return;

        CurveMap curve = materialize(tuple, d);
        ClassificationReport report = classify(curve);
        if (!report.free_curve)
            throw Error(Errc::internal_error,
                        "packed freeness screen disagrees with the classifier");
        audit_report(report); // throws CounterexampleError at degrees 4, 5, ...
        acc.sums.free_count++;
        if (report.very_free) acc.sums.very_free_count++;
        if (report.case_4b) acc.sums.case_4b_count++;
        acc.free_found.emplace_back(tuple, SearchResult{std::move(curve), std::move(report)});
    });
}

} // namespace

int search_degree_cap() { return env_degree_cap(); }

SearchOutcome find_free(const SearchTask& task) {
    SearchPlan plan = make_plan(task);
    if (task.shard_index >= 0 && static_cast<uint32_t>(task.shard_index) >= plan.shards)
        throw Error(Errc::degree_cap_exceeded,
                    "shard index " + std::to_string(task.shard_index) + " out of range (" +
                        std::to_string(plan.shards) + " shards)");

    std::vector<uint32_t> shard_list;
    if (task.shard_index >= 0)
        shard_list.push_back(static_cast<uint32_t>(task.shard_index));
    else
        for (uint32_t s = 0; s < plan.shards; ++s) shard_list.push_back(s);

    std::vector<ShardAccum> accums(shard_list.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= shard_list.size()) return;
            try {
                run_shard_pipeline(task, plan, shard_list[i], accums[i]);
            } catch (...) {
                accums[i].error = std::current_exception();
            }
        }
    };
    const int n_threads = std::min<int>(plan.threads, static_cast<int>(shard_list.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (const auto& acc : accums)
        if (acc.error) std::rethrow_exception(acc.error);

    SearchOutcome out;
    out.summary.degree = plan.degree;
    std::vector<std::pair<PackedTuple, SearchResult>> found;
    std::vector<PackedTuple> sample;
    for (auto& acc : accums) {
        out.summary.total += acc.sums.total;
        out.summary.valid += acc.sums.valid;
        out.summary.free_count += acc.sums.free_count;
        out.summary.very_free_count += acc.sums.very_free_count;
        out.summary.case_4b_count += acc.sums.case_4b_count;
        out.summary.refuted += acc.sums.refuted;
        out.summary.identities_checked += acc.sums.identities_checked;
        for (auto& f : acc.free_found) found.push_back(std::move(f));
        for (auto& s : acc.sample) sample.push_back(s);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& f : found) out.free_results.push_back(std::move(f.second));
    std::sort(sample.begin(), sample.end());
    if (sample.size() > task.sample_limit) sample.resize(task.sample_limit);
    for (const auto& s : sample) out.sample.push_back(materialize(s, plan.degree));
    return out;
}

void enumerate_on_fermat(const SearchTask& task,
                         const std::function<void(const std::array<uint16_t, 6>&)>& sink) {
    SearchPlan plan = make_plan(task);
    for (uint32_t shard = 0; shard < plan.shards; ++shard) {
        if (task.shard_index >= 0 && static_cast<uint32_t>(task.shard_index) != shard) continue;
        scan_shard(task, plan, shard, [&](const PackedTuple& tuple, bool primitive) {
            if ((task.canonical_sort || task.st_symmetry) && !policy_keep(task, tuple)) return;
            if (primitive) sink(tuple);
        });
    }
}

} // namespace fermat
