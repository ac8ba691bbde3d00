#include "fermat/graded.hpp"

#include <algorithm>
#include <numeric>

#include "fermat/kernel_engine.hpp"

namespace fermat {

namespace {

using Engine = detail::KernelEngine<detail::GenLA>;

Engine engine_for(const KernelSpec& spec) {
    std::vector<int> weights(static_cast<size_t>(spec.arity()), spec.weight());
    return Engine(detail::GenLA{spec.ext()}, spec.targets, std::move(weights));
}

// Hard cap: plain degree 6 * weight, plus slack for the two confirmation
// levels past the last generator.
int cap_for(const KernelSpec& spec) { return 7 * spec.weight() + 4; }

} // namespace

KernelSpec KernelSpec::make(std::vector<BinaryForm> targets) {
    if (targets.empty()) throw Error(Errc::degree_mismatch, "kernel spec needs targets");
    const int d = targets.front().degree();
    const int e = targets.front().ext();
    bool all_zero = true;
    for (const auto& t : targets) {
        if (t.degree() != d) throw Error(Errc::degree_mismatch, "targets of unequal degree");
        if (t.ext() != e) throw Error(Errc::field_mismatch, "targets over different fields");
        all_zero = all_zero && t.is_zero();
    }
    if (all_zero) throw Error(Errc::all_zero, "all kernel targets are zero");
    return KernelSpec{std::move(targets)};
}

KernelSpec omega_spec(const CurveMap& c) {
    return KernelSpec::make({c.forms().begin(), c.forms().end()});
}

KernelSpec extended_spec(const CurveMap& c) {
    std::vector<BinaryForm> t;
    t.reserve(6);
    for (const auto& g : c.forms()) t.push_back(pow4(g));
    return KernelSpec::make(std::move(t));
}

int kernel_dimension(const KernelSpec& spec, int m) {
    if (m < 0) throw Error(Errc::degree_mismatch, "multiplier degree must be >= 0");
    return engine_for(spec).dimension(m + spec.weight());
}

linalg::FMatrix level_matrix(const KernelSpec& spec, int m) {
    return engine_for(spec).relation_matrix(m + spec.weight());
}

GradedKernelBasis minimal_generators(const KernelSpec& spec) {
    Engine eng = engine_for(spec);
    auto gens = eng.minimal_generators(static_cast<size_t>(spec.arity() - 1), cap_for(spec));
    GradedKernelBasis basis;
    basis.weight = spec.weight();
    for (auto& g : gens)
        basis.generators.push_back(
            GradedGenerator{g.level - spec.weight(), std::move(g.coords)});
    return basis;
}

GradedKernelBasis frobenius_lift(const GradedKernelBasis& basis) {
    GradedKernelBasis out;
    out.weight = 4 * basis.weight;
    for (const auto& g : basis.generators) {
        GradedGenerator lifted;
        lifted.plain_degree = 4 * g.plain_degree;
        for (const auto& f : g.coords) lifted.coords.push_back(pow4(f));
        out.generators.push_back(std::move(lifted));
    }
    return out;
}

int SplittingType::sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

SplittingType make_splitting(SplittingType::Kind kind, std::vector<int> entries, int curve_degree) {
    std::sort(entries.begin(), entries.end());
    const size_t want_len = kind == SplittingType::Kind::tangent ? 4 : 5;
    const int want_sum =
        kind == SplittingType::Kind::omega ? -6 * curve_degree : curve_degree;
    SplittingType t{kind, std::move(entries)};
    if (t.entries.size() != want_len || t.sum() != want_sum)
        throw Error(Errc::internal_error,
                    "splitting type violates its degree identity: " + to_string(t) +
                        " for a degree-" + std::to_string(curve_degree) + " curve");
    return t;
}

std::string to_string(const SplittingType& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.entries[i]);
    }
    return s + ")";
}

namespace {

SplittingType omega_type_from(const GradedKernelBasis& b, int d) {
    std::vector<int> e;
    for (const auto& g : b.generators) e.push_back(-d - g.plain_degree);
    return make_splitting(SplittingType::Kind::omega, std::move(e), d);
}

SplittingType extended_type_from(const GradedKernelBasis& b, int d) {
    std::vector<int> f;
    for (const auto& g : b.generators) f.push_back(d - g.plain_degree);
    return make_splitting(SplittingType::Kind::extended, std::move(f), d);
}

/// Tangent type from an extended-kernel basis. Write the section
/// s = (G_0..G_5) as sum p_i y_i (unique since the y_i are a basis; forced
/// p_i = 0 where f_i < 0). Basis elements with p_i = 0 split off whole, each
/// contributing the entry f_i. The rest contribute the output levels of the
/// minimal generators of {(w_i) : sum p_i w_i = 0}; that kernel is the dual
/// of the quotient, which is free because the section vanishes nowhere.
SplittingType tangent_from(const CurveMap& c, const GradedKernelBasis& eb) {
    const int d = c.degree();
    const int e = c.ext();

    BinaryForm euler(5 * d, e);
    for (int i = 0; i < 6; ++i) euler = add(euler, mul(c.form(i), pow4(c.form(i))));
    if (!euler.is_zero())
        throw Error(Errc::euler_section_missing,
                    "(G0..G5) is not a relation of the extended kernel");

    const auto& gens = eb.generators;
    const size_t rank = gens.size();
    std::vector<int> f(rank);
    for (size_t i = 0; i < rank; ++i) f[i] = d - gens[i].plain_degree;

    // Solve sum p_i y_i = s in the degree-d slice of the extended kernel.
    std::vector<std::pair<size_t, int>> col_blocks; // (generator, shift q)
    for (size_t i = 0; i < rank; ++i)
        for (int q = 0; f[i] >= 0 && q <= f[i]; ++q) col_blocks.emplace_back(i, q);

    linalg::FMatrix a(6 * (d + 1), static_cast<int>(col_blocks.size()), e);
    for (int col = 0; col < static_cast<int>(col_blocks.size()); ++col) {
        auto [i, q] = col_blocks[static_cast<size_t>(col)];
        for (int j = 0; j < 6; ++j) {
            const BinaryForm& y = gens[i].coords[static_cast<size_t>(j)];
            for (int k = 0; k <= y.degree(); ++k)
                a.add_to(j * (d + 1) + q + k, col, y.coeff(k));
        }
    }
    linalg::FVec b(static_cast<size_t>(6 * (d + 1)), gf_zero(e));
    for (int j = 0; j < 6; ++j)
        for (int t = 0; t <= d; ++t) b[static_cast<size_t>(j * (d + 1) + t)] = c.form(j).coeff(t);
    linalg::FVec x = a.solve_unique(b);

    std::vector<BinaryForm> p(rank, BinaryForm(0, e));
    {
        size_t col = 0;
        for (size_t i = 0; i < rank; ++i) {
            if (f[i] < 0) continue;
            BinaryForm pi(f[i], e);
            for (int q = 0; q <= f[i]; ++q) pi.set_coeff(q, x[col++]);
            p[i] = std::move(pi);
        }
    }

    std::vector<int> entries;
    std::vector<BinaryForm> dual_targets;
    std::vector<int> dual_weights;
    for (size_t i = 0; i < rank; ++i) {
        if (f[i] < 0 || p[i].is_zero()) {
            entries.push_back(f[i]);
        } else {
            dual_targets.push_back(p[i]);
            dual_weights.push_back(f[i]);
        }
    }
    if (!dual_targets.empty()) {
        detail::KernelEngine<detail::GenLA> dual(detail::GenLA{e}, dual_targets, dual_weights);
        auto dual_gens = dual.minimal_generators(dual_targets.size() - 1, 16 * d + 8);
        for (const auto& g : dual_gens) entries.push_back(g.level);
    }
    return make_splitting(SplittingType::Kind::tangent, std::move(entries), d);
}

} // namespace

SplittingType omega_splitting(const CurveMap& c) {
    return omega_type_from(minimal_generators(omega_spec(c)), c.degree());
}

SplittingType extended_splitting(const CurveMap& c) {
    GradedKernelBasis eb = minimal_generators(extended_spec(c));
    std::vector<int> f;
    for (const auto& g : eb.generators) f.push_back(c.degree() - g.plain_degree);
    return make_splitting(SplittingType::Kind::extended, std::move(f), c.degree());
}

SplittingType tangent_splitting(const CurveMap& c) {
    GradedKernelBasis ob = minimal_generators(omega_spec(c));
    return tangent_from(c, frobenius_lift(ob));
}

CurveKernels compute_kernels(const CurveMap& c) {
    CurveKernels k;
    const int d = c.degree();
    KernelSpec os = omega_spec(c);
    k.omega = minimal_generators(os);
    k.extended = frobenius_lift(k.omega);
    k.omega_type = omega_type_from(k.omega, d);
    k.extended_type = extended_type_from(k.extended, d);
    k.tangent_type = tangent_from(c, k.extended);
    for (int m = 0; m <= 2; ++m) k.omega_dims.push_back(kernel_dimension(os, m));
    return k;
}

} // namespace fermat
