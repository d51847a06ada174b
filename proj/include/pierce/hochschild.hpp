#pragma once

#include "pierce/morita.hpp"

namespace pierce {

struct BarOptions {
    // refuse building the differential out of degree n once
    // dim(A)^(n+1) * dim(coeff) exceeds this cap
    long cap = 200000;
};

/// Truncated Hochschild cochain complex of A with bimodule coefficients:
/// C^n = Hom_K(A^(x)n, M), coordinates (big-endian basis tuple) * dim(M) + t.
struct BarTruncation {
    AlgP A;
    Bimodule coeff;
    long nmax = 0;      // requested
    long feasible = 0;  // largest n with delta[n] built; HH^n computable for n <= feasible
    std::vector<long> cdim;   // 0..feasible+1
    std::vector<Mat> delta;   // delta[n]: C^n -> C^{n+1}, 0..feasible
    std::vector<long> delta_rank;  // cached ranks, parallel to delta

    long hh_dim(long n) const;  // requires n <= feasible
};

BarTruncation bar_truncation(const AlgP& A, const Bimodule& coeff, long nmax, BarOptions opt = {});

struct HHTable {
    std::vector<long> dims;  // degrees 0..feasible
    long feasible = 0;
    std::string method;
};

/// In strict mode an infeasible requested degree raises ResourceLimit naming
/// the offending degree; otherwise the table is truncated at the feasible one.
HHTable hh_via_bar(const AlgP& A, const Bimodule& coeff, long nmax, BarOptions opt = {},
                   bool strict = false);
HHTable hh_via_ext(const AlgP& A, const Bimodule& coeff, long nmax, ResolutionLimits lim = {});

/// Cup product of cochains with coefficients in the algebra itself:
/// (phi . psi)(a_1..a_{m+n}) = phi(a_1..a_m) * psi(a_{m+1}..a_{m+n}).
Vec cup_product(const Algebra& A, long m, const Vec& phi, long n, const Vec& psi);

/// Is the n-cochain z a coboundary (z = delta of an (n-1)-cochain)?
bool is_coboundary(const BarTruncation& bt, long n, const Vec& z);

/// The corner comparison map on cochains, degreewise:
/// chi(phi)(a_1..a_n) = compress_e(phi(a_1, ..., a_n)) for a_i in eCe.
struct ChiData {
    BarTruncation barC, barA;
    std::vector<Mat> chi;  // 0..feasible
    long feasible = 0;
    bool chain_map = false;
};
ChiData chi_comparison(const MoritaContext& ctx, long nmax, BarOptions opt = {});

/// Rank data of the map induced on cohomology in degree n by a cochain map.
struct InducedMap {
    long dim_src = 0, dim_dst = 0, rank = 0;
    bool injective = false, surjective = false, bijective = false;
};
InducedMap induced_on_hh(const BarTruncation& src, const BarTruncation& dst, const Mat& map_n,
                         long n);

struct MHHReport {
    GradeBound g;             // grade_C(Cbar)
    bool inconclusive = false;  // grade unresolved under the cutoff
    long feasible = 0;          // chi degrees available
    bool full_coverage = false; // all degrees the theorem speaks of were feasible
    std::vector<InducedMap> chi_maps;  // per degree 0..feasible
    bool chi_iso_below = false;        // bijective for j <= g-2
    bool chi_inj_at_gm1 = false;       // injective at j = g-1
    std::vector<long> rel_dims;        // HH^i(C/A) from the long exact sequence
    bool rel_vanishing = false;        // rel_dims[i] == 0 for i < g (feasible range)
    bool homology_id_match = false;    // relative complex homology identification
};
/// A precomputed ChiData for the same context may be supplied to avoid
/// rebuilding the bar truncations.
MHHReport verify_MHH(const MoritaContext& ctx, long cutoff, BarOptions opt = {},
                     const ChiData* pre = nullptr);

/// Debug-mode materialization: homology dims of the quotient complex
/// B(C)/ (Ce (x) B(A) (x) eC) in degrees 0..jmax. Exponential in jmax.
std::vector<long> relative_bar_homology_dims(const MoritaContext& ctx, long jmax,
                                             long dim_cap = 2000000);

}  // namespace pierce
