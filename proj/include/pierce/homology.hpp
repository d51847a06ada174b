#pragma once

#include "pierce/module.hpp"

namespace pierce {

/// Grade / depth answers: an exact value, a certified "> cutoff", or a
/// certified infinity (zero module, improper ideal).
struct GradeBound {
    enum class Kind { exact, beyond_cutoff, infinite };
    Kind kind = Kind::beyond_cutoff;
    long value = 0;  // meaningful for exact
    long cutoff = 0;

    static GradeBound exact(long v, long c) { return {Kind::exact, v, c}; }
    static GradeBound beyond(long c) { return {Kind::beyond_cutoff, 0, c}; }
    static GradeBound infinite(long c) { return {Kind::infinite, 0, c}; }

    bool resolved() const { return kind == Kind::exact; }
    bool is_infinite() const { return kind == Kind::infinite; }
    /// Certified to be >= g?
    bool at_least(long g) const { return kind == Kind::exact ? value >= g : (kind == Kind::infinite || cutoff >= g); }
    std::string str() const {
        switch (kind) {
            case Kind::exact: return std::to_string(value);
            case Kind::beyond_cutoff: return ">" + std::to_string(cutoff);
            default: return "inf";
        }
    }
};

/// Dims and differentials of a (co)chain complex, with exact d.d = 0.
struct ChainComplex {
    std::vector<long> dims;
    // cochain: d[n] maps degree n -> n+1 (needs dims[n+1] x dims[n] shapes);
    // chain:   d[n] maps degree n -> n-1, d[0] = 0 map
    std::vector<Mat> d;
    bool cochain = true;

    bool check_dd() const;
    std::vector<long> homology_dims() const;
};

struct ResolutionLimits {
    long max_total_dim = 20000;
};

/// Free resolution ... -> F_1 -> F_0 -> M -> 0 with F_n = A^{ranks[n]}.
/// diff[0] is the augmentation (dim M x ranks[0]*d); diff[n] for n >= 1 maps
/// F_n -> F_{n-1}. Exactness holds by construction and is re-checked through
/// rank bookkeeping. Covers pick near-minimal generator sets
/// deterministically (fixed mixing sequence).
struct Resolution {
    AlgP A;
    long module_dim = 0;
    std::vector<long> ranks;
    std::vector<Mat> diff;
};

Resolution free_resolution(const RightModule& M, long length, ResolutionLimits lim = {});

struct ExtTable {
    std::vector<long> dims;  // degrees 0..n_max
};

ExtTable ext_dims(const RightModule& M, const RightModule& N, long n_max,
                  ResolutionLimits lim = {});

/// Tor_j^A(M, N) for M a right and N a left A-module.
ExtTable tor_dims(const RightModule& M, const Bimodule& N_left, long n_max,
                  ResolutionLimits lim = {});

/// Least i <= cutoff with Ext^i_A(M, A) != 0, or "> cutoff"; the zero module
/// has infinite grade (empty infimum).
GradeBound grade_of(const RightModule& M, long cutoff, ResolutionLimits lim = {});

/// depth(I, S) = grade of S/I for commutative S, with depth(S, S) infinite.
GradeBound depth_on_ideal(const AlgP& S, const Subspace& I, long cutoff,
                          ResolutionLimits lim = {});

/// Projective dimension as the first projective syzygy, up to the cutoff.
GradeBound projective_dimension(const RightModule& M, long cutoff, ResolutionLimits lim = {});

/// Global dimension of an Artinian algebra as pd(A / rad A). Undetermined
/// (nullopt) when the radical criterion does not apply to the ground field.
std::optional<GradeBound> global_dimension(const AlgP& A, long cutoff,
                                           ResolutionLimits lim = {});

/// Boundaries of the complex T_j = X (x) A^{(x)j} (x) Y; entry j (1-based)
/// maps T_j -> T_{j-1}, up to j = jmax. Index of a pure tensor:
/// (x * d^j + big-endian tuple) * dim(Y) + y.
std::vector<Mat> bar_boundaries(const Bimodule& X, const Bimodule& Y, long jmax,
                                long dim_cap = 2000000);

/// The complex X (x) A^{(x)j} (x) Y computing Tor^A(X,Y), carried with the
/// outer (L-of-X, R-of-Y) bimodule actions; homology is materialized as
/// subquotients so outer actions restrict to it.
struct BarHomology {
    std::vector<long> hdims;  // H_0..H_jmax
    struct Space {
        std::vector<Vec> hbasis;  // representative cycles in T_j coordinates
        std::vector<Mat> lam, rho;  // induced outer actions on the classes
    };
    std::vector<Space> spaces;
};
BarHomology two_sided_bar_homology(const Bimodule& X, const Bimodule& Y, long jmax,
                                   long dim_cap = 2000000);

}  // namespace pierce
