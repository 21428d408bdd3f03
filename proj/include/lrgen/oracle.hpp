#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "lrgen/fp.hpp"
#include "lrgen/picket.hpp"

namespace lrgen {

/// The oracle's working field F_p. Kept tiny so exhaustive morphism
/// enumeration stays finite.
struct FieldParam {
    int p = 2;
    explicit FieldParam(int prime = 2);
};

struct OracleOptions {
    FieldParam field{2};
    /// Hom spaces of dimension above this are not enumerated.
    int max_hom_dim = 20;
    /// Upper bound on b_M + b_N accepted by the extension search.
    std::int64_t max_total_b = 6;
    /// Run the candidate scan with OpenMP.
    bool parallel = false;
};

/// Concrete realization of an H1Object over F_p: a nilpotent J in Jordan
/// form of type beta acting on F^{|beta|}, and a map f: F^a -> F^{|beta|}
/// with J f = 0.
struct MatObject {
    int a = 0;
    Partition beta;
    FpMat j;
    FpMat f;
};

/// Canonical block-diagonal realization. Blocks are laid out with m
/// descending and P0 before P1 at equal m, each block's basis running from
/// the generator down to the socle; every P1^m column hits its block's
/// socle vector and every P1^0 contributes a zero column.
MatObject realize(const H1Object& m, FieldParam fp);

/// Jordan type of a nilpotent matrix via its rank sequence.
/// Throws NotNilpotent.
Partition jordan_type(const FpMat& a);

/// Basis of the space of morphisms (phi1, phi2): M -> N, i.e. solutions of
/// phi2 J_M = J_N phi2 and phi2 f_M = f_N phi1.
struct HomBasis {
    int p = 2;
    int phi1_rows = 0, phi1_cols = 0;
    int phi2_rows = 0, phi2_cols = 0;
    std::vector<std::pair<FpMat, FpMat>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

HomBasis hom_space(const MatObject& m, const MatObject& n);

/// Walks all p^dim elements of a hom space, starting at the zero morphism.
/// Each step adds a single basis element, so advancing is cheap.
class MorphismEnumerator {
public:
    explicit MorphismEnumerator(const HomBasis& basis);

    const FpMat& phi1() const { return phi1_; }
    const FpMat& phi2() const { return phi2_; }

    /// Advances to the next morphism; false once all have been visited.
    bool next();

private:
    const HomBasis& basis_;
    std::vector<int> digits_;
    FpMat phi1_, phi2_;
};

/// Recovers the isomorphism class from rank invariants: free = dim ker f,
/// beta = Jordan type of J, gamma = Jordan type of the operator J induces
/// on coker f.
H1Object identify(const MatObject& m);

/// The set of isomorphism classes U (within H1, invariants summed) fitting
/// in a short exact sequence 0 -> M -> U -> N -> 0, found by enumerating
/// injections M -> U and identifying cokernels.
/// Throws SearchSpaceTooLarge when a guard in `opts` is exceeded.
std::set<H1Object> all_extensions(const H1Object& n, const H1Object& m,
                                  const OracleOptions& opts);

/// Plain-loop reference for all_extensions; results must coincide.
std::set<H1Object> all_extensions_serial(const H1Object& n, const H1Object& m,
                                         const OracleOptions& opts);

/// OpenMP kernel: candidates are scanned in parallel.
std::set<H1Object> all_extensions_parallel(const H1Object& n, const H1Object& m,
                                           const OracleOptions& opts);

/// The extension with minimal end_dim; throws NonUniqueMinimum if the
/// minimizer is not unique.
H1Object brute_generic_ext(const H1Object& n, const H1Object& m, const OracleOptions& opts);

/// True iff the only extension of M by P1^0 is the split one.
/// Throws NotInS1 if M has a P1^0 summand.
bool check_ext_vanishing(const H1Object& m, const OracleOptions& opts);

} // namespace lrgen
