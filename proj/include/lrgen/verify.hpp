#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrgen/oracle.hpp"

namespace lrgen {

struct VerifyReport {
    std::string suite;
    std::int64_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// All isomorphism classes with b <= max_b and at most max_free copies of
/// P1^0. The free cap keeps the enumeration finite; behavior beyond it is
/// uniform (extra P1^0 summands pass through extensions untouched).
std::vector<H1Object> all_objects_up_to(int max_b, int max_free);

/// Matrix-computed hom dimensions against the picket table, for all picket
/// pairs with block length <= max_m (P1^0 included), over every given prime.
VerifyReport verify_table(int max_m, const std::vector<int>& primes);

/// Round trips: gamma_hat / from_ext_tableau over all tableaux with
/// |beta| <= max_b_tableau and free <= max_free, and identify(realize(M)) = M
/// for all objects with b <= max_b_matrix.
VerifyReport verify_roundtrip(int max_b_tableau, int max_free, int max_b_matrix, int prime);

/// The central equivalence: brute_generic_ext == generic_extension for every
/// ordered pair with b_N + b_M <= max_b, with the end_dim minimizer unique.
/// Pairs are checked in parallel when opts.parallel is set.
VerifyReport verify_main(int max_b, int max_free, const OracleOptions& opts);

/// Associativity of the tableau product on random triples.
VerifyReport verify_assoc(int trials, int max_weight, std::uint64_t seed);

/// Picket lemmas: [P1^0, M] = 0 (table and matrices), Ext(M, P1^0) = 0,
/// and the two hom-order comparisons, at the given sizes.
VerifyReport verify_lemmas(int max_b, int max_m, const OracleOptions& opts);

/// Deterministic generator of valid tableaux for property-style suites.
class TableauGen {
public:
    explicit TableauGen(std::uint64_t seed) : state_(seed ? seed : 1) {}
    LRTableau next(int max_weight);
    std::uint64_t next_raw();

private:
    std::uint64_t state_;
};

} // namespace lrgen
