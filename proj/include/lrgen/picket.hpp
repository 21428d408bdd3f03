#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrgen/tableau.hpp"

namespace lrgen {

/// An indecomposable object of H1: P_eps^m. Allowed shapes are P0^m and
/// P1^m with m >= 1, and P1^0; the pair (0, 0) is the zero object and is
/// rejected.
struct Picket {
    int eps = 0; // dimension of the subspace component, 0 or 1
    int m = 0;   // length of the ambient Jordan block

    Picket() = default;
    Picket(int eps_, int m_);

    friend bool operator==(const Picket& a, const Picket& b) = default;
};

/// Canonical order: m descending, then eps descending.
bool picket_canonical_less(const Picket& a, const Picket& b);

/// An isomorphism class in H1: a finite multiset of pickets, stored in
/// canonical order so equality is list equality.
class H1Object {
public:
    H1Object() = default;
    explicit H1Object(std::vector<Picket> pickets);

    const std::vector<Picket>& pickets() const { return pickets_; }
    bool empty() const { return pickets_.empty(); }

    /// |alpha|: number of pickets with eps = 1.
    int a() const;
    /// |beta|: total of the ambient block lengths.
    std::int64_t b() const;

    /// Multiplicity of P1^0.
    int free_count() const;
    /// True if the object has no P1^0 summand (lies in S1).
    bool in_s1() const { return free_count() == 0; }

    /// Multiset union with another object (direct sum).
    H1Object plus(const H1Object& other) const;

    friend bool operator==(const H1Object& a, const H1Object& b) = default;
    friend bool operator<(const H1Object& a, const H1Object& b);

private:
    std::vector<Picket> pickets_; // canonically sorted
};

/// Builds P_eps^m ⊕ ... convenience helpers.
H1Object object_of(std::initializer_list<Picket> pickets);
H1Object free_pickets(int n); // (P1^0)^n

/// The correspondence Gamma-hat: beta collects the block lengths, gamma
/// collects m per P0^m and m-1 per P1^m, free counts the P1^0 summands.
ExtTableau gamma_hat(const H1Object& m);

/// Inverse of gamma_hat: row i of the tableau yields P0^{beta_i} when the
/// row is entry-free and P1^{beta_i} otherwise; free copies of P1^0 are added.
H1Object from_ext_tableau(const ExtTableau& t);

/// Hom-space dimension between single pickets, from the classification table.
std::int64_t hom_dim_picket(const Picket& p, const Picket& q);

/// [M, N] = dim Hom(M, N); additive over direct sums.
std::int64_t hom_dim(const H1Object& m, const H1Object& n);

/// [M, M], the endomorphism ring dimension.
std::int64_t end_dim(const H1Object& m);

/// Picket-restricted hom-order comparator. Both [P, M] <= [P, N] and
/// [M, P] <= [N, P] must hold for every test picket P0^l, P1^l with
/// l <= max block length + 1, and for P1^0. Requires equal invariants
/// (a, b); throws IncomparableInvariants otherwise.
bool hom_leq(const H1Object& m, const H1Object& n);

/// Text form: "+"-separated pickets ("P0^7+P1^2+P1^0"), listed with m
/// descending and P0 before P1 at equal m; the empty object is "0".
std::string to_string(const Picket& p);
std::string to_string(const H1Object& m);
H1Object parse_object(const std::string& text);

/// All isomorphism classes with exactly the invariants (a, b).
std::vector<H1Object> all_objects_with(int a, int b);

/// All valid tableaux (gamma, beta) with |beta| = b (free = 0 side of the
/// classification); building block for enumerations.
std::vector<LRTableau> all_tableaux_with_weight(int b);

/// All partitions of n, descending-lex order.
std::vector<Partition> all_partitions_of(int n);

} // namespace lrgen
