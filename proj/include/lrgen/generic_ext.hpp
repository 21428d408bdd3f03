#pragma once

#include "lrgen/picket.hpp"
#include "lrgen/star.hpp"

namespace lrgen {

/// The generic extension N * M in H1 (M embedded as the sub-object, N as
/// the quotient), computed combinatorially through the tableau
/// correspondence.
H1Object generic_extension(const H1Object& n, const H1Object& m);

/// The S1 special case, via the tableau product alone. Throws NotInS1 if
/// an argument has a P1^0 summand.
H1Object generic_extension_s1(const H1Object& n, const H1Object& m);

/// The generic extension of (P1^0)^n by M in S1, via the fill operation.
/// Throws NotInS1 if M has a P1^0 summand.
H1Object generic_extension_by_free(const H1Object& m, int n);

} // namespace lrgen
