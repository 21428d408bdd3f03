#pragma once

#include <vector>

#include "lrgen/tableau.hpp"

namespace lrgen {

/// Loop state of star_lr1 exposed for inspection: counters[i] holds the
/// value n_i (counters[0] = n_0 = 0) and appended_ones is how many parts
/// equal to 1 the final union step added.
struct StarTrace {
    std::vector<int> counters;
    int appended_ones = 0;
};

/// The product Z = Y * X on LR-tableaux.
///
/// gamma^Z = gamma^X + gamma^Y. Rows 1..min(len beta^X, len beta^Y) set
/// beta^Z_i = beta^X_i + gamma^Y_i and bump the counter whenever row i of Y
/// carries an entry. The longer tableau's tail rows are then copied, except
/// that an entry-free tail row of Y absorbs one pending counter unit as an
/// extra box. Whatever counter remains is appended as parts equal to 1.
LRTableau star_lr1(const LRTableau& x, const LRTableau& y, StarTrace* trace = nullptr);

struct FillResult {
    LRTableau tab;
    int leftover = 0;
};

/// The product (Z, m) = (empty, n) * (X, 0): scanning rows bottom-up, each
/// entry-free row turns into an entry row (gamma_i drops by one) while
/// budget remains; the unused budget is returned.
FillResult fill(const LRTableau& x, int n);

/// The product (Y, n) * (X, m) on LR1 x N: fill X with n, multiply by Y,
/// and carry leftover + m.
ExtTableau star_ext(const ExtTableau& xm, const ExtTableau& yn);

} // namespace lrgen
