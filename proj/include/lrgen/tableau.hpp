#pragma once

#include <string>
#include <vector>

#include "lrgen/partition.hpp"

namespace lrgen {

/// An LR-tableau with all entries equal to 1, identified with the pair
/// (gamma, beta) of its inner and outer shapes. Valid pairs satisfy
/// gamma ⊆ beta and beta_i <= gamma_i + 1 in every row, so each row
/// carries at most one entry.
class LRTableau {
public:
    LRTableau() = default; // the empty tableau

    const Partition& gamma() const { return gamma_; }
    const Partition& beta() const { return beta_; }

    bool empty() const { return beta_.empty(); }

    /// Number of entries, |beta| - |gamma|.
    std::int64_t entry_count() const { return weight(beta_) - weight(gamma_); }

    friend bool operator==(const LRTableau& a, const LRTableau& b) = default;
    friend auto operator<=>(const LRTableau& a, const LRTableau& b) = default;

    friend LRTableau make(Partition gamma, Partition beta);

private:
    Partition gamma_;
    Partition beta_;
};

/// Validating constructor. Throws NotContained or NotHorizontalStrip.
LRTableau make(Partition gamma, Partition beta);

/// A tableau together with a free counter, an element of LR1 x N.
struct ExtTableau {
    LRTableau tab;
    int free = 0;

    ExtTableau() = default;
    ExtTableau(LRTableau t, int n);

    friend bool operator==(const ExtTableau& a, const ExtTableau& b) = default;
    friend auto operator<=>(const ExtTableau& a, const ExtTableau& b) = default;
};

/// 1-based indices of rows carrying an entry (beta_i = gamma_i + 1), ascending.
std::vector<int> entry_rows(const LRTableau& t);

/// 1-based indices of rows without an entry (beta_i = gamma_i), ascending,
/// restricted to i <= length(beta).
std::vector<int> empty_rows(const LRTableau& t);

enum class RenderConvention {
    Definition, // row i: gamma_i dots then (beta_i - gamma_i) ones
    Paper,      // the conjugate drawing: same rule applied to (dual gamma, dual beta)
};

/// ASCII drawing, one row per line, '.' for inner boxes and '1' for entries.
/// The empty tableau renders as the empty string.
std::string render(const LRTableau& t, RenderConvention convention);

/// Serialized form: "beta=<partition>;gamma=<partition>" with ";free=<n>"
/// appended when free > 0.
std::string to_string(const LRTableau& t);
std::string to_string(const ExtTableau& t);

/// Parses the serialized form; a missing "free=" field yields free = 0.
/// Validates via make(). Throws ParseError / NotContained / NotHorizontalStrip.
ExtTableau parse_tableau(const std::string& text);

/// True if the serialized text carries an explicit "free=" field.
bool has_free_field(const std::string& text);

} // namespace lrgen
