#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrgen/errors.hpp"

namespace lrgen {

/// An integer partition: a non-increasing list of positive parts.
/// The zero partition is the empty list; canonical form stores no
/// trailing zeros, so equality is plain list equality.
class Partition {
public:
    Partition() = default;

    /// Accepts a non-increasing list; trailing zeros are stripped.
    /// Throws Error if the list increases anywhere or has a negative part.
    explicit Partition(std::vector<int> parts);

    static Partition zero() { return Partition{}; }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }

    /// 1-based part access; rows past the end read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
};

/// Conjugate partition: result_i = #{j : p_j >= i}.
Partition dual(const Partition& p);

/// Pointwise sum, missing parts read as 0.
Partition sum(const Partition& p, const Partition& q);

/// Multiset union of parts, re-sorted descending.
Partition union_parts(const Partition& p, const Partition& q);

/// Sum of all parts.
std::int64_t weight(const Partition& p);

/// Componentwise containment: q_i <= p_i for all i.
bool contains(const Partition& p, const Partition& q);

/// Maximum part size accepted by parse_partition.
inline constexpr int kDefaultMaxPart = 1'000'000;

/// Text form: comma-separated positive integers ("5,4,3,3,1").
/// The zero partition is "0" or the empty string.
/// `offset` shifts reported error positions (for embedding in larger grammars).
Partition parse_partition(const std::string& text, int max_part = kDefaultMaxPart,
                          std::size_t offset = 0);

/// Inverse of parse_partition; the zero partition prints as "0".
std::string to_string(const Partition& p);

} // namespace lrgen
