#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace apolab {

/// Graded dimensions (h_0, ..., h_e) of an artinian algebra.
struct HVector {
    std::vector<std::uint64_t> entries;

    std::size_t size() const noexcept { return entries.size(); }
    /// e, the last index. Only meaningful on a non-empty vector.
    unsigned socle_degree() const noexcept { return static_cast<unsigned>(entries.size()) - 1; }
    std::uint64_t operator[](std::size_t i) const { return entries[i]; }

    /// Throws Error(InvalidArgument) unless h_0 = 1 and h_e > 0.
    void validate() const;

    /// "1,3,6" (or any separator).
    std::string join(std::string_view sep = ",") const;

    /// Parses a separated list of non-negative integers. Throws
    /// Error(ParseError).
    static HVector parse(std::string_view text, char sep = ',');

    friend bool operator==(const HVector&, const HVector&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const HVector& h) { return os << '(' << h.join() << ')'; }

} // namespace apolab
