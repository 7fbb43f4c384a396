#include "apolab/hvector.hpp"

#include "apolab/errors.hpp"

#include <charconv>

namespace apolab {

void HVector::validate() const {
    if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty h-vector");
    if (entries.front() != 1) throw Error(ErrorCode::InvalidArgument, "h_0 must be 1");
    if (entries.back() == 0) throw Error(ErrorCode::InvalidArgument, "last entry of an h-vector must be positive");
}

std::string HVector::join(std::string_view sep) const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(entries[i]);
    }
    return out;
}

HVector HVector::parse(std::string_view text, char sep) {
    HVector h;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find(sep, pos), text.size());
        const std::string_view piece = text.substr(pos, end - pos);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw Error(ErrorCode::ParseError, "bad h-vector entry '" + std::string(piece) + "' at position " +
                                                   std::to_string(pos));
        }
        h.entries.push_back(value);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return h;
}

} // namespace apolab
