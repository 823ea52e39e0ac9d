#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dhtee {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(ByteView b) {
    return std::string(b.begin(), b.end());
}

std::string hex(ByteView bytes);
Bytes from_hex(std::string_view text);

template <std::size_t N>
std::string hex(const std::array<std::uint8_t, N>& a) {
    return hex(ByteView(a.data(), a.size()));
}

} // namespace dhtee
