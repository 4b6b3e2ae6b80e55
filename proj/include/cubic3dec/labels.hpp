#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubic3dec {

enum class Label : std::uint8_t { T = 0, C = 1, M = 2 };

inline char label_char(Label l) { return "TCM"[static_cast<int>(l)]; }
inline std::uint8_t label_bit(Label l) { return static_cast<std::uint8_t>(1u << static_cast<int>(l)); }

Label label_from_char(char c);
std::string labels_str(const std::vector<Label>& ls);
std::vector<Label> labels_from_str(const std::string& s);

}  // namespace cubic3dec
