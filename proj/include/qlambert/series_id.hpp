#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace qlambert
{

enum class series_id { Y_DEF, Y_EQ1, Y_EQ2, Z, A, B, B1, D1, D2, S, L1, L2, L3, PHI };

inline constexpr std::array all_series_ids = {series_id::Y_DEF, series_id::Y_EQ1, series_id::Y_EQ2, series_id::Z,
                                              series_id::A,     series_id::B,     series_id::B1,    series_id::D1,
                                              series_id::D2,    series_id::S,     series_id::L1,    series_id::L2,
                                              series_id::L3,    series_id::PHI};

inline std::string_view to_string(series_id id)
{
    switch (id) {
        case series_id::Y_DEF:
            return "Y_DEF";
        case series_id::Y_EQ1:
            return "Y_EQ1";
        case series_id::Y_EQ2:
            return "Y_EQ2";
        case series_id::Z:
            return "Z";
        case series_id::A:
            return "A";
        case series_id::B:
            return "B";
        case series_id::B1:
            return "B1";
        case series_id::D1:
            return "D1";
        case series_id::D2:
            return "D2";
        case series_id::S:
            return "S";
        case series_id::L1:
            return "L1";
        case series_id::L2:
            return "L2";
        case series_id::L3:
            return "L3";
        case series_id::PHI:
            return "PHI";
    }
    return "?";
}

inline std::optional<series_id> parse_series_id(std::string_view name)
{
    for (auto id : all_series_ids) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

} // namespace qlambert
