#pragma once

#include "frc/code.hpp"

namespace fixture {

inline frc::FrCode fano()
{
    return frc::FrCode({7, 3, 3, 7}, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {1, 4, 7}, {2, 5, 7}, {3, 6, 7}, {2, 4, 6}});
}

inline frc::FrCode doubled_pairs()
{
    return frc::FrCode({4, 2, 2, 4}, {{1, 2}, {1, 2}, {3, 4}, {3, 4}});
}

inline frc::FrCode grid()
{
    return frc::FrCode({6, 3, 2, 9}, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}});
}

} // namespace fixture
