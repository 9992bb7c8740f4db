#pragma once

#include <array>

namespace pmtopo::detail {

struct CatalogEntry {
  std::array<int, 4> tableau;  // a b / c d
  std::array<std::array<int, 4>, 12> segments;  // doubled figure coordinates
};

// Drawn perfect matchings of H_{2x2x2}, one per plane partition, in the
// order they are catalogued.
inline constexpr std::array<CatalogEntry, 20> kCatalog222 = {{
    {{2, 2, 2, 2},
     {{{4, 9, 6, 6}, {4, 15, 6, 12}, {6, 18, 10, 18}, {10, 6, 12, 3}, {10, 12, 12, 9}, {12, 15, 16, 15},
       {12, 21, 16, 21}, {16, 3, 18, 6}, {16, 9, 18, 12}, {18, 18, 22, 18}, {22, 6, 24, 9}, {22, 12, 24, 15}}}},
    {{2, 2, 2, 1},
     {{{4, 9, 6, 6}, {4, 15, 6, 12}, {6, 18, 10, 18}, {10, 6, 12, 3}, {10, 12, 12, 15}, {12, 9, 16, 9},
       {12, 21, 16, 21}, {16, 3, 18, 6}, {16, 15, 18, 12}, {18, 18, 22, 18}, {22, 6, 24, 9}, {22, 12, 24, 15}}}},
    {{2, 2, 2, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 12}, {6, 18, 10, 18}, {10, 6, 12, 9}, {10, 12, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 6}, {16, 15, 18, 12}, {18, 18, 22, 18}, {22, 6, 24, 9}, {22, 12, 24, 15}}}},
    {{2, 2, 1, 1},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 3}, {10, 18, 12, 15}, {12, 9, 16, 9},
       {12, 21, 16, 21}, {16, 3, 18, 6}, {16, 15, 18, 12}, {18, 18, 22, 18}, {22, 6, 24, 9}, {22, 12, 24, 15}}}},
    {{2, 2, 1, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 9}, {10, 18, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 6}, {16, 15, 18, 12}, {18, 18, 22, 18}, {22, 6, 24, 9}, {22, 12, 24, 15}}}},
    {{2, 2, 0, 0},
     {{{4, 9, 6, 12}, {4, 15, 6, 18}, {6, 6, 10, 6}, {10, 12, 12, 9}, {10, 18, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 6}, {16, 15, 18, 12}, {18, 18, 22, 18}, {22, 6, 24, 9}, {22, 12, 24, 15}}}},
    {{2, 1, 2, 1},
     {{{4, 9, 6, 6}, {4, 15, 6, 12}, {6, 18, 10, 18}, {10, 6, 12, 3}, {10, 12, 12, 15}, {12, 9, 16, 9},
       {12, 21, 16, 21}, {16, 3, 18, 6}, {16, 15, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{2, 1, 2, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 12}, {6, 18, 10, 18}, {10, 6, 12, 9}, {10, 12, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 6}, {16, 15, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{2, 1, 1, 1},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 3}, {10, 18, 12, 15}, {12, 9, 16, 9},
       {12, 21, 16, 21}, {16, 3, 18, 6}, {16, 15, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{2, 1, 1, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 9}, {10, 18, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 6}, {16, 15, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{2, 1, 0, 0},
     {{{4, 9, 6, 12}, {4, 15, 6, 18}, {6, 6, 10, 6}, {10, 12, 12, 9}, {10, 18, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 6}, {16, 15, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{2, 0, 2, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 12}, {6, 18, 10, 18}, {10, 6, 12, 9}, {10, 12, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 12}, {16, 15, 18, 18}, {18, 6, 22, 6}, {22, 12, 24, 9}, {22, 18, 24, 15}}}},
    {{2, 0, 1, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 9}, {10, 18, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 12}, {16, 15, 18, 18}, {18, 6, 22, 6}, {22, 12, 24, 9}, {22, 18, 24, 15}}}},
    {{2, 0, 0, 0},
     {{{4, 9, 6, 12}, {4, 15, 6, 18}, {6, 6, 10, 6}, {10, 12, 12, 9}, {10, 18, 12, 15}, {12, 3, 16, 3},
       {12, 21, 16, 21}, {16, 9, 18, 12}, {16, 15, 18, 18}, {18, 6, 22, 6}, {22, 12, 24, 9}, {22, 18, 24, 15}}}},
    {{1, 1, 1, 1},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 3}, {10, 18, 12, 21}, {12, 9, 16, 9},
       {12, 15, 16, 15}, {16, 3, 18, 6}, {16, 21, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{1, 1, 1, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 9}, {10, 18, 12, 21}, {12, 3, 16, 3},
       {12, 15, 16, 15}, {16, 9, 18, 6}, {16, 21, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{1, 1, 0, 0},
     {{{4, 9, 6, 12}, {4, 15, 6, 18}, {6, 6, 10, 6}, {10, 12, 12, 9}, {10, 18, 12, 21}, {12, 3, 16, 3},
       {12, 15, 16, 15}, {16, 9, 18, 6}, {16, 21, 18, 18}, {18, 12, 22, 12}, {22, 6, 24, 9}, {22, 18, 24, 15}}}},
    {{1, 0, 1, 0},
     {{{4, 9, 6, 6}, {4, 15, 6, 18}, {6, 12, 10, 12}, {10, 6, 12, 9}, {10, 18, 12, 21}, {12, 3, 16, 3},
       {12, 15, 16, 15}, {16, 9, 18, 12}, {16, 21, 18, 18}, {18, 6, 22, 6}, {22, 12, 24, 9}, {22, 18, 24, 15}}}},
    {{1, 0, 0, 0},
     {{{4, 9, 6, 12}, {4, 15, 6, 18}, {6, 6, 10, 6}, {10, 12, 12, 9}, {10, 18, 12, 21}, {12, 3, 16, 3},
       {12, 15, 16, 15}, {16, 9, 18, 12}, {16, 21, 18, 18}, {18, 6, 22, 6}, {22, 12, 24, 9}, {22, 18, 24, 15}}}},
    {{0, 0, 0, 0},
     {{{4, 9, 6, 12}, {4, 15, 6, 18}, {6, 6, 10, 6}, {10, 12, 12, 15}, {10, 18, 12, 21}, {12, 3, 16, 3},
       {12, 9, 16, 9}, {16, 15, 18, 12}, {16, 21, 18, 18}, {18, 6, 22, 6}, {22, 12, 24, 9}, {22, 18, 24, 15}}}},
}};

}  // namespace pmtopo::detail
