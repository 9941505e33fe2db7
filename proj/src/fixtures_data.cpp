// Matrices, weights, and variable orders as printed, in printed column order.
#include "fixture_data.hpp"

namespace cutgroeb::data {

// Cut configuration of K_{2,3} on {1,2} u {3,4,5}, homogenizing row last.
const std::vector<std::vector<int>> kK23 = {
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1},
    {0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1},
    {0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1},
    {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
};

// Cut configuration of the theta graph, homogenizing row last.
const std::vector<std::vector<int>> kFig1 = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1},
    {0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
};

// Blocks of the 7-cycle configuration (cut rows only): weight 2, 4, 6.
const std::vector<std::vector<int>> kC7BlockA = {
    {1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
};
const std::vector<std::vector<int>> kC7BlockB = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0},
    {1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1},
    {0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1},
    {0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1},
    {0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1},
};
const std::vector<std::vector<int>> kC7BlockC = {
    {1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 0, 1},
    {1, 1, 1, 1, 0, 1, 1},
    {1, 1, 1, 0, 1, 1, 1},
    {1, 1, 0, 1, 1, 1, 1},
    {1, 0, 1, 1, 1, 1, 1},
    {0, 1, 1, 1, 1, 1, 1},
};

const std::vector<std::int64_t> kWeightFig1 = {25, 24, 24, 45, 46, 44, 37, 37, 47, 47, 63, 107, 47, 25, 24, 46, 36, 33, 20, 26, 102, 87, 80, 103, 92, 35, 25, 26, 53, 37, 22, 27};

// 1-based variable numbers, highest first.
const std::vector<std::size_t> kLexC7 = {1, 17, 18, 19, 22, 20, 21, 13, 14, 15, 16, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 23, 24, 26, 25, 27, 29, 28, 32, 31, 30, 33, 35, 34, 38, 37, 36, 42, 41, 40, 39, 43, 45, 44, 48, 47, 46, 52, 51, 50, 49, 57, 56, 55, 54, 53, 58, 59, 60, 61, 62, 63, 64};
const std::vector<std::size_t> kLex1B = {1, 2, 4, 3, 5, 7, 6, 10, 9, 8, 11, 13, 12, 16, 15, 14, 20, 19, 18, 17, 21, 23, 22, 26, 25, 24, 30, 29, 28, 27, 35, 34, 33, 32, 31};
const std::vector<std::size_t> kLex1ASegment = {23, 24, 26, 25, 27, 29, 28, 32, 31, 30, 33, 35, 34, 38, 37, 36, 42, 41, 40, 39, 43, 45, 44, 48, 47, 46, 52, 51, 50, 49, 57, 56, 55, 54, 53};

// Reduced basis listing for the theta graph under kWeightFig1, verbatim.
const std::string_view kGoldenFig1 = R"GOLD($\{-x_{20}x_{31}+x_{19}x_{32},-x_{15}x_{3}+x_{14}x_{2},x_{28}x_{20}-x_{27}x_{19},x_{27}x_{31}+x_{28}x_{32},x_{18}x_{31}-x_{30}x_{19},\\
x_{3}x_{32}-x_{8}x_{19},x_{3}x_{31}-x_{7}x_{19},x_{2}x_{19}-x_{18}x_{3},-x_{15}x_{19}+x_{18}x_{14},-x_{26}x_{15}+x_{27}x_{14},\\
x_{27}x_{3}-x_{26}x_{2},x_{1}x_{19}-x_{17}x_{3},-x_{17}x_{2}+x_{1}x_{18},x_{2}x_{31}-x_{30}x_{3},-x_{15}x_{31}+x_{30}x_{14},\\
-x_{30}x_{20}+x_{18}x_{32},x_{7}x_{27}-x_{28}x_{8},x_{7}x_{20}-x_{3}x_{32},-x_{8}x_{31}+x_{7}x_{32},x_{2}x_{31}-x_{6}x_{19},\\
x_{3}x_{20}-x_{4}x_{19},-x_{1}x_{31}+x_{5}x_{19},x_{4}x_{31}-x_{3}x_{32},x_{27}x_{19}-x_{18}x_{26},-x_{6}x_{3}+x_{7}x_{2},\\
-x_{7}x_{15}+x_{6}x_{14},-x_{6}x_{20}+x_{2}x_{32},x_{2}x_{32}-x_{8}x_{18},x_{2}x_{31}-x_{7}x_{18},-x_{5}x_{3}+x_{1}x_{7},\\
-x_{5}x_{2}+x_{1}x_{6},x_{27}x_{3}-x_{4}x_{28},x_{28}x_{15}-x_{16}x_{27},-x_{8}x_{20}+x_{4}x_{32},x_{27}x_{31}-x_{30}x_{26},\\
x_{1}x_{32}-x_{10}x_{27},x_{2}x_{32}-x_{9}x_{27},x_{16}x_{20}-x_{15}x_{19},x_{5}x_{20}-x_{1}x_{32},-x_{15}x_{3}+x_{13}x_{1},\\
-x_{10}x_{2}+x_{9}x_{1},-x_{15}x_{31}+x_{16}x_{32},x_{17}x_{31}-x_{29}x_{19},x_{1}x_{31}-x_{10}x_{28},x_{2}x_{31}-x_{9}x_{28},\\
-x_{1}x_{32}+x_{17}x_{8},x_{1}x_{31}-x_{17}x_{7},x_{6}x_{32}-x_{8}x_{30},x_{6}x_{31}-x_{7}x_{30},x_{1}x_{31}-x_{29}x_{3},\\
-x_{29}x_{2}+x_{1}x_{30},x_{30}x_{2}-x_{6}x_{18},x_{2}x_{20}-x_{4}x_{18},-x_{29}x_{20}+x_{17}x_{32},-x_{6}x_{26}+x_{7}x_{27},\\
x_{5}x_{18}-x_{1}x_{30},-x_{1}x_{30}+x_{17}x_{6},x_{28}x_{14}-x_{16}x_{26},x_{1}x_{20}-x_{17}x_{4},x_{2}x_{32}-x_{4}x_{30},\\
x_{3}x_{32}-x_{9}x_{26},x_{29}x_{1}-x_{17}x_{5},x_{8}x_{3}-x_{4}x_{7},-x_{11}x_{19}+x_{10}x_{18},x_{15}x_{19}-x_{13}x_{17},\\
x_{10}x_{18}-x_{9}x_{17},-x_{7}x_{15}+x_{16}x_{8},-x_{11}x_{31}+x_{10}x_{30},-x_{29}x_{18}+x_{17}x_{30},-x_{11}x_{3}+x_{10}x_{2},\\
-x_{10}x_{15}+x_{11}x_{14},-x_{1}x_{30}+x_{11}x_{28},x_{8}x_{2}-x_{4}x_{6},x_{5}x_{32}-x_{29}x_{8},x_{5}x_{31}-x_{29}x_{7},\\
x_{15}x_{3}-x_{16}x_{4},x_{1}x_{8}-x_{5}x_{4},x_{7}x_{15}-x_{13}x_{5},-x_{10}x_{6}+x_{9}x_{5},x_{9}x_{14}-x_{13}x_{10},\\
x_{5}x_{30}-x_{29}x_{6},-x_{1}x_{32}+x_{29}x_{4},-x_{1}x_{32}+x_{11}x_{26},x_{15}x_{31}-x_{13}x_{29},-x_{10}x_{30}+x_{9}x_{29},\\
-x_{11}x_{7}+x_{10}x_{6},-x_{23}x_{15}+x_{11}x_{27},-x_{1}x_{32}+x_{23}x_{14},x_{9}x_{15}-x_{11}x_{13},-x_{1}x_{32}+x_{22}x_{15},\\
x_{23}x_{3}-x_{22}x_{2},x_{22}x_{14}-x_{10}x_{26},-x_{23}x_{26}+x_{22}x_{27},-x_{25}x_{15}+x_{13}x_{27},-x_{25}x_{14}+x_{13}x_{26},\\
-x_{27}x_{3}+x_{25}x_{1},x_{23}x_{19}-x_{22}x_{18},-x_{23}x_{31}+x_{22}x_{30},-x_{1}x_{30}+x_{23}x_{16},x_{2}x_{32}-x_{21}x_{15},\\
x_{24}x_{15}-x_{1}x_{30},-x_{2}x_{32}+x_{23}x_{13},-x_{3}x_{32}+x_{21}x_{14},x_{23}x_{3}-x_{21}x_{1},-x_{24}x_{27}+x_{23}x_{28}\\
,x_{27}x_{19}-x_{25}x_{17},x_{1}x_{31}-x_{24}x_{14},x_{24}x_{20}-x_{23}x_{19},x_{23}x_{31}-x_{24}x_{32},-x_{23}x_{7}+x_{22}x_{6},\\
-x_{12}x_{15}+x_{11}x_{16},-x_{12}x_{27}+x_{1}x_{30},-x_{12}x_{14}+x_{10}x_{16},x_{1}x_{31}-x_{22}x_{16},x_{12}x_{20}-x_{10}x_{18},\\
-x_{12}x_{32}+x_{10}x_{30},-x_{3}x_{32}+x_{22}x_{13},-x_{24}x_{26}+x_{22}x_{28},x_{13}x_{28}-x_{25}x_{16},-x_{7}x_{27}+x_{25}x_{5},\\
x_{23}x_{19}-x_{21}x_{17},x_{3}x_{32}-x_{25}x_{10},-x_{24}x_{8}+x_{23}x_{7},x_{1}x_{31}-x_{12}x_{26},-x_{12}x_{8}+x_{10}x_{6},\\
x_{27}x_{31}-x_{25}x_{29},-x_{23}x_{3}+x_{24}x_{4},x_{2}x_{31}-x_{21}x_{16},-x_{23}x_{7}+x_{21}x_{5},-x_{12}x_{28}+x_{24}x_{16},\\
-x_{25}x_{9}+x_{21}x_{13},-x_{21}x_{10}+x_{22}x_{9},x_{2}x_{31}-x_{24}x_{13},-x_{23}x_{10}+x_{22}x_{11},x_{10}x_{2}-x_{12}x_{4},\\
x_{9}x_{16}-x_{12}x_{13},-x_{23}x_{31}+x_{21}x_{29},x_{2}x_{32}-x_{25}x_{11},x_{23}x_{9}-x_{21}x_{11},x_{21}x_{27}-x_{25}x_{23},\\
x_{21}x_{26}-x_{25}x_{22},x_{24}x_{11}-x_{12}x_{23},x_{24}x_{10}-x_{12}x_{22},x_{21}x_{28}-x_{24}x_{25},x_{2}x_{31}-x_{12}x_{25},\\
x_{24}x_{9}-x_{12}x_{21}\}$)GOLD";

}  // namespace cutgroeb::data
