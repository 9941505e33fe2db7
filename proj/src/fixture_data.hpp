#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace cutgroeb::data {

extern const std::vector<std::vector<int>> kK23;
extern const std::vector<std::vector<int>> kFig1;
extern const std::vector<std::vector<int>> kC7BlockA;
extern const std::vector<std::vector<int>> kC7BlockB;
extern const std::vector<std::vector<int>> kC7BlockC;
extern const std::vector<std::int64_t> kWeightFig1;
extern const std::vector<std::size_t> kLexC7;
extern const std::vector<std::size_t> kLex1B;
extern const std::vector<std::size_t> kLex1ASegment;
extern const std::string_view kGoldenFig1;

}  // namespace cutgroeb::data
