#pragma once

// Frozen expected values for the two worked examples: parameters, generators,
// s-sequences, full basis listings, and the P/Q series coefficient supports.

#include <array>
#include <string>
#include <vector>

#include <psns/psns.hpp>

namespace paper {

using psns::i64;

inline psns::PseudoSymParams example1() { return {21, 11, 7, 4, 5}; }
inline psns::PseudoSymParams example2() { return {60, 20, 8, 6, 10}; }

inline psns::GeneratorTuple example1_gens() { return {232, 237, 531, 1447}; }
inline psns::GeneratorTuple example2_gens() { return {801, 831, 5010, 8610}; }

inline std::vector<i64> example1_s() { return {0, 0, 2, 4}; }
// The published prose says s_3 = 1, but the defining inequality and the
// published basis listing (which contains g_{3,2}) both give s_3 = 2.
inline std::vector<i64> example2_s() { return {0, 0, 1, 2, 3, 4}; }

struct ListedBinomial {
  std::string name;
  std::array<i64, 4> lead;
  std::array<i64, 4> tail;
};

inline std::vector<ListedBinomial> example1_listing() {
  return {
      {"g_{0,0}", {0, 1, 0, 3}, {6, 0, 6, 0}},
      {"f_{1,0}", {0, 0, 1, 3}, {21, 0, 0, 0}},
      {"f_4", {0, 0, 0, 4}, {1, 10, 6, 0}},
      {"f_2", {5, 0, 0, 1}, {0, 11, 0, 0}},
      {"f_3", {0, 0, 7, 0}, {15, 1, 0, 0}},
      {"g_{1,0}", {0, 12, 0, 2}, {11, 0, 6, 0}},
      {"f_{1,1}", {0, 11, 1, 2}, {26, 0, 0, 0}},
      {"g_{2,0}", {16, 0, 6, 0}, {0, 23, 0, 1}},
      {"f_{1,2}", {0, 22, 1, 1}, {31, 0, 0, 0}},
      {"f_{1,3}", {0, 33, 1, 0}, {36, 0, 0, 0}},
      {"g_{2,1}", {52, 0, 5, 0}, {0, 56, 0, 1}},
      {"g_{2,2}", {0, 89, 0, 1}, {88, 0, 4, 0}},
      {"g_{3,2}", {93, 0, 4, 0}, {0, 100, 0, 0}},
      {"g_{3,3}", {129, 0, 3, 0}, {0, 133, 0, 0}},
      {"g_{3,4}", {0, 166, 0, 0}, {165, 0, 2, 0}},
  };
}

inline std::vector<ListedBinomial> example2_listing() {
  return {
      {"g_{0,0}", {0, 1, 0, 5}, {11, 0, 7, 0}},
      {"f_{1,0}", {0, 0, 1, 5}, {60, 0, 0, 0}},
      {"f_4", {0, 0, 0, 6}, {1, 19, 7, 0}},
      {"f_3", {0, 0, 8, 0}, {49, 1, 0, 0}},
      {"f_2", {10, 0, 0, 1}, {0, 20, 0, 0}},
      {"g_{1,0}", {0, 21, 0, 4}, {21, 0, 7, 0}},
      {"f_{1,1}", {0, 20, 1, 4}, {70, 0, 0, 0}},
      {"g_{2,0}", {31, 0, 7, 0}, {0, 41, 0, 3}},
      {"f_{1,2}", {0, 40, 1, 3}, {80, 0, 0, 0}},
      {"f_{1,3}", {0, 60, 1, 2}, {90, 0, 0, 0}},
      {"f_{1,4}", {0, 80, 1, 1}, {100, 0, 0, 0}},
      {"f_{1,5}", {0, 100, 1, 0}, {110, 0, 0, 0}},
      {"g_{2,1}", {0, 141, 0, 3}, {141, 0, 6, 0}},
      {"g_{3,1}", {151, 0, 6, 0}, {0, 161, 0, 2}},
      {"g_{3,2}", {0, 261, 0, 2}, {261, 0, 5, 0}},
      {"g_{4,2}", {271, 0, 5, 0}, {0, 281, 0, 1}},
      {"g_{4,3}", {0, 381, 0, 1}, {381, 0, 4, 0}},
      {"g_{5,3}", {391, 0, 4, 0}, {0, 401, 0, 0}},
      {"g_{5,4}", {0, 501, 0, 0}, {501, 0, 3, 0}},
  };
}

struct Term {
  i64 deg;
  i64 coeff;
};

inline psns::UniPoly from_terms(const std::vector<Term>& terms) {
  psns::UniPoly p;
  for (const Term& t : terms) p += psns::UniPoly({t.coeff}) * psns::UniPoly::tpow(t.deg);
  return p;
}

inline psns::UniPoly example1_P() {
  return from_terms({
      {0, 1},    {4, -3},   {5, 3},    {6, -2},   {7, -1},   {9, 3},    {10, -2},  {11, 1},
      {13, 1},   {14, -2},  {15, 2},   {16, -1},  {19, 2},   {20, -2},  {22, -1},  {23, 2},
      {24, -2},  {26, 1},   {29, 1},   {31, -1},  {34, -1},  {36, 1},   {40, 1},   {41, -1},
      {55, 1},   {56, -2},  {58, 2},   {59, -1},  {95, 1},   {96, -2},  {98, 2},   {99, -1},
      {130, 1},  {131, -2}, {133, 2},  {134, -1}, {165, 1},  {166, -3}, {167, 3},  {168, -1},
  });
}

inline psns::UniPoly example1_Q() {
  std::vector<Term> terms;
  std::vector<i64> head = {1,  3,  6,  10, 12, 15, 17, 17, 15, 14, 12, 10, 8,
                           7,  5,  4,  3,  2,  1,  2,  3,  4,  4,  5,  5,  4,
                           3,  2,  1,  1,  2,  3,  4,  5,  5,  4,  3,  2,  1};
  for (size_t k = 0; k < head.size(); ++k) terms.push_back({static_cast<i64>(k), head[k]});
  for (i64 d : {55, 56, 95, 96, 130, 131, 165}) terms.push_back({d, 1});
  return from_terms(terms);
}

inline psns::UniPoly example2_P() {
  return from_terms({
      {0, 1},    {6, -3},   {7, 3},    {8, -2},   {11, -1},  {13, 1},   {16, 3},   {17, -3},
      {18, 1},   {19, 1},   {23, -1},  {25, -2},  {26, 3},   {27, -1},  {32, 1},   {33, -1},
      {35, 2},   {36, -3},  {37, 1},   {38, -1},  {39, 2},   {40, -1},  {42, -1},  {43, 1},
      {44, -1},  {45, 1},   {51, 1},   {52, -1},  {54, 1},   {55, -1},  {61, -1},  {62, 1},
      {63, -1},  {64, 1},   {70, 1},   {71, -1},  {73, 1},   {74, -1},  {80, -1},  {81, 1},
      {82, -1},  {83, 1},   {89, 1},   {90, -1},  {92, 1},   {93, -1},  {99, -1},  {100, 1},
      {101, -1}, {102, 1},  {108, 1},  {109, -1}, {138, 1},  {139, -2}, {140, 1},  {144, -1},
      {145, 2},  {146, -1}, {154, 1},  {155, -2}, {156, 1},  {157, -1}, {158, 2},  {159, -1},
      {257, 1},  {258, -2}, {259, 1},  {263, -1}, {264, 2},  {265, -1}, {273, 1},  {274, -2},
      {275, 1},  {276, -1}, {277, 2},  {278, -1}, {376, 1},  {377, -2}, {378, 1},  {382, -1},
      {383, 2},  {384, -1}, {392, 1},  {393, -2}, {394, 1},  {395, -1}, {396, 2},  {397, -1},
      {495, 1},  {496, -2}, {497, 1},  {501, -1}, {502, 2},  {503, -1},
  });
}

inline psns::UniPoly example2_Q() {
  std::vector<Term> terms;
  std::vector<i64> head = {1,  3,  6,  10, 15, 21, 25, 30, 34, 37, 39, 39, 37, 34, 30, 25,
                           22, 18, 14, 11, 9,  8,  8,  8,  8,  6,  5,  4,  3,  2,  1};
  for (size_t k = 0; k < head.size(); ++k) terms.push_back({static_cast<i64>(k), head[k]});
  std::vector<i64> hump = {2, 3, 4, 4, 5, 6, 7, 7, 7, 6, 5, 4, 3, 2, 1};
  for (size_t k = 0; k < hump.size(); ++k) terms.push_back({static_cast<i64>(35 + k), hump[k]});
  std::vector<i64> hump2 = {1, 2, 3, 4, 5, 6, 7, 7, 7, 6, 5, 4, 3, 2, 1};
  for (i64 base : {54, 73, 92})
    for (size_t k = 0; k < hump2.size(); ++k)
      terms.push_back({base + static_cast<i64>(k), hump2[k]});
  for (i64 d : {138, 139, 140, 141, 142, 143, 154, 155, 156})
    terms.push_back({d, 1});
  for (i64 d : {257, 258, 259, 260, 261, 262, 273, 274, 275})
    terms.push_back({d, 1});
  for (i64 d : {376, 377, 378, 379, 380, 381, 392, 393, 394})
    terms.push_back({d, 1});
  for (i64 d : {495, 496, 497, 498, 499, 500})
    terms.push_back({d, 1});
  return from_terms(terms);
}

} // namespace paper
