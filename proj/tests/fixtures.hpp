#pragma once

#include <utility>
#include <vector>


namespace qck_test {

// Arrow lists of the reference figures, 1-based vertex numbers.
// triang: 12 vertices
inline const std::vector<std::pair<int,int>> triang_solid = {{9,12},{10,6},{1,2},{7,10},{4,7},{2,4},{8,11},{5,8},{8,9},{7,8},{6,7},{4,5},{3,4},{12,8},{8,4},{4,1},{11,7},{7,3}};
inline const std::vector<std::pair<int,int>> triang_dashed = {{5,2},{9,5},{11,12},{10,11},{3,6},{1,3}};
// flipL: 21 vertices
inline const std::vector<std::pair<int,int>> flipL_solid = {{1,2},{3,4},{4,5},{6,7},{7,8},{8,9},{16,15},{15,14},{14,13},{19,18},{18,17},{21,20},{12,8},{8,4},{4,1},{11,7},{7,3},{10,6},{2,4},{4,7},{7,10},{5,8},{8,11},{9,12},{10,14},{14,18},{18,21},{11,15},{15,19},{12,16},{20,18},{18,15},{15,12},{17,14},{14,11},{13,10}};
inline const std::vector<std::pair<int,int>> flipL_dashed = {{9,5},{5,2},{1,3},{3,6},{13,17},{17,20},{21,19},{19,16}};
// flipR: 21 vertices
inline const std::vector<std::pair<int,int>> flipR_solid = {{13,6},{17,10},{10,3},{20,14},{14,7},{7,1},{2,8},{8,15},{15,21},{5,12},{12,19},{9,16},{16,12},{12,8},{8,4},{19,15},{15,11},{21,18},{4,7},{7,10},{10,13},{11,14},{14,17},{18,20},{6,10},{10,14},{14,18},{3,7},{7,11},{1,4},{18,15},{15,12},{12,9},{11,8},{8,5},{4,2}};
inline const std::vector<std::pair<int,int>> flipR_dashed = {{9,5},{5,2},{1,3},{3,6},{13,17},{17,20},{21,19},{19,16}};
// A1: 4 vertices
inline const std::vector<std::pair<int,int>> A1_solid = {{4,1},{1,2},{2,3},{3,4}};
inline const std::vector<std::pair<int,int>> A1_dashed = {};
// A2: 10 vertices
inline const std::vector<std::pair<int,int>> A2_solid = {{5,6},{6,7},{7,10},{10,5},{1,2},{2,3},{3,7},{7,8},{8,9},{9,4},{4,5},{5,1},{5,9},{9,7},{7,2},{2,5}};
inline const std::vector<std::pair<int,int>> A2_dashed = {{1,4},{8,3}};
// A3: 18 vertices
inline const std::vector<std::pair<int,int>> A3_solid = {{10,6},{6,16},{11,7},{7,3},{3,14},{14,17},{12,8},{8,4},{4,1},{1,13},{13,15},{15,18},{18,9},{9,12},{17,15},{15,5},{5,8},{8,11},{16,14},{14,13},{13,2},{2,4},{4,7},{7,10},{3,4},{4,5},{5,13},{13,3},{6,7},{7,8},{8,9},{9,15},{15,14},{14,6}};
inline const std::vector<std::pair<int,int>> A3_dashed = {{10,11},{11,12},{17,16},{18,17}};
// Z2: 18 vertices
inline const std::vector<std::pair<int,int>> Z2_solid = {{1,2},{2,3},{3,4},{4,5},{6,7},{7,8},{8,9},{9,10},{10,11},{11,12},{12,13},{13,14},{14,17},{17,10},{10,15},{15,6},{5,13},{13,18},{18,11},{11,3},{3,9},{9,16},{16,7},{7,1},{2,7},{7,15},{15,9},{9,2},{4,11},{11,17},{17,13},{13,4}};
inline const std::vector<std::pair<int,int>> Z2_dashed = {{1,6},{14,5}};

inline std::vector<int> range1(int a, int b) {
  std::vector<int> r;
  for (int i = a; i <= b; ++i) r.push_back(i);
  return r;
}

}  // namespace qck_test
