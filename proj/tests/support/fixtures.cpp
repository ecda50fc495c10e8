#include "fixtures.hpp"

namespace ybekit::testing {

SetSolution trivial2() { return SetSolution::trivial(2); }

SetSolution permutation2() {
  const MapTable swap({2, 1});
  return SetSolution({swap, swap}, {swap, swap});
}

Matrix trivial2_matrix() {
  return Matrix{{1, 0, 0, 0},
                {0, 0, 1, 0},
                {0, 1, 0, 0},
                {0, 0, 0, 1}};
}

Matrix permutation2_matrix() {
  return Matrix{{0, 0, 0, 1},
                {0, 1, 0, 0},
                {0, 0, 1, 0},
                {1, 0, 0, 0}};
}

PartitionedMatrix sqrt2_c() {
  return PartitionedMatrix(Matrix{{1, 0, 0, 1},
                                  {0, 1, -1, 0},
                                  {0, 1, 1, 0},
                                  {-1, 0, 0, 1}},
                           BlockPartition::square_blocks(2));
}

PartitionedMatrix example_d() {
  Matrix d{{2, 0, 0, 0},
           {0, 0, 1, 0},
           {0, 1, 0, 0},
           {0, 0, 0, 2}};
  d(2, 2) = Scalar(3, 2);
  return PartitionedMatrix(d, BlockPartition::square_blocks(2));
}

Matrix sqrt2_block_24() {
  // [[0,0,1.5/sqrt2,0],[0,0,0,sqrt2],[-1.5/sqrt2,0,0,0],[0,-sqrt2,0,0]] times sqrt(2).
  Matrix m(4, 4);
  m(0, 2) = Scalar(3, 2);
  m(1, 3) = 2;
  m(2, 0) = Scalar(-3, 2);
  m(3, 1) = -2;
  return m;
}

Matrix printed_k23() {
  return Matrix{{1, 0, 0, 0, 0, 0},
                {0, 0, 1, 0, 0, 0},
                {0, 0, 0, 0, 1, 0},
                {0, 1, 0, 0, 0, 0},
                {0, 0, 0, 1, 0, 0},
                {0, 0, 0, 0, 0, 1}};
}

}  // namespace ybekit::testing
