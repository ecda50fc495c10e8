#pragma once

#include "ybekit/blockmat.hpp"
#include "ybekit/set_solution.hpp"

namespace ybekit::testing {

// Two-element solutions: sigma = gamma = id, and sigma = gamma = (1 2).
SetSolution trivial2();
SetSolution permutation2();

// Their printed 4x4 matrices, transcribed by hand.
Matrix trivial2_matrix();
Matrix permutation2_matrix();

// The 4x4 pair with 2x2 blocks used for the Tracy-Singh illustration.
// c has entries +-1/sqrt(2); sqrt2_c() is sqrt(2) * c, which is rational.
PartitionedMatrix sqrt2_c();
PartitionedMatrix example_d();
// sqrt(2) times the printed 4x4 block at block position (2,4) of c [x] d.
Matrix sqrt2_block_24();

// The printed 6x6 commutation matrix K_23.
Matrix printed_k23();

}  // namespace ybekit::testing
