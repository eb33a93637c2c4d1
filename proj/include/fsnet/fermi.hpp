#pragma once

#include <Eigen/Dense>

#include "fsnet/isoperimetry.hpp"
#include "fsnet/lattice.hpp"
#include "fsnet/synth.hpp"

namespace fsnet {

// annihilation operator for the given mode under the occupation-number
// encoding: bit p of a basis state is the occupation of mode p, sign given
// by the parity of the occupied modes below p
Eigen::MatrixXcd jw_ladder(int mode, int num_modes);

// two-mode gate that exchanges occupations and flips the sign of the
// doubly occupied state
Eigen::MatrixXcd fswap_unitary();

// many-body Hamiltonian of the model with vertex v assigned to mode
// order.rank[v]
Eigen::MatrixXcd hubbard_matrix(const HubbardModel& m, const LinearOrder& order);

double spectral_norm(const Eigen::MatrixXcd& a);

// checks that the sign picked up by routing each occupation basis state
// through the swap layers equals the inversion-count formula for the net
// mode permutation
bool mode_permutation_check(const SwapNetwork& net);

struct TrotterCheck {
  double err = 0.0;    // distance to the exact propagator at dt
  double ratio = 0.0;  // err(dt) / err(dt/2), 0 when both are negligible
};

TrotterCheck trotter_error_check(const HubbardModel& m, const SwapNetwork& net, double dt);

}  // namespace fsnet
