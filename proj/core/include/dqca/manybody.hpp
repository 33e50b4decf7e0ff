#ifndef DQCA_MANYBODY_HPP
#define DQCA_MANYBODY_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dqca/params.hpp"

namespace dqca {

using DenseOperator = Eigen::MatrixXcd;

/// Dense 2^q-dimensional budget for the oracle.
inline constexpr int kMaxQubits = 12;
inline constexpr int kMaxCrosscheckCells = 5;

/// Jordan-Wigner annihilation operators, one per wire. Qubit w maps to the
/// w-th wire of the ring (even w = phi+ of cell w/2, odd w = phi- of cell
/// (w-1)/2). The sigma^3 string runs over all lower wire indices; the
/// convention sigma^3 = 2 n - I makes the operator exponentials match the
/// two-qubit Pauli forms with a minus sign in the exponent.
struct FieldOperatorSet {
  int qubits = 0;
  std::vector<DenseOperator> annihilators;

  long dim() const { return 1L << qubits; }
};

/// Build the JW set for q qubits; 2 <= q <= kMaxQubits, else BudgetError.
FieldOperatorSet build_jw_fields(int qubits);

/// All-empty product state (annihilated by every field operator).
Eigen::VectorXcd vacuum_state(int qubits);

/// Pauli number observable sum_w sigma^3_w = 2 sum_w phi_w^dag phi_w - q*I.
DenseOperator pauli_number_operator(int qubits);
DenseOperator mode_number_operator(const FieldOperatorSet& fields);

/// exp(i*angle*(phi_a^dag phi_b + phi_b^dag phi_a)) built from the dense
/// field operators. The generator is a two-level rotation (X^3 = X), so the
/// exponential closes exactly: I + i sin(angle) X + (cos(angle) - 1) X^2.
DenseOperator hop_exponential_field(const FieldOperatorSet& fields, int mode_a,
                                    int mode_b, double angle);

/// Same unitary from the qubit algebra: exponent
/// -i*angle*(sigma_lo^+ [string] sigma_hi^- + h.c.) with the sigma^3 parity
/// string over the wires strictly between lo and hi (empty for neighbors,
/// full for the pair crossing the ring seam), exponentiated by Pade
/// scaling-and-squaring. Independent construction used to cross-check the
/// field form.
DenseOperator hop_exponential_pauli(int qubits, int mode_a, int mode_b,
                                    double angle);

/// The gate exponentials of one ring: b_ops[n] couples wires (2n, 2n+1) at
/// angle pi/2; a_ops[n] couples wires (2n-1 mod 2N, 2n) at the gate angle
/// theta. Both constructions are built per gate; `construction_residual` is
/// their largest disagreement.
struct RingGateSet {
  std::vector<DenseOperator> a_ops;
  std::vector<DenseOperator> b_ops;
  double construction_residual = 0.0;
};

RingGateSet build_gate_unitaries(const SimulationParams& params,
                                 const FieldOperatorSet& fields);

/// Conjugate the two wire operators by U and project the results back onto
/// the field-operator basis; returns the largest deviation from `expected`
/// (including any leakage outside the two wires or off the basis).
double heisenberg_check(const DenseOperator& u, const FieldOperatorSet& fields,
                        int wire_a, int wire_b,
                        const Eigen::Matrix2cd& expected);

struct ConservationReport {
  double pauli_number_commutator = 0.0;  // ||[U, sum sigma^3]||
  double mode_number_commutator = 0.0;   // ||[U, sum phi^dag phi]||
  double vacuum_residual = 0.0;          // ||U|0...0> - |0...0>||
  double number_affine_residual = 0.0;   // ||sum sigma^3 - (2 N - q I)||
  double number_commute_residual = 0.0;  // ||[sum sigma^3, N]||
};

ConservationReport conservation_checks(const DenseOperator& u,
                                       const FieldOperatorSet& fields);

/// Operator 2-norm (largest singular value) of a dense matrix.
double spectral_norm(const DenseOperator& m);

enum class Statistics { fermi, bose };

/// Residual of the two-mode displacement identity
///   e^{a* z'^dag z - a z^dag z'} z e^{a z^dag z' - a* z'^dag z}
///     = cos|a| z + (a/|a|) sin|a| z'.
/// Fermi: exact on the full space. Bose: modes truncated to `bose_cutoff`
/// Fock levels (cutoff >= 4), residual measured on the truncation-safe
/// sector of total occupation <= cutoff/2.
double displacement_identity_check(std::complex<double> alpha,
                                   Statistics statistics, int bose_cutoff = 8);

/// Dense state propagator of one two-step on the ring: adjoint B gates, then
/// adjoint A gates. The gate exponentials move field operators by the gate
/// matrix itself (z -> U z U^dag), so amplitudes of states carry the
/// conjugate action; the adjoints make the single-excitation sector
/// reproduce the forward amplitude kernel.
DenseOperator two_step_circuit_operator(const FieldOperatorSet& fields,
                                        const RingGateSet& ring);

/// Single-excitation block of `circuit` in the basis phi_w^dag |vac>,
/// reordered to the evolve module's block layout.
Eigen::MatrixXcd single_excitation_sector(const DenseOperator& circuit,
                                          const FieldOperatorSet& fields);

/// Largest entry deviation (after global-phase alignment) between the dense
/// circuit's single-excitation sector and the 2N x 2N amplitude kernel.
/// q_cells <= kMaxCrosscheckCells.
double single_excitation_crosscheck(const SimulationParams& params,
                                    int q_cells);

}  // namespace dqca

#endif
