#pragma once

#include <Eigen/Dense>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lieharm/algebra.hpp"

namespace lieharm {

enum class GroupKind { SU2, SO3, Torus };

std::string group_kind_name(GroupKind k);
GroupKind group_kind_from_name(const std::string& s);

/// Irrep label: half-integer spin j (stored as 2j) for SU(2), the integer
/// subset for SO(3), an integer weight vector for T^n.
struct IrrepLabel {
  GroupKind kind = GroupKind::SU2;
  int two_j = 0;
  std::vector<int> weights;

  static IrrepLabel spin(int two_j, GroupKind kind = GroupKind::SU2);
  static IrrepLabel torus(std::vector<int> m);

  int dim() const { return kind == GroupKind::Torus ? 1 : two_j + 1; }
  std::string to_string() const;  ///< "3/2" for spins, "[m1,...,mn]" for torus
  static IrrepLabel parse(GroupKind kind, const std::string& s);

  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

/// An irreducible unitary representation: generator matrices e(alpha)_a with
/// [e_a, e_b] = e_k C^k_ab and e_a^H = -e_a; Sigma_a = (hbar/i) e_a Hermitian.
struct Irrep {
  IrrepLabel label;
  int dim = 1;
  std::vector<Eigen::MatrixXcd> generators;
  double hbar = 1.0;

  Eigen::MatrixXcd sigma(int a) const;
};

/// Standard (2j+1)-dimensional angular-momentum matrices from ladder-operator
/// elements, e_a = -i S_a; basis ordered m = +j ... -j so that j = 1/2 gives
/// e_a = -i sigma_a / 2 literally. Rejects negative or non-half-integer spin.
Irrep spin_irrep(int two_j, double hbar = 1.0, GroupKind kind = GroupKind::SU2);

Irrep torus_irrep(const std::vector<int>& m, double hbar = 1.0);

/// D(alpha)(g(k)) = exp(k^a e(alpha)_a).
Eigen::MatrixXcd wigner_D(const Irrep& rep, const Eigen::VectorXd& k);

/// zyz convention: exp(alpha e_3) exp(beta e_2) exp(gamma e_3).
Eigen::MatrixXcd wigner_D_euler(const Irrep& rep, double alpha, double beta, double gamma);

/// All D^j(u) for 2j = 0..two_j_max from the defining SU(2) element u, by
/// spin-raising composition D^(j+1/2) = CG-contraction of D^j (x) u. Exact
/// representation images of u in the same basis as spin_irrep.
std::vector<Eigen::MatrixXcd> su2_dmatrices(const Eigen::Matrix2cd& u, int two_j_max);

/// SU(2) lift of a rotation matrix (either sign; integer-j images agree).
Eigen::Matrix2cd su2_from_so3(const Eigen::Matrix3d& r);

/// Character of spin j at rotation angle theta: sin((j+1/2)theta)/sin(theta/2).
double spin_character(int two_j, double theta);

struct CasimirResult {
  Eigen::MatrixXcd matrix;
  std::optional<double> scalar;  ///< set when the chain product is central
  double off_identity_residual = 0.0;
};

/// gamma(m)^{i1..im} e_{i1} ... e_{im}, indices raised with metric_inv
/// (gamma^ab or the normalized delta^ab; the caller states which). Returns
/// the scalar when the off-identity residual is <= 1e-10, else flags it
/// non-scalar by leaving `scalar` empty.
CasimirResult casimir_matrix(const Irrep& rep, const StructureConstants& c,
                             const Eigen::MatrixXd& metric_inv, int order);

/// Spectral action of gamma^ab A_a A_b on a block of the ideal M(alpha):
/// 2 C(2,alpha) F - 2 gamma^ab e_a F e_b (equals gamma^ab [e_a,[e_b,F]]).
Eigen::MatrixXcd a_casimir_action(const Irrep& rep, const StructureConstants& c,
                                  const Eigen::MatrixXcd& F, const Eigen::MatrixXd& metric_inv);

}  // namespace lieharm
