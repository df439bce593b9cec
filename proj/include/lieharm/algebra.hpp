#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <utility>
#include <vector>

#include "lieharm/rational.hpp"

namespace lieharm {

/// Structure constants C^k_ab of a finite-dimensional Lie algebra,
/// [e_a, e_b] = e_k C^k_ab, stored as exact rationals (upper index first).
class StructureConstants {
public:
  explicit StructureConstants(int dim);

  /// su(2) basis with C^k_ab = eps_kab (defining matrices e_a = -i sigma_a/2).
  static StructureConstants su2();
  /// so(3,R) rotation generators; same epsilon constants as su(2).
  static StructureConstants so3();
  static StructureConstants abelian(int dim);

  int dim() const { return n_; }
  const Rat& c(int k, int a, int b) const { return c_[idx(k, a, b)]; }
  void set(int k, int a, int b, const Rat& v);

  /// Checks antisymmetry in the lower indices and the Jacobi identity,
  /// both exactly. Throws std::invalid_argument on failure.
  void validate() const;

  /// { "dim": n, "c": [[k,a,b,num,den], ...] }, nonzero entries only, 0-based.
  nlohmann::json to_json() const;
  static StructureConstants from_json(const nlohmann::json& j);

  bool operator==(const StructureConstants& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
  size_t idx(int k, int a, int b) const;
  int n_;
  std::vector<Rat> c_;
};

/// Killing metric gamma_ab = C^k_la C^l_kb and companions.
struct KillingMetric {
  RatMatrix gamma;
  std::optional<RatMatrix> gamma_inv;   ///< absent when gamma is degenerate
  std::optional<RatMatrix> normalized;  ///< user-chosen rescaling g_ab (e.g. identity)
  bool degenerate() const { return !gamma_inv.has_value(); }
};

KillingMetric killing_form(const StructureConstants& c);

/// Rank-m covariant chain tensor gamma(m)_{i1..im} = Tr(M_{i1} ... M_{im})
/// with (M_i)^a_b = C^a_{b i}; gamma(2) is the Killing form. Row-major flat
/// layout, index i_t strided by dim^(m-1-t). Rejects m < 2.
std::vector<Rat> gamma_m_tensor(const StructureConstants& c, int m);

/// gamma(1)_i = C^a_ai and Gamma_ij = gamma(1)_k C^k_ij (antisymmetric).
std::pair<std::vector<Rat>, RatMatrix> gamma1_and_Gamma(const StructureConstants& c);

/// (ad_y)^b_a = C^b_da y^d.
Eigen::MatrixXd ad_matrix(const StructureConstants& c, const Eigen::VectorXd& y);

/// Ad(exp(k.e)) = exp(ad_{k.e}).
Eigen::MatrixXd Ad_matrix(const StructureConstants& c, const Eigen::VectorXd& k);

/// A faithful matrix representation supplying basis matrices e_a that obey
/// the structure constants; used for exponential coordinates and generators.
struct DefiningRep {
  std::vector<Eigen::MatrixXcd> basis;
  int algebra_dim() const { return static_cast<int>(basis.size()); }
  int matrix_dim() const { return basis.empty() ? 0 : static_cast<int>(basis[0].rows()); }
  Eigen::MatrixXcd element(const Eigen::VectorXd& k) const;
};

DefiningRep su2_defining();
DefiningRep so3_defining();

struct GroupElement {
  Eigen::MatrixXcd matrix;
  std::optional<Eigen::VectorXd> coords;  ///< canonical coordinates of the first kind, when known
};

/// g(k) = exp(k^a e_a).
GroupElement exp_first_kind(const Eigen::VectorXd& k, const DefiningRep& rep);

/// g[xi] = exp(xi^1 e_1) ... exp(xi^n e_n).
GroupElement exp_second_kind(const Eigen::VectorXd& xi, const DefiningRep& rep);

/// Inverse of exp_first_kind near the identity. Throws std::domain_error when
/// the principal matrix logarithm is ill-conditioned (spectrum near the cut)
/// or the log does not project onto the algebra span.
Eigen::VectorXd log_canonical(const GroupElement& g, const DefiningRep& rep);

}  // namespace lieharm
