#include "lieharm/algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace lieharm {

namespace {
int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // parity of the permutation (i j k) of (0 1 2)
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}
}  // namespace

StructureConstants::StructureConstants(int dim) : n_(dim) {
  if (dim <= 0) throw std::invalid_argument("StructureConstants: dim must be positive");
  c_.assign(static_cast<size_t>(dim) * dim * dim, Rat(0));
}

size_t StructureConstants::idx(int k, int a, int b) const {
  return (static_cast<size_t>(k) * n_ + a) * n_ + b;
}

void StructureConstants::set(int k, int a, int b, const Rat& v) {
  if (k < 0 || k >= n_ || a < 0 || a >= n_ || b < 0 || b >= n_)
    throw std::invalid_argument("StructureConstants: index out of range");
  c_[idx(k, a, b)] = v;
}

StructureConstants StructureConstants::su2() {
  StructureConstants c(3);
  for (int k = 0; k < 3; ++k)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        int e = levi_civita(k, a, b);
        if (e != 0) c.set(k, a, b, Rat(e));
      }
  return c;
}

StructureConstants StructureConstants::so3() { return su2(); }

StructureConstants StructureConstants::abelian(int dim) { return StructureConstants(dim); }

void StructureConstants::validate() const {
  for (int k = 0; k < n_; ++k)
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (c(k, a, b) != -c(k, b, a))
          throw std::invalid_argument("StructureConstants: antisymmetry violated");
  // C^m_al C^l_bc + C^m_bl C^l_ca + C^m_cl C^l_ab = 0
  for (int m = 0; m < n_; ++m)
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int cc = 0; cc < n_; ++cc) {
          Rat s(0);
          for (int l = 0; l < n_; ++l)
            s += c(m, a, l) * c(l, b, cc) + c(m, b, l) * c(l, cc, a) + c(m, cc, l) * c(l, a, b);
          if (s != Rat(0)) throw std::invalid_argument("StructureConstants: Jacobi identity violated");
        }
}

nlohmann::json StructureConstants::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int k = 0; k < n_; ++k)
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const Rat& v = c(k, a, b);
        if (v != Rat(0)) entries.push_back({k, a, b, v.numerator(), v.denominator()});
      }
  return nlohmann::json{{"dim", n_}, {"c", entries}};
}

StructureConstants StructureConstants::from_json(const nlohmann::json& j) {
  StructureConstants c(j.at("dim").get<int>());
  for (const auto& e : j.at("c")) {
    if (!e.is_array() || e.size() != 5) throw std::invalid_argument("StructureConstants: bad entry");
    c.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
          Rat(e[3].get<long long>(), e[4].get<long long>()));
  }
  return c;
}

KillingMetric killing_form(const StructureConstants& c) {
  const int n = c.dim();
  KillingMetric km;
  km.gamma = RatMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Rat s(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += c.c(k, l, a) * c.c(l, k, b);
      km.gamma(a, b) = s;
    }
  km.gamma_inv = km.gamma.inverse();
  return km;
}

std::vector<Rat> gamma_m_tensor(const StructureConstants& c, int m) {
  if (m < 2) throw std::invalid_argument("gamma_m_tensor: order must be >= 2");
  const int n = c.dim();
  // chain matrices (M_i)^a_b = C^a_{b i}
  std::vector<RatMatrix> M(n, RatMatrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) M[i](a, b) = c.c(a, b, i);

  size_t total = 1;
  for (int t = 0; t < m; ++t) total *= static_cast<size_t>(n);
  std::vector<Rat> out(total, Rat(0));
  std::vector<int> id(m, 0);
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int t = m - 1; t >= 0; --t) { id[t] = static_cast<int>(rem % n); rem /= n; }
    RatMatrix p = M[id[0]];
    for (int t = 1; t < m; ++t) p = p * M[id[t]];
    Rat tr(0);
    for (int a = 0; a < n; ++a) tr += p(a, a);
    out[flat] = tr;
  }
  return out;
}

std::pair<std::vector<Rat>, RatMatrix> gamma1_and_Gamma(const StructureConstants& c) {
  const int n = c.dim();
  std::vector<Rat> g1(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) g1[i] += c.c(a, a, i);
  RatMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s(0);
      for (int k = 0; k < n; ++k) s += g1[k] * c.c(k, i, j);
      G(i, j) = s;
    }
  return {g1, G};
}

Eigen::MatrixXd ad_matrix(const StructureConstants& c, const Eigen::VectorXd& y) {
  const int n = c.dim();
  if (y.size() != n) throw std::invalid_argument("ad_matrix: coefficient vector has wrong length");
  Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      double s = 0;
      for (int d = 0; d < n; ++d) s += to_double(c.c(b, d, a)) * y[d];
      ad(b, a) = s;
    }
  return ad;
}

Eigen::MatrixXd Ad_matrix(const StructureConstants& c, const Eigen::VectorXd& k) {
  return ad_matrix(c, k).exp();
}

Eigen::MatrixXcd DefiningRep::element(const Eigen::VectorXd& k) const {
  if (k.size() != algebra_dim()) throw std::invalid_argument("DefiningRep: coordinate length mismatch");
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(matrix_dim(), matrix_dim());
  for (int a = 0; a < algebra_dim(); ++a) x += k[a] * basis[a];
  return x;
}

DefiningRep su2_defining() {
  using namespace std::complex_literals;
  DefiningRep rep;
  Eigen::Matrix2cd s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, -1i, 1i, 0;
  s3 << 1, 0, 0, -1;
  for (const auto& s : {s1, s2, s3}) rep.basis.push_back(-0.5i * s);
  return rep;
}

DefiningRep so3_defining() {
  DefiningRep rep;
  for (int a = 0; a < 3; ++a) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(3, 3);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) e(b, c) = -levi_civita(a, b, c);
    rep.basis.push_back(e);
  }
  return rep;
}

GroupElement exp_first_kind(const Eigen::VectorXd& k, const DefiningRep& rep) {
  GroupElement g;
  g.matrix = rep.element(k).exp();
  g.coords = k;
  return g;
}

GroupElement exp_second_kind(const Eigen::VectorXd& xi, const DefiningRep& rep) {
  if (xi.size() != rep.algebra_dim())
    throw std::invalid_argument("exp_second_kind: coordinate length mismatch");
  const int N = rep.matrix_dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(N, N);
  for (int a = 0; a < rep.algebra_dim(); ++a)
    m *= Eigen::MatrixXcd(xi[a] * rep.basis[a]).exp();
  return GroupElement{m, std::nullopt};
}

Eigen::VectorXd log_canonical(const GroupElement& g, const DefiningRep& rep) {
  const int N = rep.matrix_dim();
  if (g.matrix.rows() != N || g.matrix.cols() != N)
    throw std::invalid_argument("log_canonical: matrix dimension mismatch");

  // principal log is ill-conditioned when an eigenvalue sits near the cut
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(g.matrix, false);
  for (int i = 0; i < N; ++i) {
    if (std::abs(std::arg(es.eigenvalues()[i])) > M_PI - 1e-3)
      throw std::domain_error("log_canonical: group element outside principal-log domain");
  }

  Eigen::MatrixXcd X = g.matrix.log();
  // project onto span{e_a}: solve vec(X) = B k in least squares
  const int n = rep.algebra_dim();
  Eigen::MatrixXcd B(N * N, n);
  for (int a = 0; a < n; ++a)
    B.col(a) = Eigen::Map<const Eigen::VectorXcd>(rep.basis[a].data(), N * N);
  Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(X.data(), N * N);
  Eigen::VectorXcd kc = B.colPivHouseholderQr().solve(x);
  double resid = (B * kc - x).norm();
  if (resid > 1e-8 * (1.0 + x.norm()))
    throw std::domain_error("log_canonical: logarithm not in the algebra span");
  Eigen::VectorXd k(n);
  for (int a = 0; a < n; ++a) {
    if (std::abs(kc[a].imag()) > 1e-9 * (1.0 + std::abs(kc[a])))
      throw std::domain_error("log_canonical: non-real canonical coordinates");
    k[a] = kc[a].real();
  }
  return k;
}

}  // namespace lieharm
