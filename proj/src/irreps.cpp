#include "lieharm/irreps.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace lieharm {

using namespace std::complex_literals;

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::SU2: return "su2";
    case GroupKind::SO3: return "so3";
    case GroupKind::Torus: return "torus";
  }
  throw std::logic_error("group_kind_name");
}

GroupKind group_kind_from_name(const std::string& s) {
  if (s == "su2") return GroupKind::SU2;
  if (s == "so3") return GroupKind::SO3;
  if (s == "torus") return GroupKind::Torus;
  throw std::invalid_argument("unknown group kind: " + s);
}

IrrepLabel IrrepLabel::spin(int two_j, GroupKind kind) {
  if (two_j < 0) throw std::invalid_argument("IrrepLabel: negative spin");
  if (kind == GroupKind::SO3 && two_j % 2 != 0)
    throw std::invalid_argument("IrrepLabel: SO(3) labels are integer spins");
  if (kind == GroupKind::Torus) throw std::invalid_argument("IrrepLabel: spin label on torus");
  IrrepLabel l;
  l.kind = kind;
  l.two_j = two_j;
  return l;
}

IrrepLabel IrrepLabel::torus(std::vector<int> m) {
  IrrepLabel l;
  l.kind = GroupKind::Torus;
  l.weights = std::move(m);
  return l;
}

std::string IrrepLabel::to_string() const {
  if (kind == GroupKind::Torus) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
    os << "]";
    return os.str();
  }
  if (two_j % 2 == 0) return std::to_string(two_j / 2);
  return std::to_string(two_j) + "/2";
}

IrrepLabel IrrepLabel::parse(GroupKind kind, const std::string& s) {
  if (kind == GroupKind::Torus) {
    std::vector<int> m;
    std::string t;
    for (char ch : s)
      if (ch != '[' && ch != ']' && ch != ' ') t += (ch == ',') ? ' ' : ch;
    std::istringstream is(t);
    int v;
    while (is >> v) m.push_back(v);
    return torus(std::move(m));
  }
  auto slash = s.find('/');
  if (slash == std::string::npos) return spin(2 * std::stoi(s), kind);
  if (s.substr(slash + 1) != "2") throw std::invalid_argument("IrrepLabel: bad spin label " + s);
  return spin(std::stoi(s.substr(0, slash)), kind);
}

Eigen::MatrixXcd Irrep::sigma(int a) const {
  return (hbar / 1i) * generators.at(a);
}

Irrep spin_irrep(int two_j, double hbar, GroupKind kind) {
  if (two_j < 0) throw std::invalid_argument("spin_irrep: spin must be non-negative");
  const int n = two_j + 1;
  const double j = two_j / 2.0;
  // basis ordered m = +j .. -j; S3 = diag(j, j-1, ..., -j)
  Eigen::MatrixXcd s3 = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(n, n);  // S+ = S1 + i S2
  for (int i = 0; i < n; ++i) s3(i, i) = j - i;
  for (int i = 1; i < n; ++i) {
    const double m = j - i;  // S+ |j,m> = sqrt((j-m)(j+m+1)) |j,m+1>
    sp(i - 1, i) = std::sqrt((j - m) * (j + m + 1));
  }
  Eigen::MatrixXcd s1 = 0.5 * (sp + sp.adjoint());
  Eigen::MatrixXcd s2 = -0.5i * (sp - sp.adjoint());
  Irrep rep;
  rep.label = IrrepLabel::spin(two_j, kind);
  rep.dim = n;
  rep.hbar = hbar;
  for (const auto& s : {s1, s2, s3}) rep.generators.push_back(-1i * s);
  return rep;
}

Irrep torus_irrep(const std::vector<int>& m, double hbar) {
  Irrep rep;
  rep.label = IrrepLabel::torus(m);
  rep.dim = 1;
  rep.hbar = hbar;
  for (int ma : m) {
    Eigen::MatrixXcd e(1, 1);
    e(0, 0) = 1i * static_cast<double>(ma);
    rep.generators.push_back(e);
  }
  return rep;
}

Eigen::MatrixXcd wigner_D(const Irrep& rep, const Eigen::VectorXd& k) {
  if (k.size() != static_cast<int>(rep.generators.size()))
    throw std::invalid_argument("wigner_D: coordinate length mismatch");
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  for (int a = 0; a < k.size(); ++a) x += k[a] * rep.generators[a];
  return x.exp();
}

Eigen::MatrixXcd wigner_D_euler(const Irrep& rep, double alpha, double beta, double gamma) {
  if (rep.generators.size() != 3)
    throw std::invalid_argument("wigner_D_euler: needs a three-generator representation");
  Eigen::MatrixXcd ea = Eigen::MatrixXcd(alpha * rep.generators[2]).exp();
  Eigen::MatrixXcd eb = Eigen::MatrixXcd(beta * rep.generators[1]).exp();
  Eigen::MatrixXcd eg = Eigen::MatrixXcd(gamma * rep.generators[2]).exp();
  return ea * eb * eg;
}

std::vector<Eigen::MatrixXcd> su2_dmatrices(const Eigen::Matrix2cd& u, int two_j_max) {
  if (two_j_max < 0) throw std::invalid_argument("su2_dmatrices: negative band");
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(two_j_max + 1);
  out.push_back(Eigen::MatrixXcd::Ones(1, 1));
  if (two_j_max == 0) return out;
  out.push_back(u);
  // D^{J} from D^{J-1/2} (x) D^{1/2} with Clebsch-Gordan weights
  // c(M,+1/2) = sqrt((j+M+1/2)/(2j+1)), c(M,-1/2) = sqrt((j-M+1/2)/(2j+1)),
  // j the lower spin. Row index i corresponds to M = J - i.
  for (int twoJ = 2; twoJ <= two_j_max; ++twoJ) {
    const auto& d = out[twoJ - 1];          // spin j = (twoJ-1)/2
    const int nJ = twoJ + 1;
    const double twoj = twoJ - 1;
    Eigen::MatrixXcd next(nJ, nJ);
    for (int ip = 0; ip < nJ; ++ip) {
      const double twoMp = twoJ - 2 * ip;   // 2M'
      const double cp_up = std::sqrt((twoj + twoMp) / (2.0 * (twoj + 1)) * 2.0 / 2.0 + 0.0);
      // c(M',e') with 2M' = twoMp: up: (j+M'+1/2) = (twoj+twoMp)/2 ... computed below inline
      for (int ic = 0; ic < nJ; ++ic) {
        const double twoM = twoJ - 2 * ic;
        std::complex<double> acc = 0;
        for (int ep = 0; ep < 2; ++ep) {      // e' = +1/2 (ep=0), -1/2 (ep=1)
          const double se_p = (ep == 0) ? 1.0 : -1.0;
          const double num_p = (ep == 0) ? (twoj + twoMp) / 2.0 + 0.5 : (twoj - twoMp) / 2.0 + 0.5;
          if (num_p <= 0) continue;
          const double cP = std::sqrt(num_p / (twoj + 1.0));
          const int rowd = static_cast<int>(std::lround((twoj - (twoMp - se_p)) / 2.0));
          if (rowd < 0 || rowd > static_cast<int>(twoj)) continue;
          for (int ec = 0; ec < 2; ++ec) {
            const double se_c = (ec == 0) ? 1.0 : -1.0;
            const double num_c = (ec == 0) ? (twoj + twoM) / 2.0 + 0.5 : (twoj - twoM) / 2.0 + 0.5;
            if (num_c <= 0) continue;
            const double cC = std::sqrt(num_c / (twoj + 1.0));
            const int cold = static_cast<int>(std::lround((twoj - (twoM - se_c)) / 2.0));
            if (cold < 0 || cold > static_cast<int>(twoj)) continue;
            acc += cP * cC * d(rowd, cold) * u(ep, ec);
          }
        }
        next(ip, ic) = acc;
      }
      (void)cp_up;
    }
    out.push_back(std::move(next));
  }
  return out;
}

Eigen::Matrix2cd su2_from_so3(const Eigen::Matrix3d& r) {
  // quaternion extraction; either global sign is fine for integer spins
  double w, x, y, z;
  const double tr = r.trace();
  if (tr > 0) {
    double s = std::sqrt(tr + 1.0) * 2;
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2;
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2;
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2;
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  // u = exp(-i theta n.sigma/2) = w - i(x sx + y sy + z sz)
  Eigen::Matrix2cd u;
  u(0, 0) = std::complex<double>(w, -z);
  u(0, 1) = std::complex<double>(-y, -x);
  u(1, 0) = std::complex<double>(y, -x);
  u(1, 1) = std::complex<double>(w, z);
  return u;
}

double spin_character(int two_j, double theta) {
  const double j = two_j / 2.0;
  if (std::abs(std::sin(theta / 2)) < 1e-8) {
    // limit at theta -> 0 (or 2pi for integer j): sum of cos(m theta)
    double s = 0;
    for (int i = 0; i <= two_j; ++i) s += std::cos((j - i) * theta);
    return s;
  }
  return std::sin((j + 0.5) * theta) / std::sin(theta / 2);
}

namespace {
// gamma(m) with all indices raised by metric_inv, as doubles
std::vector<double> raised_gamma_m(const StructureConstants& c, const Eigen::MatrixXd& metric_inv, int m) {
  const int n = c.dim();
  auto lower = gamma_m_tensor(c, m);
  size_t total = lower.size();
  std::vector<double> low(total);
  for (size_t i = 0; i < total; ++i) low[i] = to_double(lower[i]);
  // raise one index at a time
  std::vector<double> cur = low, nxt(total);
  std::vector<size_t> stride(m);
  {
    size_t s = 1;
    for (int t = m - 1; t >= 0; --t) { stride[t] = s; s *= n; }
  }
  for (int t = 0; t < m; ++t) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (size_t flat = 0; flat < total; ++flat) {
      const int it = static_cast<int>((flat / stride[t]) % n);
      const size_t base = flat - it * stride[t];
      double s = 0;
      for (int jt = 0; jt < n; ++jt) s += metric_inv(it, jt) * cur[base + jt * stride[t]];
      nxt[flat] = s;
    }
    std::swap(cur, nxt);
  }
  return cur;
}
}  // namespace

CasimirResult casimir_matrix(const Irrep& rep, const StructureConstants& c,
                             const Eigen::MatrixXd& metric_inv, int order) {
  if (order < 2) throw std::invalid_argument("casimir_matrix: order must be >= 2");
  const int n = c.dim();
  if (static_cast<int>(rep.generators.size()) != n)
    throw std::invalid_argument("casimir_matrix: representation/algebra dimension mismatch");
  auto g = raised_gamma_m(c, metric_inv, order);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  std::vector<size_t> stride(order);
  {
    size_t s = 1;
    for (int t = order - 1; t >= 0; --t) { stride[t] = s; s *= n; }
  }
  for (size_t flat = 0; flat < g.size(); ++flat) {
    if (g[flat] == 0.0) continue;
    Eigen::MatrixXcd p = rep.generators[(flat / stride[0]) % n];
    for (int t = 1; t < order; ++t) p *= rep.generators[(flat / stride[t]) % n];
    acc += g[flat] * p;
  }
  CasimirResult res;
  res.matrix = acc;
  std::complex<double> tr = acc.trace() / static_cast<double>(rep.dim);
  Eigen::MatrixXcd off = acc - tr * Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
  res.off_identity_residual = off.cwiseAbs().maxCoeff();
  if (res.off_identity_residual <= 1e-10 && std::abs(tr.imag()) <= 1e-10) res.scalar = tr.real();
  return res;
}

Eigen::MatrixXcd a_casimir_action(const Irrep& rep, const StructureConstants& c,
                                  const Eigen::MatrixXcd& F, const Eigen::MatrixXd& metric_inv) {
  if (F.rows() != rep.dim || F.cols() != rep.dim)
    throw std::invalid_argument("a_casimir_action: block dimension mismatch");
  auto c2 = casimir_matrix(rep, c, metric_inv, 2);
  const double scalar = c2.scalar ? *c2.scalar : c2.matrix.trace().real() / rep.dim;
  Eigen::MatrixXcd cross = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  const int n = c.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (metric_inv(a, b) == 0.0) continue;
      cross += metric_inv(a, b) * (rep.generators[a] * F * rep.generators[b]);
    }
  return 2.0 * scalar * F - 2.0 * cross;
}

}  // namespace lieharm
