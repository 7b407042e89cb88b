#include "lpk/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lpk {

V3 add(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
V3 neg(const V3& a) { return {-a[0], -a[1], -a[2]}; }
V3 mul(const Z& k, const V3& a) { return {k * a[0], k * a[1], k * a[2]}; }
Z dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Z det3(const V3& r0, const V3& r1, const V3& r2) { return dot(r0, cross(r1, r2)); }
bool is_zero(const V3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

QV3 qadd(const QV3& a, const QV3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
QV3 qsub(const QV3& a, const QV3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
QV3 qmul(const Q& k, const QV3& a) { return {k * a[0], k * a[1], k * a[2]}; }
Q qdot(const QV3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Q qqdot(const QV3& a, const QV3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
QV3 to_q(const V3& a) { return {Q(a[0]), Q(a[1]), Q(a[2])}; }
bool is_integral(const QV3& a) {
  return a[0].get_den() == 1 && a[1].get_den() == 1 && a[2].get_den() == 1;
}
V3 to_z(const QV3& a) {
  if (!is_integral(a)) throw std::runtime_error("vector is not integral");
  return {a[0].get_num(), a[1].get_num(), a[2].get_num()};
}
bool qis_zero(const QV3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Z cross2(const V2& a, const V2& b) { return a[0] * b[1] - a[1] * b[0]; }
Q qcross2(const QV2& a, const QV2& b) { return a[0] * b[1] - a[1] * b[0]; }
V2 sub2(const V2& a, const V2& b) { return {a[0] - b[0], a[1] - b[1]}; }
Z dot2(const V2& a, const V2& b) { return a[0] * b[0] + a[1] * b[1]; }
Q qdot2(const QV2& a, const V2& b) { return a[0] * b[0] + a[1] * b[1]; }

Z qfloor(const Q& x) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}
Z qceil(const Q& x) {
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}
Z zlcm(const Z& a, const Z& b) {
  Z r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::string qstr(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}
Q qparse(const std::string& s) {
  Q x(s);
  x.canonicalize();
  return x;
}

std::pair<V3, Z> primitive_part(const V3& v) {
  if (is_zero(v)) throw std::runtime_error("zero has no primitive part");
  Z g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
  return {{v[0] / g, v[1] / g, v[2] / g}, g};
}
V3 primitive(const V3& v) { return primitive_part(v).first; }

V3 primitive_dir(const QV3& v) {
  Z l = zlcm(zlcm(v[0].get_den(), v[1].get_den()), v[2].get_den());
  V3 w{Z(v[0] * l), Z(v[1] * l), Z(v[2] * l)};
  return primitive(w);
}

std::pair<V2, Z> primitive_part2(const V2& v) {
  if (v[0] == 0 && v[1] == 0) throw std::runtime_error("zero has no primitive part");
  Z g = gcd(abs(v[0]), abs(v[1]));
  return {{v[0] / g, v[1] / g}, g};
}

int rank_of_q(const std::vector<QV3>& vs) {
  std::vector<QV3> m = vs;
  int rank = 0;
  for (int col = 0; col < 3 && rank < (int)m.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)m.size(); ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < (int)m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Q f = m[r][col] / m[rank][col];
      for (int c = 0; c < 3; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}
int rank_of(const std::vector<V3>& vs) {
  std::vector<QV3> q;
  q.reserve(vs.size());
  for (auto& v : vs) q.push_back(to_q(v));
  return rank_of_q(q);
}

std::optional<QV3> solve3(const std::array<QV3, 3>& rows, const QV3& rhs) {
  // Cramer with rational 3x3 determinants
  auto qdet = [](const QV3& a, const QV3& b, const QV3& c) -> Q {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
  };
  Q d = qdet(rows[0], rows[1], rows[2]);
  if (d == 0) return std::nullopt;
  QV3 x;
  for (int j = 0; j < 3; ++j) {
    std::array<QV3, 3> m = rows;
    for (int i = 0; i < 3; ++i) m[i][j] = rhs[i];
    x[j] = qdet(m[0], m[1], m[2]) / d;
  }
  return x;
}
std::optional<QV3> solve3z(const std::array<V3, 3>& rows, const QV3& rhs) {
  return solve3({to_q(rows[0]), to_q(rows[1]), to_q(rows[2])}, rhs);
}

std::optional<QV3> solve_linear(const std::vector<V3>& rows, const std::vector<Q>& rhs) {
  // pick 3 independent rows, solve, verify all others
  size_t n = rows.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        if (det3(rows[i], rows[j], rows[k]) == 0) continue;
        auto x = solve3z({rows[i], rows[j], rows[k]}, {rhs[i], rhs[j], rhs[k]});
        if (!x) continue;
        bool ok = true;
        for (size_t t = 0; t < n && ok; ++t) ok = (qdot(*x, rows[t]) == rhs[t]);
        if (ok) return x;
        return std::nullopt;  // rank 3 but inconsistent
      }
  return std::nullopt;  // rank < 3: no unique solution
}

// ---- Smith normal form ----
static M33 identity33() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

static void row_op(M33& A, M33& U, int i, int j, const Z& q) {
  // row_i -= q * row_j in A; mirror on U so that U_new^{-1} tracks: we keep
  // A = U * S * V with U accumulating the inverse row ops: U cols update.
  for (int c = 0; c < 3; ++c) A[i][c] -= q * A[j][c];
  for (int r = 0; r < 3; ++r) U[r][j] += q * U[r][i];
}
static void col_op(M33& A, M33& V, int i, int j, const Z& q) {
  for (int r = 0; r < 3; ++r) A[r][i] -= q * A[r][j];
  for (int c = 0; c < 3; ++c) V[j][c] += q * V[i][c];
}
static void row_swap(M33& A, M33& U, int i, int j) {
  std::swap(A[i], A[j]);
  for (int r = 0; r < 3; ++r) std::swap(U[r][i], U[r][j]);
}
static void col_swap(M33& A, M33& V, int i, int j) {
  for (int r = 0; r < 3; ++r) std::swap(A[r][i], A[r][j]);
  std::swap(V[i], V[j]);
}

Snf smith_normal_form(const M33& A0) {
  M33 A = A0, U = identity33(), V = identity33();
  auto diagonalize = [&]() {
    for (int k = 0; k < 3; ++k) {
      for (;;) {
        // nonzero pivot with minimal absolute value in the trailing block
        int pi = -1, pj = -1;
        Z best = 0;
        for (int i = k; i < 3; ++i)
          for (int j = k; j < 3; ++j)
            if (A[i][j] != 0 && (pi < 0 || abs(A[i][j]) < best)) {
              best = abs(A[i][j]);
              pi = i;
              pj = j;
            }
        if (pi < 0) break;  // block is zero
        if (pi != k) row_swap(A, U, pi, k);
        if (pj != k) col_swap(A, V, pj, k);
        bool clean = true;
        for (int i = k + 1; i < 3; ++i)
          if (A[i][k] != 0) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), A[i][k].get_mpz_t(), A[k][k].get_mpz_t());
            row_op(A, U, i, k, q);
            if (A[i][k] != 0) clean = false;
          }
        for (int j = k + 1; j < 3; ++j)
          if (A[k][j] != 0) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), A[k][j].get_mpz_t(), A[k][k].get_mpz_t());
            col_op(A, V, j, k, q);
            if (A[k][j] != 0) clean = false;
          }
        if (clean) break;
      }
    }
  };
  diagonalize();
  // push zero diagonal entries to the back, then enforce s_k | s_j for k < j
  for (;;) {
    bool again = false;
    for (int k = 0; k < 2 && !again; ++k)
      for (int j = k + 1; j < 3 && !again; ++j) {
        if (A[k][k] == 0 && A[j][j] != 0) {
          row_swap(A, U, k, j);
          col_swap(A, V, k, j);
          again = true;
        } else if (A[k][k] != 0 && A[j][j] % A[k][k] != 0) {
          col_op(A, V, k, j, Z(-1));  // col_k += col_j
          diagonalize();
          again = true;
        }
      }
    if (!again) break;
  }
  // make the diagonal nonnegative
  for (int k = 0; k < 3; ++k)
    if (A[k][k] < 0) {
      for (int r = 0; r < 3; ++r) A[r][k] = -A[r][k];
      V[k] = neg(V[k]);
    }
  return {U, A, V};
}

std::vector<V3> lattice_row_basis(std::vector<V3> rows) {
  // integer row echelon via gcd elimination (Hermite style)
  std::vector<V3> out;
  size_t rpos = 0;
  for (int col = 0; col < 3; ++col) {
    // gather rows with nonzero entry in col at positions >= rpos
    for (;;) {
      int piv = -1;
      for (size_t r = rpos; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (piv < 0 || abs(rows[r][col]) < abs(rows[piv][col]))) piv = (int)r;
      if (piv < 0) break;
      std::swap(rows[rpos], rows[(size_t)piv]);
      bool done = true;
      for (size_t r = rpos + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[rpos][col].get_mpz_t());
        rows[r] = sub(rows[r], mul(q, rows[rpos]));
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        ++rpos;
        break;
      }
    }
  }
  for (size_t r = 0; r < rpos; ++r) out.push_back(rows[r]);
  return out;
}

V3 dual_partner(const V3& w) {
  // p with <p, w> = 1 for primitive w, via iterated extended gcd
  Z g1, a, b;
  mpz_gcdext(g1.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), w[0].get_mpz_t(), w[1].get_mpz_t());
  Z g2, c, d;
  mpz_gcdext(g2.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t(), g1.get_mpz_t(), w[2].get_mpz_t());
  if (g2 != 1) throw std::runtime_error("dual_partner: vector not primitive");
  return {c * a, c * b, d};
}

std::pair<V3, V3> kernel_basis(const V3& w) {
  V3 p = dual_partner(w);
  std::vector<V3> gens;
  for (int i = 0; i < 3; ++i) {
    V3 e{0, 0, 0};
    e[i] = 1;
    gens.push_back(sub(e, mul(w[i], p)));  // <e - w_i p, w> = 0
  }
  auto basis = lattice_row_basis(gens);
  if (basis.size() != 2) throw std::runtime_error("kernel_basis: unexpected rank");
  return {basis[0], basis[1]};
}

std::pair<V3, V3> plane_lattice_basis(const V3& u, const V3& v) {
  V3 w = cross(u, v);
  if (is_zero(w)) throw std::runtime_error("degenerate cone");
  return kernel_basis(primitive(w));
}

std::optional<QV2> in_plane_coords(const V3& b1, const V3& b2, const QV3& x) {
  // solve x = s b1 + t b2 over the rationals
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Z d = b1[i] * b2[j] - b1[j] * b2[i];
      if (d == 0) continue;
      Q s = (x[i] * b2[j] - x[j] * b2[i]) / d;
      Q t = (b1[i] * x[j] - b1[j] * x[i]) / d;
      for (int k = 0; k < 3; ++k)
        if (s * b1[k] + t * b2[k] != x[k]) return std::nullopt;
      return QV2{s, t};
    }
  return std::nullopt;
}

Z cone2_multiplicity(const V3& u, const V3& v) {
  auto [b1, b2] = plane_lattice_basis(u, v);
  auto cu = in_plane_coords(b1, b2, to_q(u));
  auto cv = in_plane_coords(b1, b2, to_q(v));
  if (!cu || !cv) throw std::runtime_error("plane basis failure");
  Q d = qcross2(*cu, *cv);
  Z m = abs(d.get_num());
  if (d.get_den() != 1) throw std::runtime_error("non-integral plane coordinates");
  if (m == 0) throw std::runtime_error("degenerate cone");
  return m;
}

// ---- Hilbert bases ----

std::vector<V2> hilbert_basis_2d(const V2& u0, const V2& v0) {
  V2 u = primitive_part2(u0).first, v = primitive_part2(v0).first;
  Z d = cross2(u, v);
  if (d == 0) throw std::runtime_error(u == v ? "degenerate cone" : "cone contains a line");
  if (d < 0) std::swap(u, v), d = -d;
  // candidates: lattice points of the half-open parallelogram [0,1)u + [0,1)v
  std::vector<V2> cand{u, v};
  Z xmin = std::min({Z(0), u[0], v[0], Z(u[0] + v[0])});
  Z xmax = std::max({Z(0), u[0], v[0], Z(u[0] + v[0])});
  Z ymin = std::min({Z(0), u[1], v[1], Z(u[1] + v[1])});
  Z ymax = std::max({Z(0), u[1], v[1], Z(u[1] + v[1])});
  for (Z x = xmin; x <= xmax; ++x)
    for (Z y = ymin; y <= ymax; ++y) {
      V2 p{x, y};
      if (x == 0 && y == 0) continue;
      Z a = cross2(p, v);  // = alpha * d
      Z b = cross2(u, p);  // = beta * d
      if (a >= 0 && a < d && b >= 0 && b < d && !(a == 0 && b == 0)) cand.push_back(p);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  auto in_cone = [&](const V2& p) { return cross2(p, v) >= 0 && cross2(u, p) >= 0; };
  std::vector<V2> out;
  for (auto& x : cand) {
    bool reducible = false;
    for (auto& s : cand) {
      if (s == x) continue;
      V2 r = sub2(x, s);
      if ((r[0] != 0 || r[1] != 0) && in_cone(r)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<V3> cone_facet_normals(const std::vector<V3>& rays) {
  std::vector<V3> normals;
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j) {
      V3 n = cross(rays[i], rays[j]);
      if (is_zero(n)) continue;
      bool allpos = true, allneg = true;
      for (auto& r : rays) {
        Z s = dot(n, r);
        if (s > 0) allneg = false;
        if (s < 0) allpos = false;
      }
      if (allpos)
        normals.push_back(primitive(n));
      else if (allneg)
        normals.push_back(primitive(neg(n)));
    }
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  return normals;
}

std::vector<V3> extreme_rays(const std::vector<V3>& rays0) {
  std::vector<V3> rays;
  for (auto& r : rays0)
    if (!is_zero(r)) rays.push_back(primitive(r));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.empty()) return {};
  int rk = rank_of(rays);
  if (rk == 1) {
    if (rays.size() > 1) throw std::runtime_error("cone contains a line");
    return rays;
  }
  if (rk == 2) {
    size_t other = 0;
    for (size_t j = 1; j < rays.size(); ++j)
      if (!is_zero(cross(rays[0], rays[j]))) {
        other = j;
        break;
      }
    if (other == 0) throw std::runtime_error("cone contains a line");
    auto [b1, b2] = plane_lattice_basis(rays[0], rays[other]);
    // find two rays spanning all the others
    std::vector<V2> r2;
    for (auto& r : rays) {
      auto c = in_plane_coords(b1, b2, to_q(r));
      if (!c || c->at(0).get_den() != 1 || c->at(1).get_den() != 1)
        throw std::runtime_error("plane basis failure");
      r2.push_back({c->at(0).get_num(), c->at(1).get_num()});
    }
    for (size_t i = 0; i < r2.size(); ++i)
      for (size_t j = 0; j < r2.size(); ++j) {
        if (i == j || cross2(r2[i], r2[j]) <= 0) continue;
        bool all = true;
        for (auto& p : r2)
          if (!(cross2(r2[i], p) >= 0 && cross2(p, r2[j]) >= 0)) {
            all = false;
            break;
          }
        if (all) {
          std::vector<V3> out{rays[i], rays[j]};
          std::sort(out.begin(), out.end());
          return out;
        }
      }
    throw std::runtime_error("cone contains a line");
  }
  // rank 3
  auto normals = cone_facet_normals(rays);
  if (rank_of(normals) < 3) throw std::runtime_error("cone contains a line");
  std::vector<V3> out;
  for (auto& r : rays) {
    // extreme iff active on two independent facets
    std::vector<V3> act;
    for (auto& n : normals)
      if (dot(n, r) == 0) act.push_back(n);
    if (act.size() >= 2 && rank_of(act) >= 2) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// lattice points of the half-open parallelepiped [0,1) r1 + [0,1) r2 + [0,1) r3
static std::vector<V3> parallelepiped_points(const V3& r1, const V3& r2, const V3& r3) {
  M33 R = {{{r1[0], r2[0], r3[0]}, {r1[1], r2[1], r3[1]}, {r1[2], r2[2], r3[2]}}};  // columns r_i
  if (det3(R[0], R[1], R[2]) == 0) throw std::runtime_error("degenerate parallelepiped");
  auto snf = smith_normal_form(R);
  // R Z^3 = U S Z^3; coset reps of Z^3 / R Z^3 are U * (i,j,k), 0 <= i < s_k
  Z s1 = abs(snf.S[0][0]), s2 = abs(snf.S[1][1]), s3 = abs(snf.S[2][2]);
  // rational inverse of R via adjugate
  auto apply_inv = [&](const V3& y) -> QV3 {
    // solve R t = y
    auto t = solve3z({{R[0], R[1], R[2]}}, to_q(y));
    return *t;
  };
  std::vector<V3> pts;
  for (Z i = 0; i < s1; ++i)
    for (Z j = 0; j < s2; ++j)
      for (Z k = 0; k < s3; ++k) {
        V3 a{i, j, k};
        V3 y{snf.U[0][0] * a[0] + snf.U[0][1] * a[1] + snf.U[0][2] * a[2],
             snf.U[1][0] * a[0] + snf.U[1][1] * a[1] + snf.U[1][2] * a[2],
             snf.U[2][0] * a[0] + snf.U[2][1] * a[1] + snf.U[2][2] * a[2]};
        QV3 t = apply_inv(y);
        QV3 f{t[0] - qfloor(t[0]), t[1] - qfloor(t[1]), t[2] - qfloor(t[2])};
        QV3 x{f[0] * r1[0] + f[1] * r2[0] + f[2] * r3[0], f[0] * r1[1] + f[1] * r2[1] + f[2] * r3[1],
              f[0] * r1[2] + f[1] * r2[2] + f[2] * r3[2]};
        pts.push_back(to_z(x));
      }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<V3> hilbert_basis(const std::vector<V3>& rays0) {
  auto ext = extreme_rays(rays0);
  if (ext.empty()) return {};
  int rk = rank_of(ext);
  if (rk == 1) return ext;
  if (rk == 2) {
    auto [b1, b2] = plane_lattice_basis(ext[0], ext[1]);
    auto c0 = in_plane_coords(b1, b2, to_q(ext[0]));
    auto c1 = in_plane_coords(b1, b2, to_q(ext[1]));
    V2 u{c0->at(0).get_num(), c0->at(1).get_num()};
    V2 v{c1->at(0).get_num(), c1->at(1).get_num()};
    auto hb2 = hilbert_basis_2d(u, v);
    std::vector<V3> out;
    for (auto& p : hb2) out.push_back(add(mul(p[0], b1), mul(p[1], b2)));
    std::sort(out.begin(), out.end());
    return out;
  }
  // rank 3: triangulate the cross-section polygon by fanning from the first ray
  auto normals = cone_facet_normals(ext);
  auto in_cone = [&](const V3& x) {
    for (auto& n : normals)
      if (dot(n, x) < 0) return false;
    return true;
  };
  // cyclic order of extreme rays: order by adjacency along 2-faces
  std::vector<V3> cyc;
  {
    size_t n = ext.size();
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        V3 c = cross(ext[i], ext[j]);
        if (is_zero(c)) continue;
        bool pos = true, negs = true;
        for (size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          Z s = dot(c, ext[k]);
          if (s < 0) pos = false;
          if (s > 0) negs = false;
        }
        if (pos || negs) {
          adj[i].push_back((int)j);
          adj[j].push_back((int)i);
        }
      }
    std::vector<int> order{0};
    std::set<int> used{0};
    while (order.size() < n) {
      int cur = order.back(), nxt = -1;
      for (int cand : adj[(size_t)cur])
        if (!used.count(cand)) {
          nxt = cand;
          break;
        }
      if (nxt < 0) throw std::runtime_error("cone cross-section ordering failed");
      order.push_back(nxt);
      used.insert(nxt);
    }
    for (int i : order) cyc.push_back(ext[(size_t)i]);
  }
  std::vector<V3> cand = ext;
  for (size_t i = 1; i + 1 < cyc.size(); ++i) {
    auto pts = parallelepiped_points(cyc[0], cyc[i], cyc[i + 1]);
    for (auto& p : pts)
      if (!is_zero(p)) cand.push_back(p);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<V3> out;
  for (auto& x : cand) {
    bool reducible = false;
    for (auto& s : cand) {
      if (s == x) continue;
      V3 r = sub(x, s);
      if (!is_zero(r) && in_cone(r)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<V3> cone_from_inequalities(const std::vector<V3>& normals) {
  // every extreme ray of a full-dimensional pointed cone is cut out by two of
  // its facet planes, so the feasible pairwise cross products generate
  std::set<V3> out;
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = i + 1; j < normals.size(); ++j) {
      V3 c = cross(normals[i], normals[j]);
      if (is_zero(c)) continue;
      for (const V3& s : {c, neg(c)}) {
        bool in = true;
        for (const auto& a : normals)
          if (dot(a, s) < 0) {
            in = false;
            break;
          }
        if (in) out.insert(primitive(s));
      }
    }
  return {out.begin(), out.end()};
}

}  // namespace lpk
