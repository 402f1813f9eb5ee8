#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "tangentia/boundary.hpp"
#include "tangentia/deadline.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Polynomial in the affine chart, evaluated in doubles.
class DehomPoly {
 public:
  DehomPoly(const Polynomial& f, std::size_t dehom) {
    for (const auto& t : f.terms()) {
      std::vector<unsigned> e;
      for (std::size_t i = 0; i < t.exponents.size(); ++i)
        if (i != dehom) e.push_back(t.exponents[i]);
      terms_.push_back({t.coefficient.get_d(), std::move(e)});
    }
  }

  double eval(const Vec& x) const {
    double s = 0;
    for (const auto& [c, e] : terms_) {
      double m = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) m *= x[static_cast<Eigen::Index>(i)];
      s += m;
    }
    return s;
  }

  Vec gradient(const Vec& x) const {
    Vec g = Vec::Zero(x.size());
    for (const auto& [c, e] : terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        double m = c * e[v];
        for (std::size_t i = 0; i < e.size(); ++i) {
          const unsigned p = i == v ? e[i] - 1 : e[i];
          for (unsigned k = 0; k < p; ++k) m *= x[static_cast<Eigen::Index>(i)];
        }
        g[static_cast<Eigen::Index>(v)] += m;
      }
    }
    return g;
  }

 private:
  std::vector<std::pair<double, std::vector<unsigned>>> terms_;
};

struct System {
  std::vector<DehomPoly> eqs;
  Eigen::Index dim;

  Vec values(const Vec& x) const {
    Vec f(static_cast<Eigen::Index>(eqs.size()));
    for (std::size_t i = 0; i < eqs.size(); ++i) f[static_cast<Eigen::Index>(i)] = eqs[i].eval(x);
    return f;
  }
  Mat jacobian(const Vec& x) const {
    Mat J(static_cast<Eigen::Index>(eqs.size()), dim);
    for (std::size_t i = 0; i < eqs.size(); ++i) J.row(static_cast<Eigen::Index>(i)) = eqs[i].gradient(x).transpose();
    return J;
  }
};

// Least-norm Gauss-Newton: x <- x - J^+ F(x).
template <class F, class JF>
bool gauss_newton(Vec& x, F residual, JF jac, double target, int max_iter = 60) {
  for (int it = 0; it < max_iter; ++it) {
    const Vec r = residual(x);
    if (!r.allFinite()) return false;
    if (r.norm() < target) return true;
    const Mat J = jac(x);
    const Vec step = J.completeOrthogonalDecomposition().solve(r);
    x -= step;
    if (!x.allFinite() || x.norm() > 1e8) return false;
  }
  return residual(x).norm() < std::sqrt(target);
}

bool project(const System& sys, Vec& x) {
  return gauss_newton(
      x, [&](const Vec& v) { return sys.values(v); }, [&](const Vec& v) { return sys.jacobian(v); }, 1e-13);
}

// ---- convex hulls -----------------------------------------------------------

using Facet = std::vector<int>;

std::vector<Facet> hull_2d(const std::vector<Vec>& pts) {
  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a][0] < pts[b][0] || (pts[a][0] == pts[b][0] && pts[a][1] < pts[b][1]);
  });
  auto cross = [&](int o, int a, int b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) - (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<int> h(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
    const int i = idx[j];
    while (k >= t && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  if (h.size() < 3) throw InputError("convex hull is degenerate: the sample does not span the plane");
  std::vector<Facet> out;
  for (std::size_t i = 0; i < h.size(); ++i) out.push_back({h[i], h[(i + 1) % h.size()]});
  return out;
}

std::vector<Facet> hull_3d(const std::vector<Vec>& raw) {
  std::vector<Eigen::Vector3d> p;
  for (const auto& v : raw) p.emplace_back(v[0], v[1], v[2]);
  const int n = static_cast<int>(p.size());
  double scale = 0;
  for (const auto& q : p) scale = std::max(scale, q.norm());
  const double eps = 1e-12 * std::max(1.0, scale);

  // Initial tetrahedron from extreme points.
  int a = 0, b = 0, c = -1, d = -1;
  for (int i = 0; i < n; ++i)
    if ((p[i] - p[a]).norm() > (p[b] - p[a]).norm()) b = i;
  double best = 0;
  for (int i = 0; i < n; ++i) {
    const double area = (p[b] - p[a]).cross(p[i] - p[a]).norm();
    if (area > best) best = area, c = i;
  }
  best = 0;
  if (c >= 0) {
    const Eigen::Vector3d nrm = (p[b] - p[a]).cross(p[c] - p[a]);
    for (int i = 0; i < n; ++i) {
      const double vol = std::abs(nrm.dot(p[i] - p[a]));
      if (vol > best) best = vol, d = i;
    }
  }
  if (c < 0 || d < 0 || best < eps * scale * scale)
    throw InputError("convex hull is degenerate: the sample does not span R^3");

  struct Face {
    std::array<int, 3> v;
    Eigen::Vector3d normal;
    double offset;
    bool alive = true;
  };
  std::vector<Face> faces;
  std::map<std::pair<int, int>, int> edge_face;
  const Eigen::Vector3d inside = (p[a] + p[b] + p[c] + p[d]) / 4.0;
  auto add_face = [&](int i, int j, int k) {
    Eigen::Vector3d nrm = (p[j] - p[i]).cross(p[k] - p[i]);
    if (nrm.dot(inside - p[i]) > 0) {
      std::swap(j, k);
      nrm = -nrm;
    }
    nrm.normalize();
    faces.push_back({{i, j, k}, nrm, nrm.dot(p[i]), true});
    const int f = static_cast<int>(faces.size()) - 1;
    edge_face[{i, j}] = f;
    edge_face[{j, k}] = f;
    edge_face[{k, i}] = f;
  };
  add_face(a, b, c);
  add_face(a, b, d);
  add_face(a, c, d);
  add_face(b, c, d);

  for (int i = 0; i < n; ++i) {
    if (i % 64 == 0) check_deadline();
    if (i == a || i == b || i == c || i == d) continue;
    auto sees = [&](int f) { return faces[f].normal.dot(p[i]) - faces[f].offset > eps; };
    int seed = -1;
    for (std::size_t f = 0; f < faces.size() && seed < 0; ++f)
      if (faces[f].alive && sees(static_cast<int>(f))) seed = static_cast<int>(f);
    if (seed < 0) continue;
    // Grow the visible region through shared edges so it stays connected.
    std::vector<int> visible{seed};
    faces[seed].alive = false;
    for (std::size_t q = 0; q < visible.size(); ++q) {
      const auto& v = faces[visible[q]].v;
      for (int e = 0; e < 3; ++e) {
        auto it = edge_face.find({v[(e + 1) % 3], v[e]});
        if (it != edge_face.end() && faces[it->second].alive && sees(it->second)) {
          faces[it->second].alive = false;
          visible.push_back(it->second);
        }
      }
    }
    std::vector<std::pair<int, int>> horizon;
    for (int f : visible) {
      const auto& v = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        const int u = v[e], w = v[(e + 1) % 3];
        auto it = edge_face.find({w, u});
        if (it != edge_face.end() && faces[it->second].alive) horizon.emplace_back(u, w);
      }
    }
    for (int f : visible) {
      const auto& v = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        auto it = edge_face.find({v[e], v[(e + 1) % 3]});
        if (it != edge_face.end() && it->second == f) edge_face.erase(it);
      }
    }
    for (const auto& [u, w] : horizon) {
      const Eigen::Vector3d nrm = (p[w] - p[u]).cross(p[i] - p[u]).normalized();
      faces.push_back({{u, w, i}, nrm, nrm.dot(p[u]), true});
      const int f = static_cast<int>(faces.size()) - 1;
      edge_face[{u, w}] = f;
      edge_face[{w, i}] = f;
      edge_face[{i, u}] = f;
    }
  }
  std::vector<Facet> out;
  for (const auto& f : faces)
    if (f.alive) out.push_back({f.v[0], f.v[1], f.v[2]});
  return out;
}

// ---- facet refinement ---------------------------------------------------------

// Residual for m contact points p_j on the curve with a common tangent
// hyperplane n.x = c: f(p_j) = 0, n.p_j = c, det[J(p_j); n] = 0, |n|^2 = 1.
// The determinant uses the d-1 local equations; f runs over all of them.
Vec contact_residual(const System& sys, const System& local, const Vec& z, int m) {
  const Eigen::Index d = sys.dim;
  const Vec n = z.segment(m * d, d);
  const double c = z[m * d + d];
  const Eigen::Index per = static_cast<Eigen::Index>(sys.eqs.size()) + 2;
  Vec r(m * per + 1);
  for (int j = 0; j < m; ++j) {
    const Vec pj = z.segment(j * d, d);
    const Eigen::Index base = j * per;
    r.segment(base, static_cast<Eigen::Index>(sys.eqs.size())) = sys.values(pj);
    r[base + per - 2] = n.dot(pj) - c;
    Mat M(d, d);
    M.topRows(d - 1) = local.jacobian(pj);
    M.row(d - 1) = n.transpose();
    r[base + per - 1] = M.determinant();
  }
  r[m * per] = n.squaredNorm() - 1;
  return r;
}

Mat numeric_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& z) {
  const Vec f0 = f(z);
  Mat J(f0.size(), z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    const double h = 1e-7 * std::max(1.0, std::abs(z[k]));
    Vec zp = z, zm = z;
    zp[k] += h;
    zm[k] -= h;
    J.col(k) = (f(zp) - f(zm)) / (2 * h);
  }
  return J;
}

double scaled_residual(const std::vector<DehomPoly>& gens, const Vec& x) {
  double worst = 0;
  for (const auto& g : gens) worst = std::max(worst, std::abs(g.eval(x)) / (1 + g.gradient(x).norm()));
  return worst;
}

}  // namespace

NumericCheckReport numeric_boundary_check(const ProjScheme& X, std::size_t dehomogenize,
                                          const std::vector<ProjScheme>& candidates,
                                          const NumericCheckOptions& opts) {
  const std::size_t vars = X.ring()->size();
  if (dehomogenize >= vars) throw InputError("numeric check: dehomogenizing variable out of range");
  const Eigen::Index d = static_cast<Eigen::Index>(vars) - 1;
  if (d < 2 || d > 3) throw UnsupportedError("numeric check: hull computation supports ambient dimension 2 or 3");
  if (X.dim() != 1) throw UnsupportedError("numeric check: only curves are sampled");
  for (const auto& C : candidates)
    if (C.ring()->size() != vars) throw InputError("numeric check: candidate in a different ambient space");

  System sys{{}, d};
  for (const auto& g : X.ideal().groebner_basis()) sys.eqs.emplace_back(g, dehomogenize);
  NumericCheckReport rep;
  if (candidates.empty()) return rep;

  std::mt19937_64 gen(opts.seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::vector<Vec> pts;
  for (std::size_t attempt = 0; pts.size() < opts.samples && attempt < 20 * opts.samples; ++attempt) {
    if (attempt % 64 == 0) check_deadline();
    Vec x(d);
    for (Eigen::Index i = 0; i < d; ++i) x[i] = box(gen);
    if (project(sys, x) && x.norm() < 1e3) pts.push_back(x);
  }
  rep.sample_points = pts.size();
  if (pts.size() < static_cast<std::size_t>(d) + 1) throw InputError("numeric check: real locus is empty or too small");

  // Local equations for tangency: choose d-1 generators of full rank at a sample point.
  System local{{}, d};
  {
    std::vector<std::size_t> chosen;
    Mat J = sys.jacobian(pts.front());
    for (Eigen::Index r = 0, added = 0; r < J.rows() && added < d - 1; ++r) {
      Mat trial(static_cast<Eigen::Index>(chosen.size()) + 1, d);
      for (std::size_t k = 0; k < chosen.size(); ++k) trial.row(static_cast<Eigen::Index>(k)) = J.row(static_cast<Eigen::Index>(chosen[k]));
      trial.row(trial.rows() - 1) = J.row(r);
      if (Eigen::FullPivLU<Mat>(trial).rank() == trial.rows()) {
        chosen.push_back(static_cast<std::size_t>(r));
        ++added;
      }
    }
    if (static_cast<Eigen::Index>(chosen.size()) != d - 1) throw InputError("numeric check: curve is singular at the sample");
    const auto& gb = X.ideal().groebner_basis();
    for (auto k : chosen) local.eqs.emplace_back(gb[k], dehomogenize);
  }

  const std::vector<Facet> facets = d == 2 ? hull_2d(pts) : hull_3d(pts);
  rep.hull_facets = facets.size();

  Vec lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double radius = 0.05 * (hi - lo).norm();

  std::vector<std::vector<DehomPoly>> cand_gens;
  for (const auto& C : candidates) {
    cand_gens.emplace_back();
    for (const auto& g : C.ideal().groebner_basis()) cand_gens.back().emplace_back(g, dehomogenize);
  }
  rep.max_residual.assign(candidates.size(), 0.0);

  for (const auto& facet : facets) {
    check_deadline();
    // Cluster facet vertices by distance.
    std::vector<int> cluster(facet.size(), -1);
    int m = 0;
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (cluster[i] >= 0) continue;
      cluster[i] = m;
      for (std::size_t j = i + 1; j < facet.size(); ++j)
        if (cluster[j] < 0 && (pts[facet[i]] - pts[facet[j]]).norm() < radius) cluster[j] = m;
      ++m;
    }
    Vec centroid = Vec::Zero(d);
    for (int v : facet) centroid += pts[v];
    centroid /= static_cast<double>(facet.size());

    Vec point = centroid;
    bool refined = false;
    if (m >= 2) {
      Vec z(m * d + d + 1);
      for (int j = 0; j < m; ++j) {
        Vec c = Vec::Zero(d);
        int count = 0;
        for (std::size_t i = 0; i < facet.size(); ++i)
          if (cluster[i] == j) c += pts[facet[i]], ++count;
        z.segment(j * d, d) = c / count;
      }
      Vec nrm(d);
      if (d == 2) {
        const Vec e = pts[facet[1]] - pts[facet[0]];
        nrm << -e[1], e[0];
      } else {
        const Eigen::Vector3d u = (pts[facet[1]] - pts[facet[0]]).head<3>();
        const Eigen::Vector3d w = (pts[facet[2]] - pts[facet[0]]).head<3>();
        nrm = u.cross(w);
      }
      nrm.normalize();
      z.segment(m * d, d) = nrm;
      z[m * d + d] = nrm.dot(centroid);
      auto f = [&](const Vec& v) { return contact_residual(sys, local, v, m); };
      if (gauss_newton(z, f, [&](const Vec& v) { return numeric_jacobian(f, v); }, 1e-12)) {
        // Closest point to the centroid in the affine span of the contact points.
        const Vec p0 = z.segment(0, d);
        Mat B(d, m - 1);
        for (int j = 1; j < m; ++j) B.col(j - 1) = z.segment(j * d, d) - p0;
        point = p0 + B * B.completeOrthogonalDecomposition().solve(centroid - p0);
        refined = true;
      }
    }
    if (!refined && !project(sys, point)) continue;
    ++rep.boundary_points;

    double best = std::numeric_limits<double>::infinity();
    std::size_t which = 0;
    for (std::size_t k = 0; k < cand_gens.size(); ++k) {
      const double r = scaled_residual(cand_gens[k], point);
      if (r < best) best = r, which = k;
    }
    rep.max_residual[which] = std::max(rep.max_residual[which], best);
    rep.worst_residual = std::max(rep.worst_residual, best);
    if (best <= opts.tol) ++rep.on_candidates;
  }
  rep.fraction = rep.boundary_points == 0 ? 0.0 : static_cast<double>(rep.on_candidates) / rep.boundary_points;
  return rep;
}

}  // namespace tangentia
