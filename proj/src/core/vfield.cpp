#include "vfield.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace petrov {

std::vector<double> vf_eval(const VField& X, const Point& p) {
  std::vector<double> out;
  out.reserve(X.size());
  for (const auto& comp : X) out.push_back(comp.eval(p));
  return out;
}

std::vector<double> vf_bracket_at(const VField& X, const VField& Y,
                                  const Point& p) {
  size_t n = X.size();
  if (Y.size() != n) throw std::invalid_argument("component count mismatch");
  std::vector<double> xv = vf_eval(X, p);
  std::vector<double> yv = vf_eval(Y, p);
  std::vector<double> out(n, 0.0);
  for (size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (size_t j = 0; j < n; ++j) {
      if (xv[j] != 0.0) acc += xv[j] * Y[k].diff(static_cast<int>(j)).eval(p);
      if (yv[j] != 0.0) acc -= yv[j] * X[k].diff(static_cast<int>(j)).eval(p);
    }
    out[k] = acc;
  }
  return out;
}

std::vector<Point> sample_box(const PetrovAction& a, std::uint64_t seed,
                              int count) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  auto next_unit = [&]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Point> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    Point p(a.ambient);
    for (int k = 0; k < a.ambient; ++k) {
      auto [lo, hi] = a.box[k];
      p[k] = lo + (hi - lo) * next_unit();
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

namespace {

// Least-squares solve of (A^T A) c = A^T b with partial pivoting.
std::vector<double> solve_normal(const std::vector<std::vector<double>>& rowsA,
                                 const std::vector<double>& b, int unknowns) {
  int n = unknowns;
  std::vector<std::vector<double>> M(n, std::vector<double>(n + 1, 0.0));
  for (size_t r = 0; r < rowsA.size(); ++r) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M[i][j] += rowsA[r][i] * rowsA[r][j];
      M[i][n] += rowsA[r][i] * b[r];
    }
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(M[i][c]) > std::abs(M[piv][c])) piv = i;
    if (std::abs(M[piv][c]) < 1e-12)
      throw std::domain_error("singular least-squares system (insufficient sampling)");
    std::swap(M[c], M[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      double f = M[i][c] / M[c][c];
      if (f == 0.0) continue;
      for (int j = c; j <= n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
  return x;
}

std::vector<std::vector<double>> invert_dense(std::vector<std::vector<double>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    if (std::abs(m[piv][c]) < 1e-12)
      throw std::domain_error("singular change of basis");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    double d = m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      double f = m[i][c];
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

ActionReport verify_action(const Catalog& cat, const std::string& id,
                           const std::string& variant, std::uint64_t seed,
                           int points) {
  std::string resolved;
  const PetrovAction* a = cat.action(id, nullptr, &resolved);
  if (!a) throw std::invalid_argument("unknown action id: " + id);
  const ActionVariant* av = nullptr;
  if (variant == "corrected") {
    av = &a->corrected;
  } else if (variant == "typo") {
    if (!a->typo)
      throw std::invalid_argument("no recorded typo variant for " + resolved);
    av = &*a->typo;
  } else {
    throw std::invalid_argument("variant must be 'corrected' or 'typo'");
  }

  ActionReport rep;
  rep.id = resolved;
  rep.variant = variant;

  int nf = static_cast<int>(av->fields.size());
  auto pts = sample_box(*a, seed, points);

  // Recover c^k_ij by stacking sum_k c^k X_k(p) = [X_i, X_j](p) over points.
  std::vector<std::vector<std::vector<double>>> field_vals(pts.size());
  for (size_t m = 0; m < pts.size(); ++m) {
    field_vals[m].resize(nf);
    for (int k = 0; k < nf; ++k) field_vals[m][k] = vf_eval(av->fields[k], pts[m]);
  }

  rep.recovered.assign(nf, std::vector<std::vector<double>>(
                               nf, std::vector<double>(nf, 0.0)));
  double closure = 0.0;
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) {
      std::vector<std::vector<double>> rows;
      std::vector<double> rhs;
      std::vector<std::vector<double>> brackets(pts.size());
      for (size_t m = 0; m < pts.size(); ++m) {
        brackets[m] = vf_bracket_at(av->fields[i], av->fields[j], pts[m]);
        for (int comp = 0; comp < a->ambient; ++comp) {
          std::vector<double> row(nf);
          for (int k = 0; k < nf; ++k) row[k] = field_vals[m][k][comp];
          rows.push_back(std::move(row));
          rhs.push_back(brackets[m][comp]);
        }
      }
      auto c = solve_normal(rows, rhs, nf);
      for (int k = 0; k < nf; ++k) {
        rep.recovered[i][j][k] = c[k];
        rep.recovered[j][i][k] = -c[k];
      }
      for (size_t m = 0; m < pts.size(); ++m) {
        for (int comp = 0; comp < a->ambient; ++comp) {
          double fit = 0.0;
          for (int k = 0; k < nf; ++k) fit += c[k] * field_vals[m][k][comp];
          closure = std::max(closure, std::abs(brackets[m][comp] - fit));
        }
      }
    }
  rep.closure_residual = closure;

  // Identification: transform the recovered constants through the recorded
  // change of basis and compare with the catalog structure constants.
  rep.identified_class = av->winternitz_key;
  {
    const auto& P = av->change_of_basis;  // rows: e_i in the X-basis
    std::vector<std::vector<double>> Pc(nf, std::vector<double>(nf, 0.0));
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j) Pc[j][i] = P[i][j];  // columns = e_i
    auto Pinv = invert_dense(Pc);

    // Non-rational class parameters bypass the exact constraint check: the
    // entry is located by its pattern and evaluated with doubles.
    const CatalogEntry* entry = nullptr;
    std::map<std::string, double> pd;
    if (av->winternitz_params_approx.empty()) {
      auto [e, exact_params] =
          cat.resolve(av->winternitz_key, av->winternitz_params_exact);
      entry = e;
      for (const auto& [k, vq] : exact_params) pd[k] = static_cast<double>(vq);
    } else {
      entry = cat.find_entry(av->winternitz_key);
      if (!entry)
        throw std::invalid_argument("unknown class " + av->winternitz_key);
      for (const auto& [k, vq] : av->winternitz_params_exact)
        pd[k] = static_cast<double>(vq);
      for (const auto& [k, vd] : av->winternitz_params_approx) pd[k] = vd;
    }
    // Expected constants in the e-basis.
    std::vector<std::vector<std::vector<double>>> expected(
        nf, std::vector<std::vector<double>>(nf, std::vector<double>(nf, 0.0)));
    for (const auto& b : entry->brackets) {
      for (int k = 0; k < nf; ++k) {
        double v = static_cast<double>(b.coeffs[k].c0);
        for (const auto& [name, coef] : b.coeffs[k].terms)
          v += static_cast<double>(coef) * pd.at(name);
        expected[b.i][b.j][k] = v;
        expected[b.j][b.i][k] = -v;
      }
    }
    double resid = 0.0;
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j)
        for (int k = 0; k < nf; ++k) {
          // c'_{ij}^k = sum_{a,b,l} Pinv[k][l] c_{ab}^l P[i][a] P[j][b]
          double v = 0.0;
          for (int aa = 0; aa < nf; ++aa)
            for (int bb = 0; bb < nf; ++bb) {
              if (P[i][aa] == 0.0 || P[j][bb] == 0.0) continue;
              for (int l = 0; l < nf; ++l)
                v += Pinv[k][l] * rep.recovered[aa][bb][l] * P[i][aa] * P[j][bb];
            }
          resid = std::max(resid, std::abs(v - expected[i][j][k]));
        }
    rep.identification_residual = resid;
  }

  // Generic isotropy must vanish at every sampled point.
  double iso = 0.0;
  if (!a->generic_isotropy.empty() && variant == "corrected") {
    for (size_t m = 0; m < pts.size(); ++m) {
      std::vector<double> sum(a->ambient, 0.0);
      for (int k = 0; k < nf; ++k) {
        double ck = a->generic_isotropy[k].eval(pts[m]);
        if (ck == 0.0) continue;
        for (int comp = 0; comp < a->ambient; ++comp)
          sum[comp] += ck * field_vals[m][k][comp];
      }
      for (double s : sum) iso = std::max(iso, std::abs(s));
    }
  }
  rep.isotropy_residual = iso;

  // Preferred point: generic combination at x0 equals the printed h0 up to
  // scale.
  rep.has_preferred = a->has_preferred;
  if (a->has_preferred && variant == "corrected") {
    std::vector<double> gen(nf);
    for (int k = 0; k < nf; ++k) gen[k] = a->generic_isotropy[k].eval(a->x0);
    // Find the scale from the largest preferred coefficient.
    int pivot = 0;
    for (int k = 0; k < nf; ++k)
      if (std::abs(a->preferred_h0[k]) > std::abs(a->preferred_h0[pivot]))
        pivot = k;
    bool ok = std::abs(a->preferred_h0[pivot]) > 0;
    double scale = ok ? gen[pivot] / a->preferred_h0[pivot] : 0.0;
    if (scale == 0.0) ok = false;
    for (int k = 0; k < nf && ok; ++k)
      if (std::abs(gen[k] - scale * a->preferred_h0[k]) > 1e-9) ok = false;
    rep.preferred_isotropy_ok = ok;
  }
  return rep;
}

}  // namespace petrov
