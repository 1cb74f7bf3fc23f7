#include "ecsk/geometry/lorentz.hpp"

#include <cmath>

namespace ecsk::geometry {

using forms::eta_diag;
using forms::Matrix4;

namespace {

Matrix4<Jet> identity(int order) {
  Matrix4<Jet> m;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) m[a][b] = Jet(a == b ? 1.0 : 0.0).truncated(order);
  }
  return m;
}

Matrix4<Jet> multiply(const Matrix4<Jet>& l, const Matrix4<Jet>& r) {
  Matrix4<Jet> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Jet acc{};
      for (int c = 0; c < 4; ++c) forms::mul_add(acc, l[a][c], r[c][b]);
      out[a][b] = acc;
    }
  }
  return out;
}

// (Lambda^{-1})^a_b = eta_aa Lambda^b_a eta_bb
Matrix4<Jet> lorentz_inverse(const Matrix4<Jet>& l) {
  Matrix4<Jet> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) out[a][b] = (eta_diag(a) * eta_diag(b)) * l[b][a];
  }
  return out;
}

int min_order(const Matrix4<Jet>& m) {
  int k = exprkit::kMaxOrder;
  for (const auto& row : m) {
    for (const auto& v : row) k = std::min(k, v.order());
  }
  return k;
}

}  // namespace

LorentzField LorentzField::from_matrix(std::vector<Expression> entries) {
  if (entries.size() != 16) throw GeometryError("a Lorentz matrix needs 16 entries");
  LorentzField f;
  f.factors_.push_back(Factor{Kind::Matrix, 0, 0, std::move(entries)});
  return f;
}

LorentzField LorentzField::rotation(int i, int j, Expression angle) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || i == j) throw GeometryError("rotation plane must be two spatial axes");
  LorentzField f;
  f.factors_.push_back(Factor{Kind::Rotation, i, j, {std::move(angle)}});
  return f;
}

LorentzField LorentzField::boost(int i, Expression rapidity) {
  if (i < 0 || i > 2) throw GeometryError("boost axis must be spatial");
  LorentzField f;
  f.factors_.push_back(Factor{Kind::Boost, i, 3, {std::move(rapidity)}});
  return f;
}

LorentzField LorentzField::then(const LorentzField& other) const {
  LorentzField f = *this;
  f.factors_.insert(f.factors_.end(), other.factors_.begin(), other.factors_.end());
  return f;
}

Matrix4<Jet> LorentzField::evaluate(const Point& x, int order) const {
  Matrix4<Jet> total = identity(order);
  for (const Factor& fac : factors_) {
    Matrix4<Jet> m = identity(order);
    if (fac.kind == Kind::Matrix) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) m[a][b] = exprkit::eval_jet(fac.entries[a * 4 + b], x, order);
      }
    } else {
      const Jet p = exprkit::eval_jet(fac.entries[0], x, order);
      Jet c;
      Jet s;
      if (fac.kind == Kind::Rotation) {
        c = exprkit::cos(p);
        s = exprkit::sin(p);
        m[fac.i][fac.i] = c;
        m[fac.i][fac.j] = -s;
        m[fac.j][fac.i] = s;
        m[fac.j][fac.j] = c;
      } else {
        const Jet ep = exprkit::exp(p);
        const Jet em = exprkit::exp(-p);
        c = 0.5 * (ep + em);
        s = 0.5 * (ep - em);
        m[fac.i][fac.i] = c;
        m[fac.i][3] = s;
        m[3][fac.i] = s;
        m[3][3] = c;
      }
    }
    total = multiply(total, m);
  }
  return total;
}

double lorentz_defect(const Matrix4<Jet>& lambda) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int c = 0; c < 4; ++c) s += lambda[c][a].value() * eta_diag(c) * lambda[c][b].value();
      worst = std::max(worst, std::abs(s - forms::eta(a, b)));
    }
  }
  return worst;
}

namespace {

void require_orthogonal(const Matrix4<Jet>& lambda, double tol) {
  const double defect = lorentz_defect(lambda);
  if (!(defect <= tol)) {
    throw GeometryError("Lambda is not eta-orthogonal (defect " + std::to_string(defect) + ")");
  }
}

MixedForm<Jet> transform_tetrad(const MixedForm<Jet>& e, const Matrix4<Jet>& lambda) {
  MixedForm<Jet> out(1, 1);
  for (int a = 0; a < 4; ++a) {
    for (int mu = 0; mu < 4; ++mu) {
      Jet acc{};
      for (int b = 0; b < 4; ++b) forms::mul_add(acc, lambda[a][b], e.at(b, mu));
      out.at(a, mu) = acc;
    }
  }
  return out;
}

MixedForm<Jet> transform_connection(const MixedForm<Jet>& omega, const Matrix4<Jet>& lambda) {
  if (min_order(lambda) < 1) throw exprkit::JetOrderError("Lorentz field needs jets of order >= 1");
  const Matrix4<Jet> inv = lorentz_inverse(lambda);
  MixedForm<Jet> out(1, 2);
  for (int mu = 0; mu < 4; ++mu) {
    // Mixed-index connection w^c_d = w^{cd} eta_dd.
    Matrix4<Jet> wm;
    Matrix4<Jet> dl;
    for (int c = 0; c < 4; ++c) {
      for (int d = 0; d < 4; ++d) {
        wm[c][d] = eta_diag(d) * omega.at(c * 4 + d, mu);
        dl[c][d] = lambda[c][d].derivative(mu);
      }
    }
    const Matrix4<Jet> conj = multiply(multiply(lambda, wm), inv);
    const Matrix4<Jet> mc = multiply(dl, inv);
    for (int ab : forms::sorted_tuples(2)) {
      const int a = ab / 4;
      const int b = ab % 4;
      // w'^{ab} = w'^a_b eta_bb
      out.at(ab, mu) = eta_diag(b) * (conj[a][b] - mc[a][b]);
    }
  }
  out.fill_images();
  return out;
}

}  // namespace

std::pair<MixedForm<Jet>, MixedForm<Jet>> lorentz_transform_at(const MixedForm<Jet>& e, const MixedForm<Jet>& omega,
                                                               const Matrix4<Jet>& lambda, double tol) {
  require_orthogonal(lambda, tol);
  return {transform_tetrad(e, lambda), transform_connection(omega, lambda)};
}

std::pair<FormEvaluator, FormEvaluator> lorentz_transform(FormEvaluator tetrad, FormEvaluator connection,
                                                          LorentzField lambda, double tol) {
  FormEvaluator e2 = [tetrad = std::move(tetrad), lambda, tol](const Point& x, int order) {
    const Matrix4<Jet> l = lambda.evaluate(x, order);
    require_orthogonal(l, tol);
    return transform_tetrad(tetrad(x, order), l);
  };
  FormEvaluator w2 = [connection = std::move(connection), lambda, tol](const Point& x, int order) {
    if (order + 1 > exprkit::kMaxOrder) {
      throw exprkit::JetOrderError("transformed connection needs Lorentz jets beyond order 3");
    }
    const Matrix4<Jet> l = lambda.evaluate(x, order + 1);
    require_orthogonal(l, tol);
    return transform_connection(connection(x, order), l);
  };
  return {std::move(e2), std::move(w2)};
}

MixedForm<Jet> transform_field_strength(const MixedForm<Jet>& F, const Matrix4<Jet>& lambda) {
  const Matrix4<Jet> inv = lorentz_inverse(lambda);
  MixedForm<Jet> out(2, 2);
  for (int mn : forms::sorted_tuples(2)) {
    Matrix4<Jet> fm;
    for (int c = 0; c < 4; ++c) {
      for (int d = 0; d < 4; ++d) fm[c][d] = eta_diag(d) * F.at(c * 4 + d, mn);
    }
    const Matrix4<Jet> conj = multiply(multiply(lambda, fm), inv);
    for (int ab : forms::sorted_tuples(2)) {
      const int a = ab / 4;
      const int b = ab % 4;
      out.at(ab, mn) = eta_diag(b) * conj[a][b];
    }
  }
  out.fill_images();
  return out;
}

}  // namespace ecsk::geometry
