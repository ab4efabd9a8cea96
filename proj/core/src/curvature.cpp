#include "grayform/curvature.hpp"

namespace grayform {

int pair_slot(int i, int j) {
  return detail::kFormIndex.slot_of_mask[(1 << i) | (1 << j)];
}

namespace {

// Frame indices (i, j), i < j, of each 2-form slot.
struct SlotPairs {
  std::array<std::array<int, 2>, 6> p{};
  SlotPairs() {
    KForm<double> f(2);
    for (int s = 0; s < 6; ++s) {
      int mk = f.mask(s);
      p[s] = {__builtin_ctz(mk), 31 - __builtin_clz(mk)};
    }
  }
};

const SlotPairs& slot_pairs() {
  static const SlotPairs sp;
  return sp;
}

template <class T>
T sq(const T& x) {
  return x * x;
}

template <class T>
Mat4<T> ricci_of(const CurvTensor<T>& R) {
  Mat4<T> ric = Mat4<T>::zero();
  for (int b = 0; b < kDim; ++b)
    for (int d = 0; d < kDim; ++d)
      for (int a = 0; a < kDim; ++a) ric(b, d) += R(a, b, a, d);
  return ric;
}

template <class T>
T trace(const Mat4<T>& m) {
  T s(0);
  for (int i = 0; i < kDim; ++i) s += m(i, i);
  return s;
}

// Operator sending psi to <a, psi> b + <b, psi> a, halved: the symmetric product.
template <class T>
Mat6<T> sym_outer(const KForm<T>& a, const KForm<T>& b) {
  return sfrac<T>(1, 2) * (outer(a, b) + outer(b, a));
}

}  // namespace

template <class T>
T curvature_symmetry_defect(const CurvTensor<T>& R) {
  T d(0);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c)
        for (int e = 0; e < kDim; ++e) {
          d += sq(T(R(a, b, c, e) + R(b, a, c, e)));
          d += sq(T(R(a, b, c, e) + R(a, b, e, c)));
          d += sq(T(R(a, b, c, e) - R(c, e, a, b)));
          d += sq(T(R(a, b, c, e) + R(b, c, a, e) + R(c, a, b, e)));
        }
  return d;
}

template <class T>
CurvOperator<T> operator_from_tensor(const CurvTensor<T>& R, Tol tol) {
  if (ScalarOps<T>::exact || tol.eps > 0) {
    if (!is_zero(curvature_symmetry_defect(R), tol))
      throw Error(ErrorKind::InvalidInput, "tensor lacks curvature symmetries");
  }
  const auto& sp = slot_pairs();
  CurvOperator<T> op;
  for (int I = 0; I < 6; ++I)
    for (int J = 0; J < 6; ++J) op(I, J) = R(sp.p[I][0], sp.p[I][1], sp.p[J][0], sp.p[J][1]);
  return op;
}

template <class T>
CurvTensor<T> tensor_from_operator(const CurvOperator<T>& op) {
  const auto& sp = slot_pairs();
  CurvTensor<T> R;
  for (int I = 0; I < 6; ++I)
    for (int J = 0; J < 6; ++J) {
      int a = sp.p[I][0], b = sp.p[I][1], c = sp.p[J][0], d = sp.p[J][1];
      const T& v = op(I, J);
      R(a, b, c, d) = v;
      R(b, a, c, d) = -v;
      R(a, b, d, c) = -v;
      R(b, a, d, c) = v;
    }
  return R;
}

template <class T>
CurvTensor<T> kulkarni_nomizu_g(const Mat4<T>& h) {
  CurvTensor<T> R;
  auto g = [](int i, int j) { return i == j ? T(1) : T(0); };
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y)
      for (int z = 0; z < kDim; ++z)
        for (int w = 0; w < kDim; ++w)
          R(x, y, z, w) = h(x, z) * g(y, w) + h(y, w) * g(x, z) - h(x, w) * g(y, z) -
                          h(y, z) * g(x, w);
  return R;
}

template <class T>
Mat4<T> tensor_invariant_part(const AcsJ<T>& J, const Mat4<T>& b) {
  const Mat4<T>& m = J.matrix();
  return sfrac<T>(1, 2) * (b + m.transpose() * b * m);
}

template <class T>
Mat4<T> tensor_anti_part(const AcsJ<T>& J, const Mat4<T>& b) {
  const Mat4<T>& m = J.matrix();
  return sfrac<T>(1, 2) * (b - m.transpose() * b * m);
}

template <class T>
RicciData<T> ricci_extract(const CurvTensor<T>& R, const AcsJ<T>& J) {
  RicciData<T> rd;
  const Mat4<T>& m = J.matrix();
  rd.ric = ricci_of(R);
  rd.s = trace(rd.ric);
  KForm<T> w = fundamental_form(J);
  CurvOperator<T> op = operator_from_tensor(R);
  rd.rho_star = op.apply(w);
  rd.s_star = T(2) * form_inner(rd.rho_star, w);
  // Ric*(X, Y) = -rho*(JX, Y)
  Mat4<T> rs = m.transpose() * to_matrix(rd.rho_star);
  rd.ric_star = T(-1) * rs;
  // rho(X, Y) = Ric'(JX, Y)
  Mat4<T> ric_inv = tensor_invariant_part(J, rd.ric);
  rd.rho = from_matrix(Mat4<T>(m.transpose() * ric_inv));
  return rd;
}

template <class T>
std::array<T, 4> ricci_identity_residuals(const RicciData<T>& rd, const AcsJ<T>& J) {
  const Mat4<T>& m = J.matrix();
  std::array<T, 4> out{};
  out[0] = frobenius2(Mat4<T>(m.transpose() * rd.ric_star * m - rd.ric_star.transpose()));
  out[1] = norm2(anti_part(J, rd.rho));
  KForm<T> w = fundamental_form(J);
  KForm<T> rs_inv = invariant_part(J, rd.rho_star);
  KForm<T> rs0 = rs_inv - (form_inner(rs_inv, w) / T(2)) * w;
  KForm<T> rho0 = rd.rho - (form_inner(rd.rho, w) / T(2)) * w;
  out[2] = norm2(rs0 - rho0);
  Mat4<T> sym = sfrac<T>(1, 2) * (rd.ric_star + rd.ric_star.transpose());
  Mat4<T> diff = sym - tensor_invariant_part(J, rd.ric) -
                 T((rd.s_star - rd.s) / T(4)) * Mat4<T>::identity();
  out[3] = frobenius2(diff);
  return out;
}

template <class T>
Mat6<T> hodge_matrix(Orientation orient) {
  Mat6<T> h = Mat6<T>::zero();
  for (int J = 0; J < 6; ++J) {
    KForm<T> e(2);
    e[J] = T(1);
    KForm<T> s = hodge(e, orient);
    for (int I = 0; I < 6; ++I) h(I, J) = s[I];
  }
  return h;
}

template <class T>
U2Curv<T> u2_decompose(const CurvOperator<T>& op, const AcsJ<T>& J, const Gauge<T>& gauge) {
  U2Curv<T> d;
  d.orient = j_orientation(J);
  Mat6<T> h = hodge_matrix<T>(d.orient);
  Mat6<T> id = Mat6<T>::identity();
  Mat6<T> pp = sfrac<T>(1, 2) * (id + h);
  Mat6<T> pm = sfrac<T>(1, 2) * (id - h);

  T tr(0);
  for (int i = 0; i < 6; ++i) tr += op(i, i);
  d.s = T(2) * tr;
  T s12 = d.s / T(12);

  d.wplus = pp * op * pp - s12 * pp;
  d.wminus = pm * op * pm - s12 * pm;

  KForm<T> w = fundamental_form(J);
  d.kappa = T(3) * form_inner(d.wplus.apply(w), w);
  d.w1plus = T(d.kappa / T(8)) * outer(w, w) - T(d.kappa / T(12)) * pp;

  KForm<T> rho_star = op.apply(w);
  d.rho_star_anti = anti_part(J, rho_star);
  d.w2plus = sym_outer(d.rho_star_anti, w);
  d.w3plus = d.wplus - d.w1plus - d.w2plus;
  d.w3a = form_inner(d.w3plus.apply(gauge.phi), gauge.phi) / T(2);
  d.w3b = form_inner(d.w3plus.apply(gauge.phi), gauge.jphi) / T(2);

  CurvTensor<T> R = tensor_from_operator(op);
  Mat4<T> ric = ricci_of(R);
  Mat4<T> ric0 = ric - T(d.s / T(4)) * Mat4<T>::identity();
  d.ric0_inv = tensor_invariant_part(J, ric0);
  d.ric0_anti = tensor_anti_part(J, ric0);
  T scale = sfrac<T>(kRicciBlockScaleNum, kRicciBlockScaleDen);
  d.ric0_inv_block = scale * operator_from_tensor(kulkarni_nomizu_g(d.ric0_inv));
  d.ric0_anti_block = scale * operator_from_tensor(kulkarni_nomizu_g(d.ric0_anti));
  return d;
}

template <class T>
T reconstruction_defect(const U2Curv<T>& d, const CurvOperator<T>& op) {
  Mat6<T> sum = T(d.s / T(12)) * Mat6<T>::identity() + d.w1plus + d.w2plus + d.w3plus +
                d.ric0_inv_block + d.ric0_anti_block + d.wminus;
  return (sum - op).norm2();
}

template <class T>
T w3_shape_defect(const U2Curv<T>& d, const Gauge<T>& g) {
  Mat6<T> shape = T(d.w3a / T(2)) * (outer(g.phi, g.phi) - outer(g.jphi, g.jphi)) +
                  T(d.w3b / T(2)) * (outer(g.phi, g.jphi) + outer(g.jphi, g.phi));
  return (d.w3plus - shape).norm2();
}

template <class T>
CurvTensor<T> apply_j_slots(const CurvTensor<T>& R, const AcsJ<T>& J, int mask) {
  const Mat4<T>& m = J.matrix();
  CurvTensor<T> cur = R;
  for (int slot = 0; slot < 4; ++slot) {
    if (!((mask >> slot) & 1)) continue;
    CurvTensor<T> next;
    std::array<int, 4> idx{};
    for (idx[0] = 0; idx[0] < kDim; ++idx[0])
      for (idx[1] = 0; idx[1] < kDim; ++idx[1])
        for (idx[2] = 0; idx[2] < kDim; ++idx[2])
          for (idx[3] = 0; idx[3] < kDim; ++idx[3]) {
            T s(0);
            std::array<int, 4> k = idx;
            for (int l = 0; l < kDim; ++l) {
              const T& c = m(l, idx[slot]);
              if (is_zero(c)) continue;
              k[slot] = l;
              s += c * cur(k[0], k[1], k[2], k[3]);
            }
            next(idx[0], idx[1], idx[2], idx[3]) = s;
          }
    cur = next;
  }
  return cur;
}

template <class T>
GrayDefects<T> gray_defects(const CurvTensor<T>& R, const AcsJ<T>& J) {
  GrayDefects<T> g;
  g.d1 = (R.r - apply_j_slots(R, J, 0b1100).r).norm2();
  g.d2 = (R.r - apply_j_slots(R, J, 0b0011).r - apply_j_slots(R, J, 0b0101).r -
          apply_j_slots(R, J, 0b1001).r)
             .norm2();
  g.d3 = (R.r - apply_j_slots(R, J, 0b1111).r).norm2();
  Mat4<T> ric = ricci_of(R);
  const Mat4<T>& m = J.matrix();
  g.d4 = frobenius2(Mat4<T>(ric - m.transpose() * ric * m));
  return g;
}

template <class T>
CurvTensor<T> project_g1(const CurvTensor<T>& R, const AcsJ<T>& J) {
  CurvOperator<T> op = operator_from_tensor(R);
  Mat6<T> q;
  for (int j = 0; j < 6; ++j) {
    KForm<T> e(2);
    e[j] = T(1);
    KForm<T> col = invariant_part(J, e);
    for (int i = 0; i < 6; ++i) q(i, j) = col[i];
  }
  Mat6<T> p = q * op * q;
  Mat6<T> h = hodge_matrix<T>(Orientation::positive());
  T b(0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) b += h(i, j) * p(j, i);
  KForm<T> w = fundamental_form(J);
  Mat6<T> hw = T(1) * outer(w, w);
  T hb(0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) hb += h(i, j) * hw(j, i);
  p = p - T(b / hb) * hw;
  return tensor_from_operator(p);
}

template <class T>
T g1_component_defect(const U2Curv<T>& d) {
  return frobenius2(d.ric0_anti) + norm2(d.rho_star_anti) + d.w3a * d.w3a + d.w3b * d.w3b +
         sq(T(d.kappa - d.s));
}

#define GRAYFORM_INSTANTIATE(T)                                                           \
  template T curvature_symmetry_defect(const CurvTensor<T>&);                             \
  template CurvOperator<T> operator_from_tensor(const CurvTensor<T>&, Tol);               \
  template CurvTensor<T> tensor_from_operator(const CurvOperator<T>&);                    \
  template CurvTensor<T> kulkarni_nomizu_g(const Mat4<T>&);                               \
  template Mat4<T> tensor_invariant_part(const AcsJ<T>&, const Mat4<T>&);                 \
  template Mat4<T> tensor_anti_part(const AcsJ<T>&, const Mat4<T>&);                      \
  template RicciData<T> ricci_extract(const CurvTensor<T>&, const AcsJ<T>&);              \
  template std::array<T, 4> ricci_identity_residuals(const RicciData<T>&, const AcsJ<T>&); \
  template Mat6<T> hodge_matrix(Orientation);                                             \
  template U2Curv<T> u2_decompose(const CurvOperator<T>&, const AcsJ<T>&, const Gauge<T>&); \
  template T reconstruction_defect(const U2Curv<T>&, const CurvOperator<T>&);             \
  template T w3_shape_defect(const U2Curv<T>&, const Gauge<T>&);                          \
  template CurvTensor<T> apply_j_slots(const CurvTensor<T>&, const AcsJ<T>&, int);        \
  template GrayDefects<T> gray_defects(const CurvTensor<T>&, const AcsJ<T>&);             \
  template CurvTensor<T> project_g1(const CurvTensor<T>&, const AcsJ<T>&);                \
  template T g1_component_defect(const U2Curv<T>&);

GRAYFORM_INSTANTIATE(Rational)
GRAYFORM_INSTANTIATE(double)

}  // namespace grayform
