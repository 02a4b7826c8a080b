#include "ringforge/quaternion_check.hpp"

#include "ringforge/group.hpp"

namespace ringforge {

GaussMat2 operator*(const GaussMat2& a, const GaussMat2& b) {
  GaussMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i * 2 + j] = a.m[i * 2] * b.m[j] + a.m[i * 2 + 1] * b.m[2 + j];
  return r;
}

GaussMat2 operator-(const GaussMat2& a) {
  GaussMat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = -a.m[i];
  return r;
}

QuaternionMatrixCheck quaternion_matrix_check() {
  const GaussianInt one{1, 0}, im{0, 1}, zero{0, 0};
  const GaussMat2 E{{one, zero, zero, one}};
  const GaussMat2 I{{im, zero, zero, -im}};
  const GaussMat2 J{{zero, one, -one, zero}};
  const GaussMat2 K{{zero, im, im, zero}};

  QuaternionMatrixCheck out;
  auto add = [&out](std::string name, bool ok) {
    out.relations.push_back({std::move(name), ok});
  };
  add("I^2 = -E", I * I == -E);
  add("J^2 = -E", J * J == -E);
  add("K^2 = -E", K * K == -E);
  add("IJ = -JI = K", I * J == K && J * I == -K);
  add("JK = -KJ = I", J * K == I && K * J == -I);
  add("KI = -IK = J", K * I == J && I * K == -J);

  // the eight signed matrices, indexed like the q8 preset (a -> I, b -> J)
  const GaussMat2 model[8] = {E, I, -E, -I, J, K, -J, -K};
  const GroupPtr q8 = preset_q8();
  bool iso = true;
  for (int g = 0; g < 8 && iso; ++g)
    for (int h = 0; h < 8; ++h)
      if (model[g] * model[h] != model[q8->mul(g, h)]) {
        iso = false;
        break;
      }
  for (int g = 0; g < 8 && iso; ++g)
    for (int h = g + 1; h < 8; ++h)
      if (model[g] == model[h]) {
        iso = false;
        break;
      }
  add("eight signed matrices multiply like q8", iso);

  out.all_ok = true;
  for (const auto& r : out.relations) out.all_ok = out.all_ok && r.ok;
  return out;
}

}  // namespace ringforge
