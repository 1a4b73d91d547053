#include "sod/sigma.hpp"

#include "sod/rational.hpp"

namespace sod {

SigmaForm SigmaForm::of(std::vector<std::vector<BinForm>> entry) {
  if (entry.size() != 4) throw SodError("sigma form must be 4x4");
  for (const auto& row : entry)
    if (row.size() != 4) throw SodError("sigma form must be 4x4");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (entry[i][j] != entry[j][i])
        throw SodError("sigma form must be symmetric");
  if (!entry[0][0].is_zero())
    throw SodError("sigma form degree pattern: (0,0) entry must vanish");
  for (std::size_t j = 1; j < 4; ++j)
    if (!entry[0][j].is_zero() && entry[0][j].deg != 0)
      throw SodError("sigma form degree pattern: first row must be constant");
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 1; j < 4; ++j)
      if (!entry[i][j].is_zero() && entry[i][j].deg != 1)
        throw SodError("sigma form degree pattern: lower block must be linear");
  SigmaForm s;
  s.entry = std::move(entry);
  return s;
}

Mat SigmaForm::eval(const LinePoint& p) const {
  Mat m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = entry[i][j].eval(p.u, p.v);
  return m;
}

SigmaForm SigmaForm::reparametrize(const Rational& a, const Rational& b,
                                   const Rational& c,
                                   const Rational& d) const {
  if (sgn(a * d - b * c) == 0)
    throw SodError("reparametrization must be invertible");
  std::vector<std::vector<BinForm>> e(4, std::vector<BinForm>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      e[i][j] = binform_substitute(entry[i][j], a, b, c, d);
  return of(std::move(e));
}

BinForm SigmaForm::det_form() const { return form_det(entry); }

SigmaForm sigma_model(int m) {
  if (m < 1 || m > 3) throw SodError("model index must be 1, 2 or 3");
  std::vector<std::vector<BinForm>> e(4,
                                      std::vector<BinForm>(4, BinForm::zero()));
  e[0][3] = e[3][0] = BinForm::constant(rat(1, 2));
  if (m == 1) {
    e[1][1] = BinForm::monomial(1, 0, -1);
    e[2][2] = BinForm::monomial(1, 1, 1);
  } else if (m == 2) {
    e[1][2] = e[2][1] = BinForm::monomial(1, 0, rat(1, 2));
    e[2][2] = BinForm::monomial(1, 1, 1);
  } else {
    e[1][2] = e[2][1] = BinForm::monomial(1, 0, rat(1, 2));
  }
  return SigmaForm::of(std::move(e));
}

}  // namespace sod
