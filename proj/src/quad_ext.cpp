#include "dickson4/quad_ext.hpp"

#include <algorithm>
#include <stdexcept>

#include "dickson4/errors.hpp"
#include "dickson4/fp_poly.hpp"

namespace dickson4 {

QuadExtCtx::QuadExtCtx(FieldCtx base) : base_(std::move(base)), nu_(base_.first_nonsquare()) {}

QuadExtCtx::QuadExtCtx(FieldCtx base, const FqElem& nu) : base_(std::move(base)), nu_(nu) {
  if (base_.is_square(nu_)) throw InvalidModulus("u^2 - " + base_.format(nu_) + " is reducible: nu is a square");
}

FqElem QuadExtCtx::project(const QuadElem& z) const {
  if (!is_embedded(z))
    throw InternalInconsistency("value [" + base_.format(z.re) + "] + [" + base_.format(z.im) +
                                "]u is not in the base field");
  return z.re;
}

QuadElem QuadExtCtx::add(const QuadElem& a, const QuadElem& b) const {
  return {base_.add(a.re, b.re), base_.add(a.im, b.im)};
}

QuadElem QuadExtCtx::sub(const QuadElem& a, const QuadElem& b) const {
  return {base_.sub(a.re, b.re), base_.sub(a.im, b.im)};
}

QuadElem QuadExtCtx::neg(const QuadElem& a) const { return {base_.neg(a.re), base_.neg(a.im)}; }

QuadElem QuadExtCtx::mul(const QuadElem& a, const QuadElem& b) const {
  const auto& f = base_;
  const auto rr = f.mul(a.re, b.re);
  const auto ii = f.mul(a.im, b.im);
  const auto ri = f.add(f.mul(a.re, b.im), f.mul(a.im, b.re));
  return {f.add(rr, f.mul(nu_, ii)), ri};
}

QuadElem QuadExtCtx::inv(const QuadElem& a) const {
  const auto& f = base_;
  // (re + im u)(re - im u) = re^2 - nu im^2, a norm in F_q
  const auto norm = f.sub(f.mul(a.re, a.re), f.mul(nu_, f.mul(a.im, a.im)));
  if (norm.is_zero()) throw std::domain_error("inverse of zero in F_{q^2}");
  const auto ninv = f.inv(norm);
  return {f.mul(a.re, ninv), f.neg(f.mul(a.im, ninv))};
}

QuadElem QuadExtCtx::pow(const QuadElem& a, std::uint64_t m) const {
  auto result = one();
  auto base = a;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

QuadElem QuadExtCtx::pow(const QuadElem& a, const BigInt& m) const {
  if (m < 0) throw std::domain_error("negative exponent");
  if (m == 0) return one();
  auto result = one();
  const auto top = boost::multiprecision::msb(m);
  for (auto bit = top + 1; bit-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(m, bit)) result = mul(result, a);
  }
  return result;
}

QuadElem QuadExtCtx::frobenius(const QuadElem& z) const { return pow(z, base_.order()); }

std::uint64_t QuadExtCtx::index_of(const QuadElem& z) const {
  return base_.index_of(z.re) + base_.order() * base_.index_of(z.im);
}

QuadElem QuadExtCtx::element(std::uint64_t index) const {
  const auto q = base_.order();
  return {base_.element(index % q), base_.element(index / q)};
}

std::vector<QuadElem> QuadExtCtx::elements() const {
  std::vector<QuadElem> out;
  out.reserve(order());
  for (std::uint64_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

QuadElem QuadExtCtx::sqrt_of_base(const FqElem& x) const {
  if (auto r = base_.sqrt_opt(x)) return embed(*r);
  // x = nu * w^2 with w in F_q, so sqrt(x) = w u
  const auto w = base_.sqrt_opt(base_.div(x, nu_));
  if (!w) throw InternalInconsistency("x/nu is not a square although x and nu are non-squares");
  return {base_.zero(), *w};
}

QuadElem QuadExtCtx::parametrize_y(const FqElem& x) const {
  const auto& f = base_;
  const auto disc = f.sub(f.one(), f.mul(f.from_int(4), x));
  const auto root = sqrt_of_base(disc);
  return mul(add(one(), root), embed(f.half()));
}

namespace {

/// Coordinates of z as an F_p vector of length 2e: re coefficients then im.
std::vector<std::uint64_t> coords(const QuadElem& z) {
  std::vector<std::uint64_t> v;
  for (auto c : z.re.coeffs()) v.push_back(c);
  for (auto c : z.im.coeffs()) v.push_back(c);
  return v;
}

}  // namespace

std::vector<QuadElem> QuadExtCtx::build_V() const {
  const auto& f = base_;
  const Zp zp{f.p()};
  const unsigned e = f.degree();
  const unsigned dim = 2 * e;

  // columns: (Frob + I) applied to the F_p basis vectors
  std::vector<std::vector<std::uint64_t>> a(dim, std::vector<std::uint64_t>(dim + 1, 0));
  for (unsigned j = 0; j < dim; ++j) {
    std::vector<std::int64_t> unit(e, 0);
    unit[j % e] = 1;
    const auto basis_coord = f.from_coeffs(unit);
    const QuadElem b = j < e ? QuadElem{basis_coord, f.zero()} : QuadElem{f.zero(), basis_coord};
    const auto col = coords(add(frobenius(b), b));
    for (unsigned i = 0; i < dim; ++i) a[i][j] = col[i];
  }
  const auto rhs = coords(one());
  for (unsigned i = 0; i < dim; ++i) a[i][dim] = rhs[i];

  // reduced row echelon form
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(dim, false);
  unsigned row = 0;
  for (unsigned col = 0; col < dim && row < dim; ++col) {
    unsigned sel = row;
    while (sel < dim && a[sel][col] == 0) ++sel;
    if (sel == dim) continue;
    std::swap(a[sel], a[row]);
    const auto inv = zp.inv(a[row][col]);
    for (auto& v : a[row]) v = zp.mul(v, inv);
    for (unsigned r = 0; r < dim; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const auto factor = a[r][col];
      for (unsigned c = 0; c <= dim; ++c) a[r][c] = zp.sub(a[r][c], zp.mul(factor, a[row][c]));
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  for (unsigned r = row; r < dim; ++r)
    if (a[r][dim] != 0) throw InternalInconsistency("V is empty: Frobenius system is inconsistent");

  std::vector<unsigned> free_cols;
  for (unsigned c = 0; c < dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < free_cols.size(); ++i) count *= f.p();

  std::vector<QuadElem> out;
  out.reserve(count);
  std::vector<std::uint64_t> x(dim);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::fill(x.begin(), x.end(), 0);
    auto rest = idx;
    for (auto c : free_cols) {
      x[c] = rest % f.p();
      rest /= f.p();
    }
    for (unsigned r = 0; r < row; ++r) {
      std::uint64_t v = a[r][dim];
      for (auto c : free_cols) v = zp.sub(v, zp.mul(a[r][c], x[c]));
      x[pivot_col_of_row[r]] = v;
    }
    std::vector<std::int64_t> re(x.begin(), x.begin() + e);
    std::vector<std::int64_t> im(x.begin() + e, x.end());
    out.push_back({f.from_coeffs(re), f.from_coeffs(im)});
  }
  std::sort(out.begin(), out.end(),
            [this](const QuadElem& l, const QuadElem& r) { return index_of(l) < index_of(r); });
  return out;
}

std::vector<QuadElem> QuadExtCtx::build_V_by_filter() const {
  std::vector<QuadElem> out;
  for (std::uint64_t i = 0; i < order(); ++i) {
    const auto z = element(i);
    if (frobenius(z) == sub(one(), z)) out.push_back(z);
  }
  return out;
}

}  // namespace dickson4
