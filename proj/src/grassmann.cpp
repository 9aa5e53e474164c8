#include "scs/grassmann.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <vector>

#include "scs/errors.hpp"

namespace scs {

namespace {
std::atomic<int> g_max_generators{8};
}

int max_generators() { return g_max_generators.load(); }

void set_max_generators(int q) {
  if (q < 0 || q > 30) throw InputError("generator limit out of range");
  g_max_generators.store(q);
}

bool axes_to_mask(const std::vector<int>& axes, int n, Mask* out) {
  Mask m = 0;
  int prev = 0;
  for (int a : axes) {
    if (a <= prev || a > n) return false;
    m |= Mask{1} << (a - 1);
    prev = a;
  }
  *out = m;
  return true;
}

std::string mask_label(Mask m) {
  if (m == 0) return "1";
  std::string s;
  for (int a : mask_to_axes(m)) {
    if (!s.empty()) s += "^";
    s += "x" + std::to_string(a);
  }
  return s;
}

GrassmannElement::GrassmannElement(int generator_count) : q_(generator_count) {
  if (q_ < 0 || q_ > max_generators())
    throw InputError("generator count " + std::to_string(q_) + " exceeds limit " +
                     std::to_string(max_generators()));
}

GrassmannElement GrassmannElement::scalar(int q, RationalComplex c) {
  GrassmannElement e(q);
  e.set_coefficient(0, std::move(c));
  return e;
}

GrassmannElement GrassmannElement::generator(int q, int index) {
  if (index < 1 || index > q) throw InputError("generator index out of range");
  GrassmannElement e(q);
  e.set_coefficient(Mask{1} << (index - 1), RationalComplex(1));
  return e;
}

GrassmannElement GrassmannElement::monomial(int q, Mask m, RationalComplex c) {
  if (q < 32 && (m >> q) != 0) throw InputError("monomial uses generators beyond q");
  GrassmannElement e(q);
  e.set_coefficient(m, std::move(c));
  return e;
}

RationalComplex GrassmannElement::coefficient(Mask m) const {
  auto it = coeff_.find(m);
  return it == coeff_.end() ? RationalComplex() : it->second;
}

void GrassmannElement::set_coefficient(Mask m, RationalComplex c) {
  if (c.is_zero())
    coeff_.erase(m);
  else
    coeff_[m] = std::move(c);
}

std::optional<Parity> GrassmannElement::parity() const {
  if (coeff_.empty()) return Parity::Even;
  std::optional<Parity> p;
  for (const auto& [m, c] : coeff_) {
    Parity mp = mask_parity(m);
    if (!p)
      p = mp;
    else if (*p != mp)
      return std::nullopt;
  }
  return p;
}

bool GrassmannElement::has_parity(Parity p) const {
  for (const auto& [m, c] : coeff_)
    if (mask_parity(m) != p) return false;
  return true;
}

GrassmannElement GrassmannElement::parity_part(Parity p) const {
  GrassmannElement out(q_);
  for (const auto& [m, c] : coeff_)
    if (mask_parity(m) == p) out.coeff_[m] = c;
  return out;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& b) {
  if (q_ != b.q_) throw DimensionError("grassmann add: generator count mismatch");
  for (const auto& [m, c] : b.coeff_) set_coefficient(m, coefficient(m) + c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& b) {
  if (q_ != b.q_) throw DimensionError("grassmann sub: generator count mismatch");
  for (const auto& [m, c] : b.coeff_) set_coefficient(m, coefficient(m) - c);
  return *this;
}

GrassmannElement operator-(const GrassmannElement& a) {
  GrassmannElement out(a.generator_count());
  for (const auto& [m, c] : a.coefficients()) out.set_coefficient(m, -c);
  return out;
}

bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
  return a.q_ == b.q_ && a.coeff_ == b.coeff_;
}

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.generator_count() != b.generator_count())
    throw DimensionError("grassmann mul: generator count mismatch");
  GrassmannElement out(a.generator_count());
  for (const auto& [ma, ca] : a.coefficients()) {
    for (const auto& [mb, cb] : b.coefficients()) {
      if ((ma & mb) != 0) continue;  // repeated generator kills the term
      RationalComplex term = ca * cb;
      if (merge_sign(ma, mb) < 0) term = -term;
      out.set_coefficient(ma | mb, out.coefficient(ma | mb) + term);
    }
  }
  return out;
}

GrassmannElement operator*(const RationalComplex& c, const GrassmannElement& a) {
  GrassmannElement out(a.generator_count());
  for (const auto& [m, v] : a.coefficients()) out.set_coefficient(m, c * v);
  return out;
}

RationalComplex body(const GrassmannElement& a) { return a.coefficient(0); }

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

bool needs_parens(const Rational& r) { return denominator(r) != 1; }

}  // namespace

std::string to_string(const RationalComplex& c) {
  if (c.im == 0) return rational_str(c.re);
  std::string im_part;
  if (c.im == 1)
    im_part = "i";
  else if (c.im == -1)
    im_part = "-i";
  else if (needs_parens(c.im))
    im_part = "(" + rational_str(c.im) + ")i";
  else
    im_part = rational_str(c.im) + "i";
  if (c.re == 0) return im_part;
  std::string re_part = needs_parens(c.re) ? "(" + rational_str(c.re) + ")" : rational_str(c.re);
  if (!im_part.empty() && im_part[0] != '-') return re_part + "+" + im_part;
  return re_part + im_part;
}

std::string RationalComplex::str() const { return to_string(*this); }

std::string GrassmannElement::str() const {
  if (coeff_.empty()) return "0";
  // Sort by (degree, mask) so low-degree terms print first.
  std::vector<std::pair<Mask, RationalComplex>> terms(coeff_.begin(), coeff_.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int dx = mask_degree(x.first), dy = mask_degree(y.first);
    return dx != dy ? dx < dy : x.first < y.first;
  });
  std::string s;
  for (const auto& [m, c] : terms) {
    std::string mono;
    for (int a : mask_to_axes(m)) {
      if (!mono.empty()) mono += "^";
      mono += "t" + std::to_string(a);
    }
    std::string cs = to_string(c);
    std::string term;
    if (mono.empty())
      term = cs;
    else if (c == RationalComplex(1))
      term = mono;
    else if (c == RationalComplex(-1))
      term = "-" + mono;
    else
      term = cs + "*" + mono;
    if (s.empty())
      s = term;
    else if (!term.empty() && term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

}  // namespace scs
