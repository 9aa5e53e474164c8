#include "scs/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "scs/charclasses.hpp"
#include "scs/generators.hpp"
#include "scs/grassmann.hpp"
#include "scs/superconnection.hpp"
#include "scs/supermatrix.hpp"

namespace scs::acceptance {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

struct CheckOutcome {
  bool pass = true;
  std::string detail;
};

// --------------------------------------------------------------------------
// 1. Exact superalgebra identities.

GrassmannElement random_homogeneous_element(SplitMix64& rng, int q, Parity p) {
  GrassmannElement e(q);
  for (Mask m = 0; m < (Mask{1} << q); ++m) {
    if (mask_parity(m) != p) continue;
    int num = rng.uniform_int(-3, 3);
    if (num == 0) continue;
    int den = rng.uniform_int(1, 4);
    int imn = rng.uniform_int(-2, 2);
    e.set_coefficient(m, RationalComplex(Rational(num, den), Rational(imn, 3)));
  }
  return e;
}

SuperMatrix random_homogeneous_matrix(SplitMix64& rng, GradedDim dim, int q, Parity p) {
  SuperMatrix x(dim, dim, q);
  for (int i = 0; i < dim.total(); ++i)
    for (int j = 0; j < dim.total(); ++j)
      x.set(i, j, random_homogeneous_element(rng, q, x.row_parity(i) + x.col_parity(j) + p));
  return x;
}

CheckOutcome criterion_superalgebra() {
  CheckOutcome out;
  long monomial_checks = 0;
  for (int q = 0; q <= 3; ++q) {
    const RationalComplex ca(Rational(3, 7), Rational(-1, 2));
    const RationalComplex cb(Rational(-2, 5), Rational(1, 3));
    for (Mask ma = 0; ma < (Mask{1} << q); ++ma)
      for (Mask mb = 0; mb < (Mask{1} << q); ++mb) {
        GrassmannElement a = GrassmannElement::monomial(q, ma, ca);
        GrassmannElement b = GrassmannElement::monomial(q, mb, cb);
        GrassmannElement ab = a * b;
        GrassmannElement ba = b * a;
        bool both_odd = mask_parity(ma) == Parity::Odd && mask_parity(mb) == Parity::Odd;
        GrassmannElement rhs = both_odd ? -ba : ba;
        if (!(ab == rhs)) {
          out.pass = false;
          out.detail = "supercommutativity failed at q=" + std::to_string(q);
          return out;
        }
        ++monomial_checks;
      }
  }

  SplitMix64 rng(0x5c51a1u);
  long trace_checks = 0;
  const GradedDim dims[] = {{1, 1}, {2, 1}, {2, 2}, {3, 3}};
  const Parity pars[] = {Parity::Even, Parity::Odd};
  for (int q = 0; q <= 3; ++q)
    for (GradedDim d : dims)
      for (Parity px : pars)
        for (Parity py : pars)
          for (int rep = 0; rep < 3; ++rep) {
            SuperMatrix x = random_homogeneous_matrix(rng, d, q, px);
            SuperMatrix y = random_homogeneous_matrix(rng, d, q, py);
            GrassmannElement lhs = supertrace(x * y);
            GrassmannElement rhs = supertrace(y * x);
            if (px == Parity::Odd && py == Parity::Odd) rhs = -rhs;
            if (!(lhs == rhs)) {
              out.pass = false;
              out.detail = "graded trace cyclicity failed";
              return out;
            }
            if (!supertrace(supercommutator(x, y)).is_zero()) {
              out.pass = false;
              out.detail = "supertrace of a supercommutator is nonzero";
              return out;
            }
            ++trace_checks;
          }
  out.detail = std::to_string(monomial_checks) + " monomial pairs, " +
               std::to_string(trace_checks) + " matrix pairs, all exact";
  return out;
}

// --------------------------------------------------------------------------
// 2. d(d(.)) = 0 and the Leibniz rule on band-limited fields.

CheckOutcome criterion_spectral_calculus() {
  CheckOutcome out;
  const double tol = 1e-10;
  double worst_dd = 0.0, worst_leibniz = 0.0;
  struct Case {
    std::vector<int> grid;
    BandProfile profile;
  };
  const Case cases[] = {
      {{16, 16}, {3, 0.5, 2}},
      {{8, 8, 8, 8}, {1, 0.5, 2}},
  };
  SplitMix64 rng(0xd00d5eedu);
  for (const Case& c : cases) {
    TorusGrid grid(c.grid);
    GradedDim ranks{2, 1};
    std::vector<MatrixFormField> fields;
    for (int i = 0; i < 50; ++i) {
      Parity p = (i % 2 == 0) ? Parity::Even : Parity::Odd;
      fields.push_back(random_homogeneous_field(rng, grid, ranks, p, c.profile));
      worst_dd = std::max(worst_dd, field_norm(ext_deriv(ext_deriv(fields.back()))));
    }
    for (int i = 0; i + 1 < 50; i += 2) {
      const MatrixFormField& a = fields[static_cast<std::size_t>(i)];
      const MatrixFormField& b = fields[static_cast<std::size_t>(i + 1)];
      MatrixFormField lhs = ext_deriv(wedge(a, b));
      MatrixFormField rhs = wedge(ext_deriv(a), b);
      double sign = (*a.declared_parity() == Parity::Odd) ? -1.0 : 1.0;
      rhs.add_scaled(wedge(a, ext_deriv(b)), sign);
      worst_leibniz = std::max(worst_leibniz, field_norm(lhs - rhs));
    }
  }
  out.pass = worst_dd <= tol && worst_leibniz <= tol;
  out.detail = "max |d(d w)| = " + sci(worst_dd) + ", max Leibniz residual = " +
               sci(worst_leibniz) + " (tol " + sci(tol) + ")";
  return out;
}

// --------------------------------------------------------------------------
// 3. Closedness of str exp(F_t) for random admissible superconnections.

SuperConnection random_connection(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                                  int kind, double theta_amp, double u_amp) {
  MatrixFormField theta = [&] {
    switch (kind % 3) {
      case 0:
        return SuperConnection::zero_theta(grid, ranks);
      case 1:
        return constant_commuting_theta(rng, grid, ranks, 0.5, (kind / 3) % 2 == 0);
      default:
        return random_theta(rng, grid, ranks, BandProfile{1, theta_amp, 2});
    }
  }();
  Morphism mor = random_morphism(rng, grid, ranks, BandProfile{1, u_amp, 2});
  return SuperConnection(grid, ranks, std::move(theta), build_L_from_morphism(mor), 1.0);
}

CheckOutcome criterion_closedness() {
  CheckOutcome out;
  const double tol = 1e-8;
  double worst = 0.0;
  SplitMix64 rng(0xc105edu);
  {
    TorusGrid grid({24, 24});
    GradedDim ranks{1, 1};
    for (int i = 0; i < 12; ++i) {
      GradedDim rk = (i % 4 == 3) ? GradedDim{2, 1} : ranks;
      SuperConnection c = random_connection(rng, grid, rk, i, 0.10, 0.15);
      worst = std::max(worst, check_closed(c));
    }
  }
  {
    TorusGrid grid({12, 12, 12, 12});
    GradedDim ranks{1, 1};
    for (int i = 0; i < 8; ++i) {
      SuperConnection c = random_connection(rng, grid, ranks, i, 0.02, 0.05);
      worst = std::max(worst, check_closed(c));
    }
  }
  out.pass = worst <= tol;
  out.detail = "max |d str exp(F)| = " + sci(worst) + " over 20 connections (tol " + sci(tol) +
               ")";
  return out;
}

// --------------------------------------------------------------------------
// 4. Character pairings: degree 0 exact, higher degrees vanish, t-sweep.

CheckOutcome criterion_pairings() {
  CheckOutcome out;
  const double tol = 1e-6;
  const std::vector<double> sweep{0.0, 0.5, 1.0, 2.0};
  double worst_dev = 0.0, worst_pairing = 0.0;
  SplitMix64 rng(0x9a1215u);
  TorusGrid grid({16, 16});
  const GradedDim rank_list[] = {{1, 1}, {2, 1}, {2, 2}};
  int instance = 0;
  for (GradedDim ranks : rank_list) {
    MatrixFormField theta =
        (instance == 0) ? SuperConnection::zero_theta(grid, ranks)
                        : constant_commuting_theta(rng, grid, ranks, 0.4, true);
    Morphism mor = random_morphism(rng, grid, ranks, BandProfile{1, 0.3, 2});
    SuperConnection c(grid, ranks, std::move(theta), build_L_from_morphism(mor), 0.0);
    FamilyCheckReport report = family_connection_check(c, sweep);
    worst_dev = std::max(worst_dev, report.max_deviation);
    const double expected = static_cast<double>(ranks.even - ranks.odd);
    const cplx at_zero = report.pairings.front().at(0);
    if (at_zero.real() != expected || at_zero.imag() != 0.0) {
      out.pass = false;
      out.detail = "degree-0 pairing at t=0 is not exactly r-s";
      return out;
    }
    for (const auto& per_t : report.pairings)
      for (const auto& [mask, value] : per_t)
        if (mask != 0) worst_pairing = std::max(worst_pairing, std::abs(value));
    ++instance;
  }
  out.pass = worst_dev <= tol && worst_pairing <= tol;
  out.detail = "degree-0 at t=0 exact; max positive-degree pairing = " + sci(worst_pairing) +
               ", max t-sweep deviation = " + sci(worst_dev) + " (tol " + sci(tol) + ")";
  return out;
}

// --------------------------------------------------------------------------
// 5. Transgression agrees with the holonomy determinant route.

CheckOutcome criterion_holonomy_duality() {
  CheckOutcome out;
  const double tol = 1e-8;
  double worst = 0.0;
  SplitMix64 rng(0x401a7e5u);
  TorusGrid grid({8, 8, 8});
  GradedDim ranks{2, 1};
  for (int i = 0; i < 20; ++i) {
    MatrixFormField theta = constant_commuting_theta(rng, grid, ranks, 1.0, i % 2 == 0);
    SuperConnection c(grid, ranks, std::move(theta), SuperConnection::zero_endo(grid, ranks),
                      1.0);
    for (int axis = 0; axis < grid.dim(); ++axis) {
      auto [t0, t1] = transgress_c1(c, axis);
      BlockPair hol = holonomy_of_flat(c, axis);
      // -(1/2*pi*i) log det = (i/2*pi) log det.
      const cplx factor{0.0, 1.0 / (2.0 * 3.14159265358979323846)};
      ComplexModZ h0 = reduce_mod_z(factor * std::log(determinant(hol.block0)));
      ComplexModZ h1 = reduce_mod_z(factor * std::log(determinant(hol.block1)));
      worst = std::max(worst, mod_z_distance(t0, h0));
      worst = std::max(worst, mod_z_distance(t1, h1));
    }
  }
  out.pass = worst <= tol;
  out.detail = "max mod-Z mismatch = " + sci(worst) + " over 20 connections x 3 axes x 2 blocks "
               "(tol " + sci(tol) + ")";
  return out;
}

// --------------------------------------------------------------------------
// 6. Exact Segre inversion and difference classes.

ExactRingElement random_exact_element(SplitMix64& rng, int n, int degree) {
  ExactRingElement e(n);
  const Mask full = (Mask{1} << n) - 1;
  for (Mask m = 0; m <= full; ++m) {
    if (mask_degree(m) != degree) continue;
    int num = rng.uniform_int(-4, 4);
    if (num == 0) continue;
    e.set_coefficient(m, RationalComplex(Rational(num, rng.uniform_int(1, 5)),
                                         Rational(rng.uniform_int(-2, 2), 3)));
  }
  return e;
}

CheckOutcome criterion_segre() {
  CheckOutcome out;
  SplitMix64 rng(0x5e97eu);
  const int n = 6;
  for (int rep = 0; rep < 5; ++rep) {
    TotalClassExact c(n, 3);
    c.set_entry(1, random_exact_element(rng, n, 2));
    c.set_entry(2, random_exact_element(rng, n, 4));
    c.set_entry(3, random_exact_element(rng, n, 6));
    TotalClassExact s = segre_inverse(c);

    // c . s == 1 exactly through the truncation degree.
    TotalClassExact prod = total_mul(c, s);
    for (int k = 1; k <= 3; ++k)
      if (!prod.entry(k).is_zero()) {
        out.pass = false;
        out.detail = "c . segre_inverse(c) has a nonzero entry in degree " + std::to_string(k);
        return out;
      }
    // difference_class(c, c) == 1.
    TotalClassExact diff = difference_class(c, c);
    for (int k = 1; k <= 3; ++k)
      if (!diff.entry(k).is_zero()) {
        out.pass = false;
        out.detail = "difference_class(c, c) != 1";
        return out;
      }
    // s2 = c1^2 - c2, and the brute-force geometric-series oracle
    // sum_k (1 - c)^k agrees entrywise.
    ExactRingElement s2 = ring_mul(c.entry(1), c.entry(1)) - c.entry(2);
    if (!(s.entry(2) == s2)) {
      out.pass = false;
      out.detail = "s2 != c1^2 - c2";
      return out;
    }
    std::vector<ExactRingElement> u{c.entry(1), c.entry(2), c.entry(3)};  // c - 1
    std::vector<ExactRingElement> oracle(4, ExactRingElement(n));
    oracle[0] = ExactRingElement::monomial(n, 0, RationalComplex(1));
    std::vector<ExactRingElement> power = oracle;  // (-(c-1))^k, k = 0
    for (int k = 1; k <= 3; ++k) {
      std::vector<ExactRingElement> next(4, ExactRingElement(n));
      for (int d = 1; d <= 3; ++d) {
        ExactRingElement acc(n);
        for (int j = 1; j <= d; ++j) acc += ring_mul(-u[static_cast<std::size_t>(j - 1)],
                                                     power[static_cast<std::size_t>(d - j)]);
        next[static_cast<std::size_t>(d)] = std::move(acc);
      }
      power = std::move(next);
      for (int d = 1; d <= 3; ++d)
        oracle[static_cast<std::size_t>(d)] += power[static_cast<std::size_t>(d)];
    }
    for (int k = 1; k <= 3; ++k)
      if (!(oracle[static_cast<std::size_t>(k)] == s.entry(k))) {
        out.pass = false;
        out.detail = "brute-force series inversion oracle disagrees in degree " +
                     std::to_string(k);
        return out;
      }
  }
  out.detail = "5 random total classes: c.s = 1, difference_class(c,c) = 1, s2 = c1^2 - c2, "
               "oracle agreement, all exact";
  return out;
}

// --------------------------------------------------------------------------
// 7. Morphism classes: circle line bundles and vanishing on T^3.

CheckOutcome criterion_morphism_classes() {
  CheckOutcome out;
  const double tol_class = 1e-9;
  const double tol_dual = 1e-8;
  const double a = 0.3721, b = 0.8153;
  const double two_pi = 2.0 * 3.14159265358979323846;

  FlatBundleClassData b0{1, 1, {CMatrix(1, 1)}, 1e-9};
  FlatBundleClassData b1{1, 1, {CMatrix(1, 1)}, 1e-9};
  b0.holonomy[0](0, 0) = std::polar(1.0, two_pi * a);
  b1.holonomy[0](0, 0) = std::polar(1.0, two_pi * b);
  TotalCharacterClass cls = cs_of_morphism(MorphismMeta{1, 1}, b0, b1, 1);
  ComplexModZ got = reduce_mod_z(cls.entry(1).value.coefficient(1));
  ComplexModZ want = reduce_mod_z(cplx{b - a, 0.0});
  double err_class = mod_z_distance(got, want);

  // Dual path: transgressions of connections with those holonomies.
  TorusGrid circle({8});
  GradedDim line{1, 0};
  CMatrix m0(1, 1), m1(1, 1);
  m0(0, 0) = cplx{0.0, -two_pi * a};
  m1(0, 0) = cplx{0.0, -two_pi * b};
  SuperConnection ca(circle, line, constant_theta_from(circle, line, {m0}),
                     SuperConnection::zero_endo(circle, line), 1.0);
  SuperConnection cb(circle, line, constant_theta_from(circle, line, {m1}),
                     SuperConnection::zero_endo(circle, line), 1.0);
  ComplexModZ ta = transgress_c1(ca, 0).first;
  ComplexModZ tb = transgress_c1(cb, 0).first;
  ComplexModZ diff = reduce_mod_z(cplx{ta.re01 - tb.re01, ta.im - tb.im});
  double err_dual = mod_z_distance(got, diff);

  // T^3, rank 2, diagonalizable commuting holonomies: classes vanish in
  // degree >= 2.
  SplitMix64 rng(0x30621u);
  double worst_high = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    FlatBundleClassData d0{3, 2, {}, 1e-9};
    FlatBundleClassData d1{3, 2, {}, 1e-9};
    CMatrix basis = CMatrix::identity(2);
    for (auto& v : basis.a) v += rng.complex_in_disk(0.3);
    CMatrix basis_inv = inverse(basis);
    for (int k = 0; k < 3; ++k) {
      CMatrix diag0(2, 2), diag1(2, 2);
      for (int j = 0; j < 2; ++j) {
        diag0(j, j) = std::polar(1.0, two_pi * rng.uniform());
        diag1(j, j) = std::polar(1.0, two_pi * rng.uniform());
      }
      d0.holonomy.push_back(basis * diag0 * basis_inv);
      d1.holonomy.push_back(diag1);
    }
    TotalCharacterClass mc = cs_of_morphism(MorphismMeta{2, 2}, d0, d1, 2);
    worst_high = std::max(worst_high,
                          mod_z_element_distance(mc.entry(2).value, RingElement(3)));
  }

  out.pass = err_class <= tol_class && err_dual <= tol_dual && worst_high <= tol_class;
  out.detail = "c1(u) vs (b-a): " + sci(err_class) + "; vs transgression difference: " +
               sci(err_dual) + "; max |c_n(u)| for n>=2 on T^3: " + sci(worst_high);
  return out;
}

// --------------------------------------------------------------------------
// 8. Whitney additivity over direct sums.

CheckOutcome criterion_whitney() {
  CheckOutcome out;
  const double tol = 1e-9;
  double worst = 0.0;
  SplitMix64 rng(0x8d17a9u);
  const double two_pi = 2.0 * 3.14159265358979323846;
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3;
    const int r0 = 1 + rep % 2, r1 = 1 + (rep / 2) % 2;
    FlatBundleClassData ba{n, r0, {}, 1e-9};
    FlatBundleClassData bb{n, r1, {}, 1e-9};
    FlatBundleClassData sum{n, r0 + r1, {}, 1e-9};
    for (int k = 0; k < n; ++k) {
      CMatrix ha(r0, r0), hb(r1, r1), hs(r0 + r1, r0 + r1);
      for (int j = 0; j < r0; ++j) {
        ha(j, j) = std::polar(rng.uniform(0.8, 1.2), two_pi * rng.uniform());
        hs(j, j) = ha(j, j);
      }
      for (int j = 0; j < r1; ++j) {
        hb(j, j) = std::polar(rng.uniform(0.8, 1.2), two_pi * rng.uniform());
        hs(r0 + j, r0 + j) = hb(j, j);
      }
      ba.holonomy.push_back(std::move(ha));
      bb.holonomy.push_back(std::move(hb));
      sum.holonomy.push_back(std::move(hs));
    }
    const int trunc = 2;
    TotalCharacterClass whole = cs_classes_of_flat(sum, trunc);
    TotalCharacterClass parts =
        total_mul(cs_classes_of_flat(ba, trunc), cs_classes_of_flat(bb, trunc));
    for (int k = 1; k <= trunc; ++k)
      worst = std::max(worst, mod_z_element_distance(whole.entry(k).value,
                                                     parts.entry(k).value));
  }
  out.pass = worst <= tol;
  out.detail = "max mod-Z mismatch of total classes = " + sci(worst) +
               " over 10 direct sums (tol " + sci(tol) + ")";
  return out;
}

struct CriterionSpec {
  int id;
  const char* name;
  double runtime_limit;  // seconds; 0 = none
  std::function<CheckOutcome()> run;
};

}  // namespace

std::vector<CriterionResult> run_all(const std::string& filter) {
  const CriterionSpec specs[] = {
      {1, "superalgebra identities (exact)", 10.0, criterion_superalgebra},
      {2, "spectral calculus: d.d = 0 and Leibniz", 60.0, criterion_spectral_calculus},
      {3, "closedness of the character form", 300.0, criterion_closedness},
      {4, "character pairings and t-independence", 0.0, criterion_pairings},
      {5, "holonomy/transgression duality", 0.0, criterion_holonomy_duality},
      {6, "Segre inversion and difference class (exact)", 0.0, criterion_segre},
      {7, "morphism classes on the circle and T^3", 0.0, criterion_morphism_classes},
      {8, "Whitney additivity of flat classes", 0.0, criterion_whitney},
  };
  std::vector<CriterionResult> results;
  for (const CriterionSpec& spec : specs) {
    if (!filter.empty() && std::string(spec.name).find(filter) == std::string::npos) continue;
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome outcome = spec.run();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = outcome.pass;
    r.detail = outcome.detail;
    if (spec.runtime_limit > 0.0 && r.seconds > spec.runtime_limit) {
      r.pass = false;
      r.detail += "; runtime limit exceeded";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const CriterionResult& r : results)
    os << "criterion " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " ("
       << r.detail << ")\n";
  os << (all_passed(results) ? "selftest: all criteria passed\n"
                             : "selftest: FAILURES present\n");
  return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  if (results.empty()) return false;
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace scs::acceptance
