#include "ghostw/structure.hpp"

#include <map>
#include <random>
#include <sstream>

namespace ghostw {

namespace {

template <typename Fn>
bool for_each_triple(const OspAlgebra& g, const TripleSampling& s, std::size_t& visited,
                     Fn&& fn) {
  const std::size_t d = g.dim();
  visited = 0;
  if (d * d * d <= s.exhaustive_limit) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < d; ++c) {
          ++visited;
          if (!fn(a, b, c)) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(s.seed);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (std::size_t i = 0; i < s.samples; ++i) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    const std::size_t c = pick(rng);
    ++visited;
    if (!fn(a, b, c)) return false;
  }
  return true;
}

std::string triple_witness(const OspAlgebra& g, std::size_t a, std::size_t b, std::size_t c) {
  return g.basis(a).label + ", " + g.basis(b).label + ", " + g.basis(c).label;
}

LieElement add(const LieElement& x, const LieElement& y, int sign = 1) {
  LieElement r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += sign * y.coords[i];
  return r;
}

// Basis indices grouped by doubled degree.
std::map<int, std::vector<std::size_t>> degree_spaces(const OspAlgebra& g) {
  std::map<int, std::vector<std::size_t>> spaces;
  for (std::size_t i = 0; i < g.dim(); ++i) spaces[g.basis(i).doubled_degree].push_back(i);
  return spaces;
}

}  // namespace

CheckResult check_super_jacobi(const OspAlgebra& g, const TripleSampling& sampling) {
  CheckResult r{"super_jacobi", true, {}};
  std::size_t visited = 0;
  r.passed = for_each_triple(g, sampling, visited, [&](std::size_t a, std::size_t b,
                                                       std::size_t c) {
    const LieElement x = g.element(a), y = g.element(b), z = g.element(c);
    const LieElement lhs = g.bracket(x, g.bracket(y, z));
    LieElement rhs = g.bracket(g.bracket(x, y), z);
    const int s = sign_of_swap(*x.parity, *y.parity);
    rhs = add(rhs, g.bracket(y, g.bracket(x, z)), s);
    if (lhs == rhs) return true;
    r.witness = triple_witness(g, a, b, c);
    return false;
  });
  if (r.passed) r.witness = std::to_string(visited) + " triples";
  return r;
}

CheckResult check_form_invariance(const OspAlgebra& g, const TripleSampling& sampling) {
  CheckResult r{"form_invariance", true, {}};
  std::size_t visited = 0;
  r.passed = for_each_triple(g, sampling, visited, [&](std::size_t a, std::size_t b,
                                                       std::size_t c) {
    const LieElement x = g.element(a), y = g.element(b), z = g.element(c);
    if (g.form(g.bracket(x, y), z) == g.form(x, g.bracket(y, z))) return true;
    r.witness = triple_witness(g, a, b, c);
    return false;
  });
  if (r.passed) r.witness = std::to_string(visited) + " triples";
  return r;
}

CheckResult check_form_supersymmetric(const OspAlgebra& g) {
  for (std::size_t a = 0; a < g.dim(); ++a) {
    for (std::size_t b = 0; b < g.dim(); ++b) {
      const Parity pa = g.basis(a).parity, pb = g.basis(b).parity;
      const Rational& ab = g.form_basis(a, b);
      const bool even_ok = pa == pb || ab == 0;
      const bool sym_ok = ab == sign_of_swap(pa, pb) * g.form_basis(b, a);
      if (!even_ok || !sym_ok) {
        return {"form_supersymmetric", false, g.basis(a).label + ", " + g.basis(b).label};
      }
    }
  }
  return {"form_supersymmetric", true, {}};
}

std::vector<CheckResult> check_good_grading(const OspAlgebra& g) {
  std::vector<CheckResult> out;
  const auto spaces = degree_spaces(g);

  // (1) [g_i, g_j] in g_{i+j}.
  {
    CheckResult r{"grading_axiom_1_bracket_additive", true, {}};
    for (std::size_t a = 0; a < g.dim() && r.passed; ++a) {
      for (std::size_t b = 0; b < g.dim() && r.passed; ++b) {
        const int want = g.basis(a).doubled_degree + g.basis(b).doubled_degree;
        for (const auto& [k, c] : g.bracket_basis(a, b)) {
          if (g.basis(k).doubled_degree != want) {
            r.passed = false;
            r.witness = g.basis(a).label + ", " + g.basis(b).label;
          }
        }
      }
    }
    out.push_back(r);
  }

  // (2) f in g_{-1}, even.
  const LieElement f = g.principal_nilpotent();
  out.push_back({"grading_axiom_2_f_in_g_minus_1",
                 f.doubled_degree == -2 && f.parity == Parity::even && !f.is_zero(),
                 {}});

  // (3) ad f : g_j -> g_{j-1} injective for j >= 1/2, surjective for j <= 1/2.
  {
    CheckResult r{"grading_axiom_3_ad_f", true, {}};
    for (const auto& [deg, idx] : spaces) {
      std::vector<RationalVector> images;
      for (std::size_t i : idx) images.push_back(g.bracket(f, g.element(i)).coords);
      const std::size_t rk = rank(images);
      const auto target = spaces.find(deg - 2);
      const std::size_t target_dim = target == spaces.end() ? 0 : target->second.size();
      if (deg >= 1 && rk != idx.size()) {
        r.passed = false;
        r.witness = "not injective at doubled degree " + std::to_string(deg);
      }
      if (deg <= 1 && rk != target_dim) {
        r.passed = false;
        r.witness = "not surjective at doubled degree " + std::to_string(deg);
      }
    }
    out.push_back(r);
  }

  // (4) (g_i | g_j) = 0 unless i + j = 0.
  {
    CheckResult r{"grading_axiom_4_form_pairing", true, {}};
    for (std::size_t a = 0; a < g.dim(); ++a) {
      for (std::size_t b = 0; b < g.dim(); ++b) {
        if (g.basis(a).doubled_degree + g.basis(b).doubled_degree != 0 &&
            g.form_basis(a, b) != 0) {
          r.passed = false;
          r.witness = g.basis(a).label + ", " + g.basis(b).label;
        }
      }
    }
    out.push_back(r);
  }

  // (5) dim g^f = dim g_0 + dim g_{1/2}.
  {
    const std::size_t gf = centralizer_dimension(g);
    const std::size_t g0 = spaces.contains(0) ? spaces.at(0).size() : 0;
    const std::size_t ghalf = spaces.contains(1) ? spaces.at(1).size() : 0;
    std::ostringstream w;
    w << "dim g^f = " << gf << ", dim g_0 = " << g0 << ", dim g_1/2 = " << ghalf;
    out.push_back({"grading_axiom_5_centralizer_dimension", gf == g0 + ghalf, w.str()});
  }
  return out;
}

std::size_t centralizer_dimension(const OspAlgebra& g) {
  const LieElement f = g.principal_nilpotent();
  std::vector<RationalVector> images;
  for (std::size_t i = 0; i < g.dim(); ++i) images.push_back(g.bracket(f, g.element(i)).coords);
  return g.dim() - rank(images);
}

CheckResult check_chi_nondegenerate(const OspAlgebra& g) {
  std::vector<std::size_t> half;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.basis(i).doubled_degree == 1) half.push_back(i);
  }
  std::vector<RationalVector> gram;
  for (std::size_t a : half) {
    RationalVector row;
    for (std::size_t b : half) row.push_back(g.chi(g.bracket(g.element(a), g.element(b))));
    gram.push_back(std::move(row));
  }
  const bool ok = !half.empty() && rank(gram) == half.size();
  std::string witness = "dim g_1/2 = " + std::to_string(half.size());
  if (half.size() == 1) witness += ", chi([u,u]) = " + to_string(gram[0][0]);
  return {"chi_nondegenerate_on_g_half", ok, witness};
}

CheckResult check_chevalley_generation(const OspAlgebra& g) {
  std::vector<LieElement> span;
  std::vector<RationalVector> coords;
  for (std::size_t i : g.chevalley_generators()) {
    span.push_back(g.element(i));
    coords.push_back(span.back().coords);
  }
  // Iterated brackets with the generators; every element stays homogeneous.
  for (std::size_t next = 0; next < span.size() && span.size() < g.dim(); ++next) {
    for (std::size_t i : g.chevalley_generators()) {
      const LieElement y = g.bracket(g.element(i), span[next]);
      if (y.is_zero() || in_span(y.coords, coords).member) continue;
      span.push_back(y);
      coords.push_back(y.coords);
    }
  }
  return {"chevalley_generation", span.size() == g.dim(),
          std::to_string(span.size()) + " of " + std::to_string(g.dim())};
}

std::vector<CheckResult> structure_suite(const OspAlgebra& g, const TripleSampling& sampling) {
  std::vector<CheckResult> out{check_super_jacobi(g, sampling),
                               check_form_invariance(g, sampling),
                               check_form_supersymmetric(g)};
  for (auto& r : check_good_grading(g)) out.push_back(std::move(r));
  out.push_back(check_chi_nondegenerate(g));
  out.push_back(check_chevalley_generation(g));
  return out;
}

}  // namespace ghostw
