#include "diagram/surface.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "diagram/error.hpp"
#include "diagram/linalg.hpp"
#include "diagram/lp.hpp"

namespace diagram {

namespace {

std::string coords_text(const LatticeVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ',';
    out += to_string(v.coords()[i]);
  }
  return out + "]";
}

std::string labels_text(const std::vector<Label>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out + "}";
}

Matrix gram_of(const SurfaceModel& model, const std::vector<std::size_t>& idx) {
  Matrix g(idx.size(), RationalVector(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) g[i][j] = inner(model.curves[idx[i]].second, model.curves[idx[j]].second);
  }
  return g;
}

void require_lattice(const SurfaceModel& model, const LatticeVector& v, const char* what) {
  if (!same_lattice(model.ns, v.lattice())) throw Error(Errc::MismatchedLattice, std::string(what) + " is not on the model lattice");
}

}  // namespace

std::size_t SurfaceModel::index_of(const Label& label) const {
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].first == label) return i;
  }
  throw Error(Errc::UnknownLabel, "unknown curve '" + label + "'");
}

void validate_model(const SurfaceModel& model) {
  if (!model.ns || !is_hyperbolic(*model.ns)) throw Error(Errc::InvalidModel, "NS lattice must have signature (1, rank-1)");
  for (const auto* v : {&model.canonical, &model.ample}) {
    if (!same_lattice(model.ns, v->lattice())) throw Error(Errc::InvalidModel, "K and h must live on the NS lattice");
  }
  if (model.ample.square() <= 0) throw Error(Errc::InvalidModel, "reference class h needs h² > 0");
  std::set<Label> seen;
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    const auto& [label, c] = model.curves[i];
    if (!same_lattice(model.ns, c.lattice())) throw Error(Errc::InvalidModel, "curve '" + label + "' is not on the NS lattice");
    if (!seen.insert(label).second) throw Error(Errc::InvalidModel, "duplicate curve label '" + label + "'");
    if (c.is_zero()) throw Error(Errc::InvalidModel, "curve '" + label + "' has zero class");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& [other, d] = model.curves[j];
      if (c == d) throw Error(Errc::InvalidModel, "curves '" + other + "' and '" + label + "' have the same class");
      if (c.square() < 0 && d.square() < 0 && inner(c, d) < 0) {
        throw Error(Errc::InvalidModel, "exceptional curves '" + other + "' and '" + label + "' meet negatively");
      }
    }
  }
}

std::vector<std::string> adjunction_warnings(const SurfaceModel& model) {
  std::vector<std::string> out;
  for (const auto& [label, c] : model.curves) {
    const Rational pa = (c.square() + inner(c, model.canonical)) / 2 + 1;
    if (pa < 0) out.push_back("curve '" + label + "' has arithmetic genus " + to_string(pa) + " < 0");
    else if (pa.get_den() != 1) out.push_back("curve '" + label + "' has non-integral arithmetic genus " + to_string(pa));
  }
  return out;
}

std::vector<Label> exceptional_curves(const SurfaceModel& model) {
  std::vector<Label> out;
  for (const auto& [label, c] : model.curves) {
    if (c.square() < 0) out.push_back(label);
  }
  return out;
}

std::vector<LatticeVector> enumerate_classes(const LatticePtr& ns, const LatticeVector& k, const Rational& square,
                                             const Rational& k_product, long height,
                                             const std::vector<ProductWindow>& windows) {
  if (height < 0) throw Error(Errc::DomainViolation, "height must be nonnegative");
  const std::size_t r = ns->rank();
  std::vector<LatticeVector> out;
  RationalVector x(r, Rational(-height));
  // Odometer over the box [−height, height]^r in lexicographic order.
  while (true) {
    LatticeVector v(ns, x);
    if (v.square() == square && inner(v, k) == k_product) {
      const bool inside = std::all_of(windows.begin(), windows.end(), [&](const ProductWindow& w) {
        const Rational p = inner(v, w.f);
        return p >= 0 && p <= w.bound;
      });
      if (inside) out.push_back(v);
    }
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (x[pos] < height) {
        x[pos] += 1;
        break;
      }
      x[pos] = -height;
      if (pos == 0) return out;
    }
    if (r == 0) return out;
  }
}

Integer product_window_bound(const std::vector<LatticeVector>& f) {
  if (f.empty()) return 1;
  const Matrix g = gram_matrix(f);
  if (definiteness_class(g) != DefinitenessClass::NegativeDefinite) {
    throw Error(Errc::GramNotNegativeDefinite, "curves must have a negative definite Gram matrix");
  }
  Integer l = 1;
  for (std::size_t j = 0; j < f.size(); ++j) {
    RationalVector e(f.size(), Rational(0));
    e[j] = 1;
    const auto col = linalg::solve(g, e);
    for (const auto& x : *col) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  return l;
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const LatticeVector& d) {
  validate_model(model);
  require_lattice(model, d, "divisor");
  const std::size_t m = model.curves.size();
  auto curve = [&](std::size_t i) -> const LatticeVector& { return model.curves[i].second; };

  if (inner(d, model.ample) < 0) {
    throw Error(Errc::NotPseudoEffective, "certificate: D·h = " + to_string(inner(d, model.ample)) + " < 0");
  }

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < m; ++i) {
    if (inner(d, curve(i)) < 0) support.push_back(i);
  }
  LatticeVector p = d;
  RationalVector alpha;
  for (std::size_t round = 0; round <= m + 1; ++round) {
    if (!support.empty()) {
      const Matrix g = gram_of(model, support);
      std::vector<Label> names;
      for (auto i : support) names.push_back(model.curves[i].first);
      if (definiteness_class(g) != DefinitenessClass::NegativeDefinite) {
        throw Error(Errc::NotPseudoEffective,
                    "certificate: support " + labels_text(names) + " has a Gram matrix that is not negative definite");
      }
      RationalVector rhs;
      for (auto i : support) rhs.push_back(inner(d, curve(i)));
      alpha = *linalg::solve(g, rhs);
      p = d;
      for (std::size_t s = 0; s < support.size(); ++s) p -= alpha[s] * curve(support[s]);
    }
    std::vector<std::size_t> grow;
    for (std::size_t i = 0; i < m; ++i) {
      if (inner(p, curve(i)) < 0 && !std::binary_search(support.begin(), support.end(), i)) grow.push_back(i);
    }
    if (grow.empty()) break;
    if (round == m + 1) throw Error(Errc::NotPseudoEffective, "certificate: support did not stabilise");
    support.insert(support.end(), grow.begin(), grow.end());
    std::sort(support.begin(), support.end());
  }

  for (std::size_t s = 0; s < support.size(); ++s) {
    if (alpha[s] <= 0) {
      throw Error(Errc::NotPseudoEffective, "certificate: coefficient of '" + model.curves[support[s]].first +
                                                "' is " + to_string(alpha[s]) + " <= 0");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (inner(p, curve(i)) < 0) {
      throw Error(Errc::NotPseudoEffective, "certificate: P·" + model.curves[i].first + " < 0 at the stable support");
    }
  }
  if (!p.is_zero() && (p.square() < 0 || inner(p, model.ample) < 0)) {
    throw Error(Errc::NotPseudoEffective, "certificate: nef part " + coords_text(p) + " has P² = " + to_string(p.square()) +
                                              ", P·h = " + to_string(inner(p, model.ample)));
  }
  ZariskiDecomposition z{p, {}};
  for (std::size_t s = 0; s < support.size(); ++s) z.n.emplace_back(model.curves[support[s]].first, alpha[s]);
  return z;
}

std::string_view to_string(KodairaDim k) {
  switch (k) {
    case KodairaDim::Two: return "Two";
    case KodairaDim::One: return "One";
    case KodairaDim::Zero: return "Zero";
    case KodairaDim::MinusInfinity: return "MinusInfinity";
  }
  return "MinusInfinity";
}

KodairaDim numerical_kodaira(const SurfaceModel& model, const LatticeVector& d) {
  try {
    const auto z = zariski_decompose(model, d);
    if (z.p.is_zero()) return KodairaDim::Zero;
    return z.p.square() > 0 ? KodairaDim::Two : KodairaDim::One;
  } catch (const Error& e) {
    if (e.code() != Errc::NotPseudoEffective) throw;
    return KodairaDim::MinusInfinity;
  }
}

namespace {

ZariskiDecomposition anticanonical(const SurfaceModel& model) {
  validate_model(model);
  if (model.canonical.is_zero()) throw Error(Errc::CanonicalTrivial, "K ≡ 0 is not covered");
  try {
    return zariski_decompose(model, -model.canonical);
  } catch (const Error& e) {
    if (e.code() != Errc::NotPseudoEffective) throw;
    throw Error(Errc::NotPseudoEffectiveAnticanonical, std::string(e.what()));
  }
}

KodairaDim nu_of(const ZariskiDecomposition& z) {
  if (z.p.is_zero()) return KodairaDim::Zero;
  return z.p.square() > 0 ? KodairaDim::Two : KodairaDim::One;
}

ExcPartition partition_from(const SurfaceModel& model, const ZariskiDecomposition& z) {
  ExcPartition out;
  std::set<Label> in_n;
  for (const auto& [label, a] : z.n) in_n.insert(label);
  for (const auto& [label, c] : model.curves) {
    const Rational sq = c.square();
    if (sq >= 0) continue;
    const Rational ck = inner(c, model.canonical);
    if (in_n.count(label)) {
      out.exc3.push_back(label);
    } else if (sq == -2 && ck == 0) {
      out.exc2.push_back(label);
    } else if (sq == -1 && ck == -1) {
      out.exc1.push_back(label);
    } else {
      throw Error(Errc::UnclassifiableCurve, "exceptional curve '" + label + "' has C² = " + to_string(sq) +
                                                 ", C·K = " + to_string(ck) + " and is not in supp N(−K)");
    }
  }
  return out;
}

}  // namespace

ExcPartition classify_exc_partition(const SurfaceModel& model) { return partition_from(model, anticanonical(model)); }

std::string_view to_string(MoriPolyhedronType::Kind k) {
  switch (k) {
    case MoriPolyhedronType::Kind::Elliptic: return "Elliptic";
    case MoriPolyhedronType::Kind::ParabolicAt: return "ParabolicAt";
    case MoriPolyhedronType::Kind::HyperbolicRel: return "HyperbolicRel";
  }
  return "Elliptic";
}

MoriPolyhedronType mori_polyhedron_type(const SurfaceModel& model) {
  const auto z = anticanonical(model);
  (void)partition_from(model, z);
  MoriPolyhedronType t;
  switch (nu_of(z)) {
    case KodairaDim::Two: t.kind = MoriPolyhedronType::Kind::Elliptic; break;
    case KodairaDim::One:
      t.kind = MoriPolyhedronType::Kind::ParabolicAt;
      t.p_ray = z.p;
      break;
    default:
      t.kind = MoriPolyhedronType::Kind::HyperbolicRel;
      for (const auto& [label, a] : z.n) t.t_normals.push_back(label);
      t.codim = t.t_normals.size();
      break;
  }
  return t;
}

DiscrepancyReport discrepancies(const LatticePtr& ns, const LatticeVector& k, const std::vector<LatticeVector>& f) {
  if (!same_lattice(ns, k.lattice())) throw Error(Errc::MismatchedLattice, "K is not on the lattice");
  for (const auto& x : f) {
    if (!same_lattice(ns, x.lattice())) throw Error(Errc::MismatchedLattice, "curve is not on the lattice");
  }
  DiscrepancyReport r{{}, k, false, true, {}};
  if (f.empty()) {
    r.orthogonal = true;
    return r;
  }
  const Matrix g = gram_matrix(f);
  if (definiteness_class(g) != DefinitenessClass::NegativeDefinite) {
    throw Error(Errc::GramNotNegativeDefinite, "exceptional curves must have a negative definite Gram matrix");
  }
  RationalVector rhs;
  for (const auto& x : f) rhs.push_back(inner(k, x));
  r.alphas = *linalg::solve(g, rhs);
  for (std::size_t i = 0; i < f.size(); ++i) r.pullback -= r.alphas[i] * f[i];
  r.orthogonal = std::all_of(f.begin(), f.end(), [&](const LatticeVector& x) { return inner(r.pullback, x) == 0; });
  r.almost_minimal = std::all_of(r.alphas.begin(), r.alphas.end(), [](const Rational& a) { return a <= 0; });

  std::vector<std::size_t> zero;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (r.alphas[i] == 0) zero.push_back(i);
  }
  if (zero.empty()) return r;
  std::vector<std::pair<Label, LatticeVector>> members;
  for (std::size_t i = 0; i < f.size(); ++i) members.emplace_back("F" + std::to_string(i + 1), f[i]);
  const VectorFamily family(ns, std::move(members));
  const GramGraph sub = build_gram_graph(family, zero);
  for (const auto& comp : connected_components(sub)) {
    DuValComponent c;
    for (auto v : comp) c.members.push_back(zero[v]);
    std::sort(c.members.begin(), c.members.end());
    c.type = dynkin_type(family, c.members);
    c.du_val = c.type.is_finite();
    r.zero_components.push_back(std::move(c));
  }
  return r;
}

CombinationResult is_nonnegative_combination(const LatticeVector& target, const std::vector<LatticeVector>& generators) {
  const std::size_t r = target.rank();
  for (const auto& g : generators) {
    if (!same_lattice(g.lattice(), target.lattice())) throw Error(Errc::MismatchedLattice, "generator on another lattice");
  }
  Matrix a(r, RationalVector(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) a[i][j] = generators[j].coords()[i];
  }
  const auto res = lp::nonnegative_solution(a, target.coords());
  CombinationResult out;
  out.member = res.feasible;
  if (res.feasible) {
    out.coefficients = res.solution;
    if (generators.empty()) out.coefficients.clear();
    return out;
  }
  // z pairs with coordinates; the lattice vector G⁻¹z pairs the same way through the form.
  const auto f = linalg::solve(target.lattice()->gram(), res.certificate);
  if (f) out.separating = LatticeVector(target.lattice(), *f);
  return out;
}

MoriGeneratorReport mori_generators(const SurfaceModel& model, const std::vector<LatticeVector>& extra_isotropic) {
  const auto z = anticanonical(model);
  (void)partition_from(model, z);
  MoriGeneratorReport r;
  r.nu = nu_of(z);
  for (const auto& [label, c] : model.curves) {
    if (c.square() < 0) r.generators.push_back({label, c, "Exc", false});
  }
  std::vector<LatticeVector> exc;
  for (const auto& g : r.generators) exc.push_back(g.cls);
  if (r.nu == KodairaDim::One && !is_nonnegative_combination(z.p, exc).member) {
    r.generators.push_back({"P", z.p, "P", false});
  }
  if (r.nu == KodairaDim::Zero) {
    for (std::size_t i = 0; i < extra_isotropic.size(); ++i) {
      const auto& v = extra_isotropic[i];
      require_lattice(model, v, "isotropic class");
      if (v.is_zero() || v.square() != 0) throw Error(Errc::ModeDataInvalid, "extra classes must be nonzero and isotropic");
      r.generators.push_back({"iso" + std::to_string(i + 1), v, "isotropic", false});
    }
  }
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    std::vector<LatticeVector> others;
    for (std::size_t j = 0; j < r.generators.size(); ++j) {
      if (j != i) others.push_back(r.generators[j].cls);
    }
    r.generators[i].extremal = !is_nonnegative_combination(r.generators[i].cls, others).member;
  }

  std::vector<LatticeVector> gens;
  for (const auto& g : r.generators) gens.push_back(g.cls);
  std::vector<LatticeVector> all_curves;
  for (const auto& [label, c] : model.curves) all_curves.push_back(c);
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    const auto& [label, c] = model.curves[i];
    if (c.square() < 0 || is_nonnegative_combination(c, gens).member) continue;
    std::vector<LatticeVector> rest = gens;
    for (std::size_t j = 0; j < all_curves.size(); ++j) {
      if (j != i && all_curves[j].square() >= 0) rest.push_back(all_curves[j]);
    }
    UngeneratedCurve u{label, c, c.square(), !is_nonnegative_combination(c, rest).member};
    if (r.nu == KodairaDim::Two && u.square == 0 && u.extremal) r.isotropic_fiber_discrepancy = true;
    r.ungenerated.push_back(std::move(u));
  }
  return r;
}

SurfaceBoundReport surface_bound_report(const SurfaceModel& model, const std::string& variant,
                                        std::optional<std::size_t> d_override) {
  std::string v = variant;
  for (auto pos = v.find("′"); pos != std::string::npos; pos = v.find("′")) v.replace(pos, std::string("′").size(), "'");
  static const std::set<std::string> known = {"3.4", "3.5", "3.5'", "3.6", "3.6'"};
  if (!known.count(v)) throw Error(Errc::UnknownTheorem, "unknown surface variant '" + variant + "'");

  const auto z = anticanonical(model);
  SurfaceBoundReport r;
  r.variant = v;
  r.nu = nu_of(z);
  const KodairaDim wanted = v == "3.4" ? KodairaDim::Two : (v[2] == '5' ? KodairaDim::One : KodairaDim::Zero);
  if (r.nu != wanted) {
    throw Error(Errc::VariantMismatch, "variant " + v + " needs ν(−K) = " + std::string(to_string(wanted)) + ", model has " +
                                           std::string(to_string(r.nu)));
  }
  r.exc = partition_from(model, z);

  std::vector<std::pair<Label, LatticeVector>> members;
  for (const auto& [label, c] : model.curves) {
    if (c.square() < 0) members.emplace_back(label, c);
  }
  const VectorFamily family(model.ns, members);
  if (d_override) {
    r.d = *d_override;
    r.d_overridden = true;
  } else {
    const Distance d = lanner_diameter_d(family, family.size());
    r.d = d.value_or(0);
  }
  const std::size_t rank = model.ns->rank();
  r.subset_size = rank >= 2 ? rank - 2 : 0;
  const bool primed = v.back() == '\'';
  r.metric = (primed || v == "3.4") ? Metric::Rho : Metric::RhoQ;

  auto merge = [&](const EmpiricalConstants& e) {
    r.constants.c1 = std::max(r.constants.c1, e.c1);
    r.constants.c2 = std::max(r.constants.c2, e.c2);
    r.constants.subsets_examined += e.subsets_examined;
  };
  r.constants.c1 = 0;
  r.constants.c2 = 0;
  if (v == "3.4") {
    merge(empirical_constants(family, {}, r.subset_size, r.metric, r.d));
  } else if (v[2] == '5') {
    for (const auto& label : r.exc.exc1) {
      const std::size_t e = family.index_of(label);
      if (inner(family.vector(e), z.p) > 0) merge(empirical_constants(family, {e}, r.subset_size, r.metric, r.d));
    }
  } else {
    // Elliptic Q among first-kind and (−2)-curves outside supp N(−K), with #Q ≤ dim NS − n − 1.
    std::vector<std::size_t> pool;
    for (const auto* part : {&r.exc.exc1, &r.exc.exc2}) {
      for (const auto& label : *part) pool.push_back(family.index_of(label));
    }
    std::sort(pool.begin(), pool.end());
    const long cap = static_cast<long>(rank) - static_cast<long>(r.exc.exc3.size()) - 1;
    Subset q;
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
      merge(empirical_constants(family, q, r.subset_size, r.metric, r.d));
      if (static_cast<long>(q.size()) >= cap) return;
      for (std::size_t p = from; p < pool.size(); ++p) {
        q.push_back(pool[p]);
        if (is_elliptic_subset(family, q)) walk(p + 1);
        q.pop_back();
      }
    };
    if (cap >= 0) walk(0);
  }

  const std::string theorem = v;
  r.bound = bound(theorem, {{"C1", r.constants.c1}, {"C2", r.constants.c2}});
  r.quantity = v[2] == '6' ? static_cast<long>(r.exc.exc3.size()) : static_cast<long>(rank);
  r.satisfied = Rational(r.quantity) < r.bound.value;
  return r;
}

}  // namespace diagram
