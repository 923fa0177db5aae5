#include "diagram/bounds.hpp"

#include <algorithm>
#include <functional>

#include "diagram/error.hpp"
#include "diagram/linalg.hpp"

namespace diagram {

namespace {

std::string normalize_id(std::string id) {
  const std::string prime = "′";
  for (auto pos = id.find(prime); pos != std::string::npos; pos = id.find(prime)) id.replace(pos, prime.size(), "'");
  return id;
}

const Rational& require(const std::map<std::string, Rational>& params, const std::string& key, const std::string& id) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(Errc::MissingParam, "theorem " + id + " needs parameter " + key);
  return it->second;
}

Rational optional_param(const std::map<std::string, Rational>& params, const std::string& key) {
  auto it = params.find(key);
  return it == params.end() ? Rational(0) : it->second;
}

struct Family96 {
  const char* id;
  long offset;
  bool plus_dim_t;
  const char* tag;
};

constexpr Family96 kFamily96[] = {
    {"1.4.0", 68, false, "dim γ"},   {"1.4.1", 68, false, "dim Λ"},   {"1.4.2", 69, false, "dim Λ"},
    {"1.4.2'", 69, false, "dim Λ"},  {"1.4.3", 68, true, "dim Λ"},    {"1.4.3'", 68, true, "dim Λ"},
    {"3.4", 69, false, "dim NS"},         {"3.5", 70, false, "dim NS"},         {"3.5'", 70, false, "dim NS"},
    {"3.6", 68, false, "n"},              {"3.6'", 68, false, "n"},
};

}  // namespace

std::vector<std::string> known_theorems() {
  std::vector<std::string> out;
  for (const auto& f : kFamily96) out.emplace_back(f.id);
  out.insert(out.end(), {"1.5.1.1", "1.5.1.4", "1.5.2.4"});
  std::sort(out.begin(), out.end());
  return out;
}

BoundResult bound(const std::string& theorem_id, const std::map<std::string, Rational>& params) {
  const std::string id = normalize_id(theorem_id);
  BoundResult r;
  r.theorem = id;
  const auto n = params.find("n");

  const auto fam = std::find_if(std::begin(kFamily96), std::end(kFamily96), [&](const Family96& f) { return id == f.id; });
  if (fam != std::end(kFamily96)) {
    const Rational c1 = require(params, "C1", id);
    const Rational c2 = require(params, "C2", id);
    r.inputs = {{"C1", c1}, {"C2", c2}};
    r.value = 96 * (c1 + c2 / 3) + fam->offset;
    if (fam->plus_dim_t) {
      const Rational t = require(params, "dim_T", id);
      r.inputs["dim_T"] = t;
      r.value += t;
    }
    r.bounds = fam->tag;
  } else if (id == "1.5.1.1") {
    const Rational c = require(params, "C", id);
    r.inputs = {{"C", c}};
    r.value = 8 * c + 6;
    r.bounds = "dim γ";
  } else if (id == "1.5.2.4") {
    const Rational c = require(params, "C", id);
    r.inputs = {{"C", c}};
    r.value = 96 * c + 68;
    r.bounds = "n";
  } else if (id == "1.5.1.4") {
    const Rational c = require(params, "C", id);
    const Rational dd = optional_param(params, "D");
    r.inputs = {{"C", c}, {"D", dd}};
    r.bounds = "n";
    if (n == params.end()) {
      if (dd != 0) throw Error(Errc::MissingParam, "theorem 1.5.1.4 with D != 0 needs n");
      r.value = 8 * c + 6;
    } else {
      const Rational& nv = n->second;
      if (nv.get_den() != 1 || nv < 2) throw Error(Errc::DomainViolation, "n must be an integer >= 2");
      const bool even = mpz_even_p(nv.get_num().get_mpz_t()) != 0;
      const Rational tail = even ? Rational(1 + 8 * dd / nv) : Rational((8 * c + 8 * dd) / (nv - 1));
      r.value = 8 * c + 5 + tail;
    }
  } else {
    throw Error(Errc::UnknownTheorem, "unknown theorem id '" + theorem_id + "'");
  }
  if (n != params.end()) {
    r.inputs["n"] = n->second;
    r.satisfied = n->second < r.value;
  }
  return r;
}

std::vector<RecordedConstant> recorded_constants() {
  const std::map<std::string, Rational> at89 = {{"C1", 8}, {"C2", 9}, {"dim_T", 0}};
  auto formula = [&](const std::string& id) { return bound(id, at89).value; };
  std::vector<RecordedConstant> out = {
      {"Theorem 2.3(a), section 2", "dim Λ < 1056 if G is elliptic", 1056, false, "1.4.1", 0, false},
      {"Theorem 2.3(b), section 2", "dim Λ < 1057 if G is parabolic", 1057, false, "1.4.2", 0, false},
      {"Theorem 2.3(c), section 2", "dim Λ < 1056 + dim \U0001d4af if G is hyperbolic", 1056, true, "1.4.3", 0, false},
      {"Remark 2.5", "dim Λ < 996 for the case (a)", 996, false, "1.4.1", 0, false},
      {"Remark 2.5", "dim Λ < 997 for the parabolic case", 997, false, "1.4.2", 0, false},
      {"Remark 2.5", "dim Λ < 996 + dim \U0001d4af for the hyperbolic case", 996, true, "1.4.3", 0, false},
      {"Introduction, Theorem 2.3(a)", "dim Λ < 996 if Λ' is a finite point", 996, false, "1.4.1", 0, false},
      {"Introduction, Theorem 2.3(b)", "dim Λ < 997 if Λ' is an infinite point", 997, false, "1.4.2", 0, false},
      {"Introduction, Theorem 2.3(c)", "dim Λ < 996 + dim Λ' if Λ' is a finite subspace", 996, true, "1.4.3", 0,
       false},
      {"Introduction, main estimate", "dim Λ < 96(C1+C2/3)+68", 1124, false, "1.4.1", 0, false},
  };
  for (auto& e : out) {
    e.formula_value = formula(e.formula_theorem);
    e.discrepancy = e.formula_value != e.published;
  }
  return out;
}

Distance lanner_diameter_d(const VectorFamily& family, std::size_t max_size) {
  Distance best = 0;
  for (const auto& l : enumerate_lanner(family, max_size)) {
    const Distance d = diameter(build_gram_graph(family, l));
    if (!d) return std::nullopt;
    best = std::max(*best, *d);
  }
  return best;
}

EmpiricalConstants empirical_constants(const VectorFamily& family, const Subset& q, std::size_t subset_size, Metric metric,
                                       std::size_t d) {
  if (!q.empty() && !is_elliptic_subset(family, q)) throw Error(Errc::QNotElliptic, "Q must be elliptic or empty");
  EmpiricalConstants out;
  out.c1 = 0;
  out.c2 = 0;
  if (subset_size <= q.size() || subset_size > family.size()) return out;

  std::vector<bool> in_q(family.size(), false);
  for (auto i : q) in_q.at(i) = true;
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!in_q[i]) pool.push_back(i);
  }

  auto score = [&](const Subset& e) {
    ++out.subsets_examined;
    const GramGraph g = build_gram_graph(family, e);
    std::vector<bool> local_q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) local_q[i] = in_q[e[i]];
    long c1 = 0;
    long c2 = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (local_q[i]) continue;
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (local_q[j]) continue;
        const Distance rho = metric == Metric::Rho ? graph_distance(g, i, j) : rho_q(g, local_q, i, j);
        if (!rho || *rho < 1) continue;
        if (*rho <= d) {
          ++c1;
        } else if (*rho <= 2 * d + 1) {
          ++c2;
        }
      }
    }
    const long denom = static_cast<long>(e.size() - q.size());
    out.c1 = std::max(out.c1, Rational(Rational(c1) / denom));
    out.c2 = std::max(out.c2, Rational(Rational(c2) / denom));
  };

  // Depth-first growth from Q; subsets of elliptic sets are elliptic, so prune on failure.
  Subset chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (q.size() + chosen.size() == subset_size) {
      Subset e = q;
      e.insert(e.end(), chosen.begin(), chosen.end());
      std::sort(e.begin(), e.end());
      score(e);
      return;
    }
    for (std::size_t p = from; p < pool.size(); ++p) {
      chosen.push_back(pool[p]);
      Subset e = q;
      e.insert(e.end(), chosen.begin(), chosen.end());
      std::sort(e.begin(), e.end());
      if (is_elliptic_subset(family, e)) grow(p + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return out;
}

Subset find_elliptic_face(const VectorFamily& family, const FaceSearchMode& mode) {
  if (!family.is_acute()) throw Error(Errc::NotAcuteAngled, "some pair of members has negative product");
  if (const auto* p = std::get_if<ParabolicMode>(&mode)) {
    if (!same_lattice(p->c.lattice(), family.lattice())) throw Error(Errc::ModeDataInvalid, "c lies on another lattice");
    if (p->c.is_zero() || p->c.square() != 0) throw Error(Errc::ModeDataInvalid, "c must be nonzero and isotropic");
    const GramGraph g = build_gram_graph(family);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (inner(family.vector(i), p->c) == 0) continue;
      const bool ok = std::all_of(g.neighbors(i).begin(), g.neighbors(i).end(), [&](std::size_t j) {
        return is_elliptic_subset(family, Subset{std::min(i, j), std::max(i, j)});
      });
      if (ok) return {i};
    }
    throw Error(Errc::NotFound, "no member with nonzero product against c has an elliptic neighbourhood");
  }

  const auto& normals = std::get<HyperbolicMode>(mode).normals;
  if (normals.empty()) throw Error(Errc::ModeDataInvalid, "hyperbolic mode needs at least one normal");
  for (const auto& f : normals) {
    if (!same_lattice(f.lattice(), family.lattice())) throw Error(Errc::ModeDataInvalid, "normal lies on another lattice");
  }
  if (definiteness_class(gram_matrix(normals)) != DefinitenessClass::NegativeDefinite) {
    throw Error(Errc::ModeDataInvalid, "normals must have a negative definite Gram matrix");
  }
  const std::size_t r = family.lattice()->rank();
  Matrix span(r, RationalVector(normals.size()));
  for (std::size_t j = 0; j < normals.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) span[i][j] = normals[j].coords()[i];
  }
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!linalg::solve(span, family.vector(i).coords())) outside.push_back(i);
  }
  // Every single member is elliptic, so the smallest candidate is the first member outside the span.
  if (outside.empty()) throw Error(Errc::NotFound, "every member lies in the span of the normals");
  return {outside.front()};
}

}  // namespace diagram
