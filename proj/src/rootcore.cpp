#include "csf/rootcore.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>

namespace csf::root {

namespace {
constexpr double kTol = 1e-10;

bool vec_close(const Vec& a, const Vec& b, double tol = kTol) {
  return (a - b).lpNorm<Eigen::Infinity>() <= tol;
}
}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::A1: return "A1";
    case CaseTag::A2: return "A2";
    case CaseTag::C2: return "C2";
    default: return "CUSTOM";
  }
}

CaseTag case_tag_from_string(const std::string& s) {
  if (s == "A1") return CaseTag::A1;
  if (s == "A2") return CaseTag::A2;
  if (s == "C2") return CaseTag::C2;
  if (s == "CUSTOM") return CaseTag::Custom;
  throw ValidationError("unknown case tag: " + s);
}

std::vector<int> RootSystem::positive_indices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(roots.size()); ++i) {
    if (roots[i].positive) out.push_back(i);
  }
  return out;
}

std::vector<int> RootSystem::simple_indices() const {
  // a positive root is simple iff it is not the sum of two positive roots
  const auto pos = positive_indices();
  std::vector<int> out;
  for (int i : pos) {
    bool decomposable = false;
    for (int j : pos) {
      for (int k : pos) {
        if (vec_close(roots[j].covector + roots[k].covector, roots[i].covector)) {
          decomposable = true;
        }
      }
    }
    if (!decomposable) out.push_back(i);
  }
  return out;
}

double RootSystem::ip_dual(const Vec& u, const Vec& v) const {
  return u.dot(gram_inv * v);
}

cplx RootSystem::ip_dual(const CVec& u, const CVec& v) const {
  // bilinear (not sesquilinear) extension
  return (u.transpose() * gram_inv.cast<cplx>() * v)(0, 0);
}

cplx RootSystem::lambda_alpha(const CVec& lambda, const Vec& alpha) const {
  const CVec ac = alpha.cast<cplx>();
  return ip_dual(lambda, ac) / ip_dual(Vec(alpha), Vec(alpha));
}

int RootSystem::double_multiplicity(const Vec& alpha) const {
  for (const auto& r : roots) {
    if (vec_close(r.covector, 2.0 * alpha)) return r.multiplicity;
  }
  return 0;
}

bool RootSystem::is_indivisible(const Vec& alpha) const {
  for (const auto& r : roots) {
    if (vec_close(2.0 * r.covector, alpha)) return false;
  }
  return true;
}

std::optional<std::vector<int>> RootSystem::cone_coordinates(const Vec& mu) const {
  const auto simples = simple_indices();
  if (simples.empty()) {
    if (mu.lpNorm<Eigen::Infinity>() <= kTol) return std::vector<int>{};
    return std::nullopt;
  }
  Mat S(rank, static_cast<int>(simples.size()));
  for (int j = 0; j < static_cast<int>(simples.size()); ++j) {
    S.col(j) = roots[simples[j]].covector;
  }
  const Vec c = S.colPivHouseholderQr().solve(mu);
  if ((S * c - mu).lpNorm<Eigen::Infinity>() > 1e-8) return std::nullopt;
  std::vector<int> out(simples.size());
  for (int j = 0; j < static_cast<int>(simples.size()); ++j) {
    const double r = std::round(c[j]);
    if (std::abs(c[j] - r) > 1e-7 || r < -1e-9) return std::nullopt;
    out[j] = static_cast<int>(r);
  }
  return out;
}

Vec RootSystem::simple_combination(const std::vector<int>& coords) const {
  const auto simples = simple_indices();
  Vec mu = Vec::Zero(rank);
  for (size_t j = 0; j < coords.size(); ++j) {
    mu += coords[j] * roots[simples[j]].covector;
  }
  return mu;
}

void RootSystem::validate() const {
  if (rank < 1) throw ValidationError("root system: rank must be >= 1");
  if (gram.rows() != rank || gram.cols() != rank) {
    throw ValidationError("root system: gram has wrong shape");
  }
  if (!gram.isApprox(gram.transpose(), 1e-12)) {
    throw ValidationError("root system: gram not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError("root system: gram not positive definite");
  }
  for (const auto& r : roots) {
    if (r.multiplicity < 1) {
      throw ValidationError("root system: multiplicities must be >= 1");
    }
    bool found_neg = false;
    for (const auto& s : roots) {
      if (vec_close(s.covector, Vec(-r.covector))) {
        if (s.positive == r.positive) {
          throw ValidationError("root system: alpha and -alpha share positivity");
        }
        if (s.multiplicity != r.multiplicity) {
          throw ValidationError("root system: m(alpha) != m(-alpha)");
        }
        found_neg = true;
      }
    }
    if (!found_neg) {
      throw ValidationError("root system: not closed under negation");
    }
  }
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

namespace {

CatalogCase parse_case(const nlohmann::json& j) {
  CatalogCase c;
  RootSystem& rs = c.rs;
  rs.tag = case_tag_from_string(j.at("tag").get<std::string>());
  rs.name = j.at("name").get<std::string>();
  rs.rank = j.at("rank").get<int>();
  rs.gram = Mat(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    for (int k = 0; k < rs.rank; ++k) {
      rs.gram(i, k) = j.at("gram")[i][k].get<double>();
    }
  }
  rs.gram_inv = rs.gram.inverse();
  for (const auto& rj : j.at("positive_roots")) {
    Root r;
    r.covector = Vec(rs.rank);
    for (int i = 0; i < rs.rank; ++i) r.covector[i] = rj.at("covector")[i].get<double>();
    r.multiplicity = rj.at("multiplicity").get<int>();
    r.positive = true;
    rs.roots.push_back(r);
    Root neg = r;
    neg.covector = -r.covector;
    neg.positive = false;
    rs.roots.push_back(neg);
  }
  rs.validate();
  c.T0 = Vec(rs.rank);
  for (int i = 0; i < rs.rank; ++i) c.T0[i] = j.at("T0")[i].get<double>();
  for (const auto& bj : j.at("spectral_basis")) {
    Vec b(rs.rank);
    for (int i = 0; i < rs.rank; ++i) b[i] = bj[i].get<double>();
    c.spectral_basis.push_back(b);
  }
  c.little_weyl_order = j.at("little_weyl_order").get<int>();
  c.description = j.value("description", "");

  // base-point invariant: alpha(T0) in {0, +1, -1} for every root
  for (const auto& r : rs.roots) {
    const double v = r.covector.dot(c.T0);
    if (std::min({std::abs(v), std::abs(v - 1.0), std::abs(v + 1.0)}) > kTol) {
      throw ValidationError("catalog: T0 fails the spectrum constraint for " +
                            to_string(rs.tag));
    }
  }
  return c;
}

}  // namespace

const std::vector<CatalogCase>& catalog() {
  static const std::vector<CatalogCase> cases = [] {
    const auto j = nlohmann::json::parse(catalog_json());
    if (j.at("version").get<int>() != 1) {
      throw ValidationError("catalog: unsupported version");
    }
    std::vector<CatalogCase> out;
    for (const auto& cj : j.at("cases")) out.push_back(parse_case(cj));
    return out;
  }();
  return cases;
}

const CatalogCase& catalog_case(CaseTag tag) {
  for (const auto& c : catalog()) {
    if (c.rs.tag == tag) return c;
  }
  throw ValidationError("catalog: no such case " + to_string(tag));
}

RootSystem build_root_system(CaseTag tag) {
  if (tag == CaseTag::Custom) {
    throw ValidationError("build_root_system: CUSTOM requires explicit data");
  }
  return catalog_case(tag).rs;
}

RootSystem build_custom_root_system(int rank, const Mat& gram,
                                    const std::vector<Vec>& positive_roots,
                                    const std::vector<int>& multiplicities,
                                    const std::string& name) {
  if (positive_roots.size() != multiplicities.size()) {
    throw ValidationError("custom root system: size mismatch");
  }
  RootSystem rs;
  rs.tag = CaseTag::Custom;
  rs.name = name;
  rs.rank = rank;
  rs.gram = gram;
  rs.gram_inv = gram.inverse();
  for (size_t i = 0; i < positive_roots.size(); ++i) {
    Root r{positive_roots[i], multiplicities[i], true};
    Root neg{-positive_roots[i], multiplicities[i], false};
    rs.roots.push_back(r);
    rs.roots.push_back(neg);
  }
  rs.validate();
  // Weyl invariance of the multiplicities is validated during closure.
  weyl_group(rs);
  return rs;
}

// ---------------------------------------------------------------------------
// Weyl group
// ---------------------------------------------------------------------------

WeylGroup weyl_group(const RootSystem& rs) {
  const auto simples = rs.simple_indices();
  std::vector<Mat> gens;
  for (int i : simples) {
    const Vec& a = rs.roots[i].covector;
    const Vec Aa = rs.gram_inv * a;
    const double aa = rs.ip_dual(a, a);
    gens.push_back(Mat::Identity(rs.rank, rs.rank) - (2.0 / aa) * (Aa * a.transpose()));
  }

  WeylGroup W;
  W.elements.push_back(Mat::Identity(rs.rank, rs.rank));
  W.word_length.push_back(0);
  auto find = [&](const Mat& m) -> int {
    for (int i = 0; i < static_cast<int>(W.elements.size()); ++i) {
      if ((W.elements[i] - m).lpNorm<Eigen::Infinity>() < 1e-9) return i;
    }
    return -1;
  };
  size_t frontier_begin = 0;
  while (frontier_begin < W.elements.size()) {
    const size_t frontier_end = W.elements.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& g : gens) {
        const Mat m = g * W.elements[i];
        if (find(m) < 0) {
          W.elements.push_back(m);
          W.word_length.push_back(W.word_length[i] + 1);
          if (W.elements.size() > 10000) {
            throw ValidationError("weyl_group: closure exceeded 10^4 elements");
          }
        }
      }
    }
    frontier_begin = frontier_end;
  }

  // contragredient action and inverses
  for (const auto& m : W.elements) {
    W.covector_action.push_back(m.inverse().transpose());
  }
  W.inverse_index.resize(W.size());
  for (int i = 0; i < W.size(); ++i) {
    const int j = find(W.elements[i].inverse());
    if (j < 0) throw ValidationError("weyl_group: closure not a group");
    W.inverse_index[i] = j;
  }
  W.longest_index = static_cast<int>(std::distance(
      W.word_length.begin(),
      std::max_element(W.word_length.begin(), W.word_length.end())));

  // every element must permute the root set preserving multiplicities
  for (int w = 0; w < W.size(); ++w) {
    for (const auto& r : rs.roots) {
      const Vec img = W.covector_action[w] * r.covector;
      bool ok = false;
      for (const auto& s : rs.roots) {
        if (vec_close(s.covector, img)) {
          if (s.multiplicity != r.multiplicity) {
            throw ValidationError(
                "weyl_group: multiplicities are not Weyl-invariant");
          }
          ok = true;
          break;
        }
      }
      if (!ok) {
        throw ValidationError("weyl_group: element does not permute the roots");
      }
    }
  }
  return W;
}

Vec rho(const RootSystem& rs) {
  Vec out = Vec::Zero(rs.rank);
  for (int i : rs.positive_indices()) {
    out += 0.5 * rs.roots[i].multiplicity * rs.roots[i].covector;
  }
  return out;
}

std::vector<Vec> lattice_enum(const RootSystem& rs, int max_height) {
  if (max_height < 0) throw ValidationError("lattice_enum: max_height >= 0");
  const auto pos = rs.positive_indices();
  std::vector<Vec> current{Vec::Zero(rs.rank)};
  std::vector<Vec> all{Vec::Zero(rs.rank)};
  auto seen = [&all](const Vec& v) {
    for (const auto& u : all) {
      if (vec_close(u, v)) return true;
    }
    return false;
  };
  std::vector<std::vector<Vec>> by_height{{Vec::Zero(rs.rank)}};
  for (int h = 1; h <= max_height; ++h) {
    std::vector<Vec> next;
    for (const auto& v : by_height[h - 1]) {
      for (int i : pos) {
        const Vec u = v + rs.roots[i].covector;
        bool dup = false;
        for (const auto& w : next) {
          if (vec_close(w, u)) { dup = true; break; }
        }
        if (!dup) next.push_back(u);
      }
    }
    std::vector<Vec> fresh;
    for (const auto& u : next) {
      if (!seen(u)) {
        all.push_back(u);
        fresh.push_back(u);
      }
    }
    // sort the new layer lexicographically
    std::sort(fresh.begin(), fresh.end(), [](const Vec& a, const Vec& b) {
      for (int i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > kTol) return a[i] < b[i];
      }
      return false;
    });
    by_height.push_back(next);
    // keep `all` ordered by (height, lex): rebuild from layers
  }
  std::vector<Vec> out;
  std::vector<Vec> emitted;
  auto emitted_has = [&emitted](const Vec& v) {
    for (const auto& u : emitted) {
      if (vec_close(u, v)) return true;
    }
    return false;
  };
  for (auto& layer : by_height) {
    std::sort(layer.begin(), layer.end(), [](const Vec& a, const Vec& b) {
      for (int i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > kTol) return a[i] < b[i];
      }
      return false;
    });
    for (const auto& v : layer) {
      if (!emitted_has(v)) {
        emitted.push_back(v);
        out.push_back(v);
      }
    }
  }
  return out;
}

Orbit orbit_of(const WeylGroup& W, const Vec& X0, double tol) {
  Orbit orb;
  for (int w = 0; w < W.size(); ++w) {
    const Vec p = W.apply(w, X0);
    bool dup = false;
    for (const auto& q : orb.points) {
      if ((p - q).lpNorm<Eigen::Infinity>() <= tol) { dup = true; break; }
    }
    if (!dup) {
      orb.points.push_back(p);
      orb.witnesses.push_back(w);
    }
  }
  return orb;
}

bool is_dominant(const RootSystem& rs, const Vec& X, double tol) {
  for (int i : rs.simple_indices()) {
    if (rs.roots[i].covector.dot(X) < -tol) return false;
  }
  return true;
}

}  // namespace csf::root
