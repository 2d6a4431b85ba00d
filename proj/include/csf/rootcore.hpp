#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csf/errors.hpp"

namespace csf::root {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;

enum class CaseTag { A1, A2, C2, Custom };

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& s);

struct Root {
  Vec covector;      // functional on the Cartan coordinates: alpha(X) = covector . X
  int multiplicity;  // dim of the root space
  bool positive;
};

/// Restricted root system with multiplicities and a frozen inner product.
///
/// Points of the Cartan live in R^rank; roots and spectral parameters are
/// covectors. `gram` is the inner product on points; covectors pair
/// through its inverse. The catalog normalises gram to the trace form of
/// the defining matrix realization (expressed in isometric coordinates).
struct RootSystem {
  CaseTag tag = CaseTag::Custom;
  std::string name;  // e.g. "SL(2,R)"
  int rank = 0;
  std::vector<Root> roots;  // closed under negation
  Mat gram;                 // SPD, rank x rank
  Mat gram_inv;

  std::vector<int> positive_indices() const;
  std::vector<int> simple_indices() const;  // simple positive roots
  const Vec& root_covector(int i) const { return roots[i].covector; }

  // bilinear dual pairing <u, v> = u^T gram^-1 v, extended complex-bilinearly
  double ip_dual(const Vec& u, const Vec& v) const;
  cplx ip_dual(const CVec& u, const CVec& v) const;

  // <lambda, alpha> / <alpha, alpha>
  cplx lambda_alpha(const CVec& lambda, const Vec& alpha) const;

  // multiplicity of the doubled root 2*alpha (0 if 2*alpha is not a root)
  int double_multiplicity(const Vec& alpha) const;
  bool is_indivisible(const Vec& alpha) const;  // alpha/2 is not a root

  // coordinates of mu in the simple-root basis, if mu lies in the
  // non-negative integer cone N0[Sigma+]; nullopt otherwise
  std::optional<std::vector<int>> cone_coordinates(const Vec& mu) const;

  Vec simple_combination(const std::vector<int>& coords) const;

  void validate() const;  // throws ValidationError
};

/// Finite reflection group generated by the simple root reflections,
/// acting on Cartan points; covectors transform contragrediently.
struct WeylGroup {
  std::vector<Mat> elements;        // action on points
  std::vector<Mat> covector_action; // inverse-transpose of elements
  std::vector<int> word_length;
  std::vector<int> inverse_index;
  int longest_index = 0;

  int size() const { return static_cast<int>(elements.size()); }
  Vec apply(int w, const Vec& X) const { return elements[w] * X; }
  CVec apply_covector(int w, const CVec& lam) const {
    return covector_action[w].cast<cplx>() * lam;
  }
  Vec apply_covector(int w, const Vec& lam) const {
    return covector_action[w] * lam;
  }
};

struct CatalogCase {
  RootSystem rs;
  Vec T0;                    // base-point generator, ad-spectrum {0, +-1}
  std::vector<Vec> spectral_basis;  // chamber generators for the Plancherel coordinates
  int little_weyl_order = 1;
  std::string description;
};

/// The built-in catalog (parsed from the embedded JSON resource).
const std::vector<CatalogCase>& catalog();
const CatalogCase& catalog_case(CaseTag tag);
const char* catalog_json();  // the raw embedded resource

RootSystem build_root_system(CaseTag tag);

/// Builds and validates a root system from explicit data (the CUSTOM path).
RootSystem build_custom_root_system(int rank, const Mat& gram,
                                    const std::vector<Vec>& positive_roots,
                                    const std::vector<int>& multiplicities,
                                    const std::string& name = "custom");

/// Full Weyl group by closure over the simple reflections.
/// Throws ValidationError if the closure exceeds 10^4 elements.
WeylGroup weyl_group(const RootSystem& rs);

/// rho = half the multiplicity-weighted sum of positive roots.
Vec rho(const RootSystem& rs);

/// All mu = sum n_alpha alpha over positive roots with sum n_alpha <=
/// max_height, deduplicated as vectors, sorted by (height, lex).
std::vector<Vec> lattice_enum(const RootSystem& rs, int max_height);

/// Orbit of a point under the Weyl group: distinct points with a witness
/// element index for each.
struct Orbit {
  std::vector<Vec> points;
  std::vector<int> witnesses;  // elements[w] * X0 = points[i]
};
Orbit orbit_of(const WeylGroup& W, const Vec& X0, double tol = 1e-10);

bool is_dominant(const RootSystem& rs, const Vec& X, double tol = 1e-12);

}  // namespace csf::root
