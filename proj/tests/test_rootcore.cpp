#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "csf/rootcore.hpp"

using namespace csf::root;

TEST_CASE("catalog loads and validates") {
  CHECK(catalog().size() == 3);
  for (const auto& c : catalog()) {
    CHECK(c.rs.rank >= 1);
    CHECK_NOTHROW(c.rs.validate());
  }
}

TEST_CASE("case data: positive root counts and multiplicities") {
  const auto a1 = build_root_system(CaseTag::A1);
  CHECK(a1.positive_indices().size() == 1);
  CHECK(a1.roots[0].multiplicity == 1);

  const auto a2 = build_root_system(CaseTag::A2);
  CHECK(a2.positive_indices().size() == 3);

  const auto c2 = build_root_system(CaseTag::C2);
  CHECK(c2.positive_indices().size() == 4);
  // two long, two short positive roots
  int longs = 0, shorts = 0;
  for (int i : c2.positive_indices()) {
    const double n2 = c2.ip_dual(c2.roots[i].covector, c2.roots[i].covector);
    if (std::abs(n2 - 2.0) < 1e-12) ++longs;
    if (std::abs(n2 - 1.0) < 1e-12) ++shorts;
  }
  CHECK(longs == 2);
  CHECK(shorts == 2);
}

TEST_CASE("weyl group orders") {
  CHECK(weyl_group(build_root_system(CaseTag::A1)).size() == 2);
  CHECK(weyl_group(build_root_system(CaseTag::A2)).size() == 6);
  CHECK(weyl_group(build_root_system(CaseTag::C2)).size() == 8);
}

TEST_CASE("weyl elements permute roots and preserve multiplicities") {
  for (auto tag : {CaseTag::A1, CaseTag::A2, CaseTag::C2}) {
    const auto rs = build_root_system(tag);
    const auto W = weyl_group(rs);  // construction already validates
    // reflections permute the other positive roots
    for (int si : rs.simple_indices()) {
      const Vec a = rs.roots[si].covector;
      int w_refl = -1;
      for (int w = 0; w < W.size(); ++w) {
        if (W.word_length[w] == 1 &&
            (W.apply_covector(w, a) + a).lpNorm<Eigen::Infinity>() < 1e-9) {
          w_refl = w;
        }
      }
      REQUIRE(w_refl >= 0);
      for (int i : rs.positive_indices()) {
        if (i == si) continue;
        const Vec img = W.apply_covector(w_refl, Vec(rs.roots[i].covector));
        bool found_positive = false;
        for (int j : rs.positive_indices()) {
          if ((img - rs.roots[j].covector).lpNorm<Eigen::Infinity>() < 1e-9) {
            found_positive = true;
          }
        }
        CHECK(found_positive);
      }
    }
  }
}

TEST_CASE("rho values") {
  const auto a1 = build_root_system(CaseTag::A1);
  const Vec r1 = rho(a1);
  // rho = alpha/2, and in the catalog coordinates the scalar spectral
  // identification sends rho to 1
  CHECK(std::abs(r1[0] - 1.0) < 1e-14);

  const auto a2 = build_root_system(CaseTag::A2);
  const Vec r2 = rho(a2);
  Vec sum = Vec::Zero(2);
  for (int i : a2.simple_indices()) sum += a2.roots[i].covector;
  CHECK((r2 - sum).lpNorm<Eigen::Infinity>() < 1e-12);

  // <rho, alpha_check> = 1 for simple roots in the all-mult-1 cases
  for (auto tag : {CaseTag::A2, CaseTag::C2}) {
    const auto rs = build_root_system(tag);
    const Vec r = rho(rs);
    for (int i : rs.simple_indices()) {
      const Vec& a = rs.roots[i].covector;
      CHECK(std::abs(2.0 * rs.ip_dual(r, a) / rs.ip_dual(a, a) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("rho of an empty custom system is zero") {
  RootSystem rs;
  rs.tag = CaseTag::Custom;
  rs.rank = 1;
  rs.gram = Mat::Identity(1, 1);
  rs.gram_inv = rs.gram;
  CHECK(rho(rs).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("lattice enumeration") {
  const auto a1 = build_root_system(CaseTag::A1);
  const auto l1 = lattice_enum(a1, 2);
  CHECK(l1.size() == 3);  // {0, a, 2a}
  CHECK(l1[0].lpNorm<Eigen::Infinity>() == 0.0);

  const auto a2 = build_root_system(CaseTag::A2);
  const auto l2 = lattice_enum(a2, 1);
  CHECK(l2.size() == 4);  // {0, a1, a2, a1+a2}

  CHECK(lattice_enum(a2, 0).size() == 1);
}

TEST_CASE("cone coordinates") {
  const auto a2 = build_root_system(CaseTag::A2);
  const auto simples = a2.simple_indices();
  const Vec mu = a2.roots[simples[0]].covector + 2.0 * a2.roots[simples[1]].covector;
  const auto c = a2.cone_coordinates(mu);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 2);
  // outside the cone
  const auto bad = a2.cone_coordinates(Vec(-mu));
  CHECK(!bad.has_value());
}

TEST_CASE("gram scaling leaves spectral ratios unchanged") {
  const auto c2 = build_root_system(CaseTag::C2);
  std::vector<Vec> pos;
  std::vector<int> mult;
  for (int i : c2.positive_indices()) {
    pos.push_back(c2.roots[i].covector);
    mult.push_back(c2.roots[i].multiplicity);
  }
  for (double s : {0.5, 2.0}) {
    const auto scaled =
        build_custom_root_system(2, Mat(s * c2.gram), pos, mult, "scaled C2");
    CVec lam(2);
    lam << cplx(0.3, 0.7), cplx(-1.1, 0.2);
    for (int i : c2.positive_indices()) {
      const cplx r0 = c2.lambda_alpha(lam, c2.roots[i].covector);
      const cplx r1 = scaled.lambda_alpha(lam, c2.roots[i].covector);
      CHECK(std::abs(r0 - r1) < 1e-12);
    }
  }
}

TEST_CASE("custom validation rejects non-Weyl-invariant multiplicities") {
  const auto a2 = build_root_system(CaseTag::A2);
  std::vector<Vec> pos;
  std::vector<int> mult;
  for (int i : a2.positive_indices()) {
    pos.push_back(a2.roots[i].covector);
    mult.push_back(1);
  }
  mult[0] = 2;  // all A2 roots are Weyl-conjugate, so this cannot be invariant
  CHECK_THROWS_AS(build_custom_root_system(2, a2.gram, pos, mult),
                  csf::ValidationError);
}

TEST_CASE("orbit machinery") {
  const auto c2 = build_root_system(CaseTag::C2);
  const auto W = weyl_group(c2);
  const auto& cc = catalog_case(CaseTag::C2);
  const auto orb = orbit_of(W, Vec(1.5707963267948966 / 2.0 * cc.T0 * 2.0));
  // X_H = (pi/2) T0 has orbit size |W| / little_weyl_order = 8 / 2 = 4
  CHECK(orb.points.size() == 4);
}

TEST_CASE("dominance") {
  const auto a2 = build_root_system(CaseTag::A2);
  const auto& cc = catalog_case(CaseTag::A2);
  CHECK(is_dominant(a2, cc.T0));
  CHECK(!is_dominant(a2, Vec(-cc.T0)));
}
