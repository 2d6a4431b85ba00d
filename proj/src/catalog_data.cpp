#include "csf/rootcore.hpp"

namespace csf::root {

// Embedded catalog resource. Schema (version 1):
//   version: integer
//   cases[]: tag, name, rank,
//     gram: rank x rank SPD matrix (inner product on Cartan points),
//     positive_roots[]: { covector: length-rank array, multiplicity },
//     T0: Cartan point with alpha(T0) in {0, +1, -1} for every root,
//     spectral_basis[]: chamber generators; the Plancherel measure is
//       Lebesgue in these coordinates,
//     little_weyl_order: order of the stabiliser of X_H in the Weyl group.
// Values are exact-to-double; the loader revalidates every invariant.
const char* catalog_json() {
  return R"json({
  "version": 1,
  "cases": [
    {
      "tag": "A1",
      "name": "SL(2,R)",
      "rank": 1,
      "gram": [[2.0]],
      "positive_roots": [
        { "covector": [2.0], "multiplicity": 1 }
      ],
      "T0": [0.5],
      "spectral_basis": [[1.0]],
      "little_weyl_order": 1,
      "description": "split rank one; Cartan coordinate s <-> diag(s,-s); rho <-> 1"
    },
    {
      "tag": "A2",
      "name": "SL(3,R)",
      "rank": 2,
      "gram": [[1.0, 0.0], [0.0, 1.0]],
      "positive_roots": [
        { "covector": [1.4142135623730951, 0.0], "multiplicity": 1 },
        { "covector": [-0.7071067811865476, 1.224744871391589], "multiplicity": 1 },
        { "covector": [0.7071067811865476, 1.224744871391589], "multiplicity": 1 }
      ],
      "T0": [0.7071067811865475, 0.40824829046386296],
      "spectral_basis": [
        [0.7071067811865475, 0.40824829046386296],
        [0.0, 0.8164965809277261]
      ],
      "little_weyl_order": 2,
      "description": "trace-form-isometric coordinates of the traceless diagonals; T0 matches the SO(1,2) boundary orbit"
    },
    {
      "tag": "C2",
      "name": "Sp(2,R)",
      "rank": 2,
      "gram": [[2.0, 0.0], [0.0, 2.0]],
      "positive_roots": [
        { "covector": [1.0, -1.0], "multiplicity": 1 },
        { "covector": [0.0, 2.0], "multiplicity": 1 },
        { "covector": [1.0, 1.0], "multiplicity": 1 },
        { "covector": [2.0, 0.0], "multiplicity": 1 }
      ],
      "T0": [0.5, 0.5],
      "spectral_basis": [
        [1.0, 0.0],
        [1.0, 1.0]
      ],
      "little_weyl_order": 2,
      "description": "coordinates (a,b) <-> diag(a,b,-a,-b); long roots 2e_i, short e_1 +- e_2"
    }
  ]
})json";
}

}  // namespace csf::root
