#include "qtoric/case.hpp"

namespace qtoric {

const std::string& builtin_cases_json()
{
    static const std::string text = R"json(
{
  "cases": [
    {
      "id": "C1",
      "description": "Hurwitz order, disc(D) = 2, level 1, weight 8",
      "algebra": {"a": "-1", "b": "-1"},
      "disc_D": 2,
      "level": 1,
      "order_basis": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"],
                      ["1/2", "1/2", "1/2", "1/2"]],
      "lattice_basis": [["0", "-1", "1", "1"], ["0", "1", "-1", "1"], ["0", "1", "1", "-1"]],
      "l": 3,
      "weight": 8,
      "local_types": {"2": "omegaSt"},
      "eta": [{"coefficient": 1, "factors": [[1, 8], [2, 8]]}],
      "phi": [[[3, 0, 0], 1], [[0, 3, 0], 1], [[0, 0, 3], 1],
              [[2, 1, 0], -1], [[2, 0, 1], -1], [[1, 2, 0], -1],
              [[0, 2, 1], -1], [[1, 0, 2], -1], [[0, 1, 2], -1], [[1, 1, 1], 2]],
      "congruence": {"quantity": "phi_squared", "modulus": 4, "delta_multiplier": 1},
      "applicability": {"modulus": 8, "residues": [5]},
      "period_modulus": 2
    },
    {
      "id": "C2",
      "description": "disc(D) = 2, level 3, weight 4",
      "algebra": {"a": "-1", "b": "-1"},
      "disc_D": 2,
      "level": 3,
      "order_basis": [["1", "0", "0", "0"], ["0", "1", "-1", "0"], ["0", "1", "0", "-1"],
                      ["1/2", "1/2", "1/2", "1/2"]],
      "lattice_basis": [["0", "2", "-2", "0"], ["0", "2", "0", "-2"], ["0", "1", "1", "1"]],
      "l": 1,
      "weight": 4,
      "local_types": {"2": "omegaSt", "3": "omegaSt"},
      "eta": [{"coefficient": 1, "factors": [[1, 2], [2, 2], [3, 2], [6, 2]]}],
      "phi": [[[0, 0, 1], 1]],
      "congruence": {"quantity": "phi_squared", "modulus": 8, "delta_multiplier": -3},
      "applicability": {"modulus": 24, "residues": [13, 21]},
      "period_modulus": 2
    },
    {
      "id": "C3",
      "description": "disc(D) = 3, level 2, weight 4",
      "algebra": {"a": "-1", "b": "-3"},
      "disc_D": 3,
      "level": 2,
      "order_basis": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"],
                      ["1/2", "1/2", "1/2", "1/2"]],
      "lattice_basis": [["0", "2", "0", "0"], ["0", "0", "2", "0"], ["0", "1", "1", "1"]],
      "l": 1,
      "weight": 4,
      "local_types": {"2": "omegaSt", "3": "omegaSt"},
      "eta": [{"coefficient": 1, "factors": [[1, 2], [2, 2], [3, 2], [6, 2]]}],
      "phi": [[[1, 0, 0], 2], [[0, 0, 1], 1]],
      "congruence": {"quantity": "phi_squared", "modulus": 6, "delta_multiplier": -1},
      "applicability": {"modulus": 24, "residues": [17]},
      "period_modulus": 2
    },
    {
      "id": "C4",
      "description": "disc(D) = 2, level 3, weight 6",
      "algebra": {"a": "-1", "b": "-1"},
      "disc_D": 2,
      "level": 3,
      "order_basis": [["1", "0", "0", "0"], ["0", "1", "-1", "0"], ["0", "1", "0", "-1"],
                      ["1/2", "1/2", "1/2", "1/2"]],
      "lattice_basis": [["0", "2", "-2", "0"], ["0", "2", "0", "-2"], ["0", "1", "1", "1"]],
      "l": 2,
      "weight": 6,
      "local_types": {"2": "St", "3": "omegaSt"},
      "eta": [{"coefficient": 1, "factors": [[1, 5], [2, 5], [3, 1], [6, 1]]},
              {"coefficient": 9, "factors": [[1, 1], [2, 1], [3, 5], [6, 5]]}],
      "phi": [[[2, 0, 0], 4], [[1, 1, 0], 4], [[0, 2, 0], 4], [[0, 0, 2], -3]],
      "congruence": {"quantity": "phi", "modulus": 4, "delta_multiplier": -3},
      "applicability": {"modulus": 24, "residues": [13, 21]},
      "period_modulus": 4
    },
    {
      "id": "C5",
      "description": "disc(D) = 3, level 1, weight 6",
      "algebra": {"a": "-1", "b": "-3"},
      "disc_D": 3,
      "level": 1,
      "order_basis": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["1/2", "0", "1/2", "0"],
                      ["0", "1/2", "0", "1/2"]],
      "lattice_basis": [["0", "0", "1", "0"], ["0", "1", "0", "1"], ["0", "1", "0", "-1"]],
      "l": 2,
      "weight": 6,
      "local_types": {"3": "St"},
      "eta": [{"coefficient": 1, "factors": [[1, 6], [3, 6]]}],
      "phi": [[[2, 0, 0], 3], [[0, 2, 0], -2], [[0, 0, 2], -2], [[0, 1, 1], 2]],
      "congruence": {"quantity": "phi", "modulus": 6, "delta_multiplier": -1},
      "applicability": {"modulus": 3, "residues": [2]},
      "period_modulus": 3
    },
    {
      "id": "C6",
      "description": "disc(D) = 2, level 5, weight 4",
      "algebra": {"a": "-1", "b": "-1"},
      "disc_D": 2,
      "level": 5,
      "order_basis": [["1", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "1", "2", "0"],
                      ["1/2", "3/2", "1/2", "1/2"]],
      "lattice_basis": [["0", "0", "0", "2"], ["0", "2", "4", "0"], ["0", "3", "1", "1"]],
      "l": 1,
      "weight": 4,
      "local_types": {"2": "St", "5": "St"},
      "eta": [{"coefficient": 1, "factors": [[1, 3], [2, 3], [5, 1], [10, 1]]},
              {"coefficient": 5, "factors": [[1, 1], [2, 1], [5, 3], [10, 3]]}],
      "phi": [[[1, 0, 0], 2], [[0, 0, 1], 1]],
      "congruence": {"quantity": "phi_squared", "modulus": 10, "delta_multiplier": -1},
      "applicability": {"modulus": 40, "residues": [21, 29]},
      "period_modulus": 2
    }
  ]
}
)json";
    return text;
}

}  // namespace qtoric
