#pragma once

// Relation schemas for the consecutive squares and consecutive triangular families.
// Each relation is a signed coefficient vector v over (d0, d1, d2, d3) with
// sum v_i d_i == 0; every coefficient is [c0, c1] meaning c0 + c1 * p, where
// n = step * p + offset. Base relation i has its own coefficient positive.
// A chain applies start + t * sign * delta for t = 1 .. length.

namespace semigroup_lab::detail {

inline constexpr const char* kSchemaJson = R"json(
[
 {"family": "squares", "class": "12k", "step": 12, "offset": 0, "min": 2, "apex": "first",
  "base": [[[2,7],[-2,0],[5,-3],[-2,-4]],
           [[-1,0],[4,6],[-1,0],[0,-6]],
           [[-1,-5],[0,0],[0,9],[0,-4]],
           [[0,0],[-1,-6],[-2,0],[1,6]]],
  "extra": {"eq1": [[1,7],[1,0],[2,-3],[-1,-4]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[2,7],[-3,-6],[3,-3],[-1,2]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [0,2]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [0,2]}]},
 {"family": "squares", "class": "12k+4", "step": 12, "offset": 4, "min": 1, "apex": "first",
  "base": [[[4,7],[-1,0],[3,-3],[-3,-4]],
           [[-1,0],[6,6],[-1,0],[-2,-6]],
           [[-2,-5],[-2,0],[5,9],[-2,-4]],
           [[0,0],[-3,-6],[-2,0],[3,6]]],
  "extra": {"eq1": [[3,7],[2,0],[0,-3],[-2,-4]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[4,7],[-4,-6],[1,-3],[0,2]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [1,2]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [1,2]}]},
 {"family": "squares", "class": "12k+8", "step": 12, "offset": 8, "min": 1, "apex": "first",
  "base": [[[6,7],[0,0],[1,-3],[-4,-4]],
           [[-1,0],[8,6],[-1,0],[-4,-6]],
           [[-4,-5],[-1,0],[7,9],[-3,-4]],
           [[0,0],[-5,-6],[-2,0],[5,6]]],
  "extra": {"eq1": [[5,7],[3,0],[-2,-3],[-3,-4]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[6,7],[-5,-6],[-1,-3],[1,2]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [1,2]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [1,2]}]},
 {"family": "squares", "class": "12k+1", "step": 12, "offset": 1, "min": 2, "apex": "first",
  "base": [[[2,6],[-1,0],[2,-6],[-1,0]],
           [[-2,-4],[5,9],[-2,0],[0,-5]],
           [[-1,-6],[-2,0],[1,6],[0,0]],
           [[0,-4],[-4,-3],[0,0],[1,7]]],
  "extra": {"eq1": [[-1,4],[7,3],[-3,0],[0,-7]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[1,4],[-2,-9],[-1,0],[1,5]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [-1,2]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [-1,2]}]},
 {"family": "squares", "class": "12k+5", "step": 12, "offset": 5, "min": 1, "apex": "first",
  "base": [[[4,6],[-1,0],[0,-6],[-1,0]],
           [[-3,-4],[7,9],[-1,0],[-2,-5]],
           [[-3,-6],[-2,0],[3,6],[0,0]],
           [[-2,-4],[-3,-3],[-2,0],[4,7]]],
  "extra": {"eq1": [[1,4],[6,3],[-1,0],[-3,-7]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[2,4],[-4,-9],[-2,0],[3,5]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [0,2]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [0,2]}]},
 {"family": "squares", "class": "12k+9", "step": 12, "offset": 9, "min": 0, "apex": "first",
  "base": [[[6,6],[-1,0],[-2,-6],[-1,0]],
           [[-4,-4],[9,9],[0,0],[-4,-5]],
           [[-5,-6],[-2,0],[5,6],[0,0]],
           [[-3,-4],[-5,-3],[-1,0],[6,7]]],
  "extra": {"eq1": [[2,4],[8,3],[-2,0],[-5,-7]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[3,4],[-6,-9],[-3,0],[5,5]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [0,2]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [0,2]}]},
 {"family": "squares", "class": "4m+2", "step": 4, "offset": 2, "min": 2, "apex": "first",
  "base": [[[5,4],[-2,0],[3,-4],[-2,0]],
           [[-1,0],[4,1],[-2,0],[0,-1]],
           [[-3,-4],[-4,0],[3,4],[0,0]],
           [[0,0],[-1,-1],[-1,0],[1,1]]],
  "extra": {"eq1": [[4,4],[1,0],[0,-4],[-1,0]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[5,4],[-3,-1],[2,-4],[-1,1]]},
  "chains": [{"start": "eq3", "delta": "eq2", "sign": -1, "length": [1,0]}]},
 {"family": "squares", "class": "4m+3", "step": 4, "offset": 3, "min": 2, "apex": "first",
  "base": [[[2,1],[-2,0],[2,-1],[-1,0]],
           [[-2,0],[11,4],[-2,0],[-3,-4]],
           [[-1,-1],[-1,0],[1,1],[0,0]],
           [[0,0],[-5,-4],[-4,0],[5,4]]],
  "extra": {"eq1": [[0,1],[9,4],[0,-1],[-4,-4]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[1,0],[-8,-4],[-1,0],[4,4]]},
  "chains": []},
 {"family": "triangular", "class": "6k", "step": 6, "offset": 0, "min": 2, "apex": "first",
  "base": [[[1,3],[0,-3],[0,0],[0,0]],
           [[-1,-3],[0,3],[0,0],[0,0]],
           [[-1,-2],[0,0],[0,3],[0,-1]],
           [[-1,-2],[0,0],[-2,0],[1,2]]],
  "extra": {"eq1": [[0,2],[3,0],[-1,0],[0,-2]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[0,3],[3,-3],[-3,0],[1,0]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [-1,1]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [-2,1]}]},
 {"family": "triangular", "class": "6k+2", "step": 6, "offset": 2, "min": 2, "apex": "first",
  "base": [[[2,3],[-1,-3],[0,0],[0,0]],
           [[-2,-3],[1,3],[0,0],[0,0]],
           [[-1,-2],[-2,0],[3,3],[-1,-1]],
           [[-1,-2],[-2,0],[0,0],[1,2]]],
  "extra": {"eq1": [[0,2],[5,0],[-3,0],[0,-2]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[1,3],[2,-3],[-3,0],[1,0]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [-1,1]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [-1,1]}]},
 {"family": "triangular", "class": "6k+4", "step": 6, "offset": 4, "min": 2, "apex": "first",
  "base": [[[3,3],[-2,-3],[0,0],[0,0]],
           [[-3,-3],[2,3],[0,0],[0,0]],
           [[-2,-2],[-1,0],[3,3],[-1,-1]],
           [[-2,-2],[-1,0],[-1,0],[2,2]]],
  "extra": {"eq1": [[1,2],[4,0],[-2,0],[-1,-2]],
            "eq2": [[1,0],[-3,0],[3,0],[-1,0]],
            "eq3": [[2,3],[1,-3],[-3,0],[1,0]]},
  "chains": [{"start": "eq1", "delta": "eq2", "sign": -1, "length": [0,1]},
             {"start": "eq3", "delta": "eq2", "sign": -1, "length": [-1,1]}]},
 {"family": "triangular", "class": "6k+1", "step": 6, "offset": 1, "min": 2, "apex": "second",
  "base": [[[2,3],[0,0],[-1,-3],[0,0]],
           [[1,-3],[3,6],[-1,-3],[0,0]],
           [[-2,-3],[0,0],[1,3],[0,0]],
           [[-1,0],[-1,-2],[-1,0],[1,2]]],
  "extra": {"eq1": [[2,0],[0,1],[-1,0],[0,-1]],
            "eq2": [[-2,6],[-2,-6],[3,0],[-1,0]],
            "eq3": [[3,0],[-1,0],[-3,0],[1,0]],
            "eq31": [[1,0],[-1,-1],[-2,0],[1,1]]},
  "chains": [{"start": "eq1", "delta": "eq3", "sign": 1, "length": [-1,1]},
             {"start": "eq2", "delta": "eq3", "sign": -1, "length": [-1,2]}]},
 {"family": "triangular", "class": "6k+3", "step": 6, "offset": 3, "min": 2, "apex": "second",
  "base": [[[3,3],[0,0],[-2,-3],[0,0]],
           [[0,-3],[5,6],[-2,-3],[0,0]],
           [[-3,-3],[0,0],[2,3],[0,0]],
           [[0,0],[-1,-1],[-1,0],[1,1]]],
  "extra": {"eq1": [[3,0],[0,1],[-2,0],[0,-1]],
            "eq2": [[0,6],[-4,-6],[3,0],[-1,0]],
            "eq3": [[3,0],[-1,0],[-3,0],[1,0]]},
  "chains": [{"start": "eq1", "delta": "eq3", "sign": 1, "length": [-1,1]},
             {"start": "eq2", "delta": "eq3", "sign": -1, "length": [-1,1]}]},
 {"family": "triangular", "class": "6k+5", "step": 6, "offset": 5, "min": 2, "apex": "second",
  "base": [[[4,3],[0,0],[-3,-3],[0,0]],
           [[-1,-3],[7,6],[-3,-3],[0,0]],
           [[-4,-3],[0,0],[3,3],[0,0]],
           [[-1,0],[-1,-1],[0,0],[1,1]]],
  "extra": {"eq1": [[4,0],[0,1],[-3,0],[0,-1]],
            "eq2": [[2,6],[-6,-6],[3,0],[-1,0]],
            "eq3": [[3,0],[-1,0],[-3,0],[1,0]]},
  "chains": [{"start": "eq1", "delta": "eq3", "sign": 1, "length": [-1,1]},
             {"start": "eq2", "delta": "eq3", "sign": -1, "length": [-1,1]}]}
]
)json";

}  // namespace semigroup_lab::detail
