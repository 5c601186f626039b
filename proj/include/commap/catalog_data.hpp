#pragma once

// Embedded classification table of real simple Lie algebras.
// Schema: docs/catalog_schema.md. Node numbering follows Bourbaki.

namespace commap::detail {

inline constexpr const char* kCatalogJson = R"json(
{
  "schema": "commap.catalog",
  "version": 1,
  "families": [
    {
      "family": "sl(n,R)", "params": ["n"], "name": "sl({n},R)",
      "diagram": "AI", "classical": true, "realization": "sl_real",
      "valid": {"ge": ["n", 2]},
      "flags": {"split": true, "compact": false, "complex": false,
                "inner_type": {"eq": ["n", 2]}, "hermitian": {"eq": ["n", 2]}}
    },
    {
      "family": "sl(n,H)", "params": ["n"], "name": "sl({n},H)",
      "diagram": "AII", "classical": true, "realization": "sl_quaternion",
      "valid": {"ge": ["n", 2]},
      "flags": {"split": false, "compact": false, "complex": false,
                "inner_type": false, "hermitian": false}
    },
    {
      "family": "su(p,q)", "params": ["p", "q"], "name": "su({p},{q})",
      "diagram": "AIII", "classical": true, "realization": "su_indefinite",
      "valid": {"and": [{"ge": ["p", 1]}, {"le": ["p", "q"]}]},
      "flags": {"split": {"and": [{"eq": ["p", 1]}, {"eq": ["q", 1]}]},
                "compact": false, "complex": false,
                "inner_type": true, "hermitian": true}
    },
    {
      "family": "su(n)", "params": ["n"], "name": "su({n})",
      "diagram": "compact_A", "classical": true, "realization": "su_compact",
      "valid": {"ge": ["n", 2]},
      "flags": {"split": false, "compact": true, "complex": false,
                "inner_type": true, "hermitian": false}
    },
    {
      "family": "sl(n,C)", "params": ["n"], "name": "sl({n},C)",
      "diagram": "complex_A", "classical": true, "realization": "sl_complex",
      "valid": {"ge": ["n", 2]},
      "flags": {"split": false, "compact": false, "complex": true,
                "inner_type": false, "hermitian": false}
    },
    {
      "family": "so(p,q)", "params": ["p", "q"], "name": "so({p},{q})",
      "diagram": "BDI", "classical": true, "realization": "so_indefinite",
      "valid": {"and": [{"ge": ["p", 1]}, {"le": ["p", "q"]},
                        {"ge": [{"add": ["p", "q"]}, 5]}]},
      "flags": {"split": {"le": ["q", {"add": ["p", 1]}]},
                "compact": false, "complex": false,
                "inner_type": {"or": [{"even": "p"}, {"even": "q"}]},
                "hermitian": {"eq": ["p", 2]}}
    },
    {
      "family": "so(n)", "params": ["n"], "name": "so({n})",
      "diagram": "compact_BD", "classical": true, "realization": "so_compact",
      "valid": {"ge": ["n", 5]},
      "flags": {"split": false, "compact": true, "complex": false,
                "inner_type": true, "hermitian": false}
    },
    {
      "family": "so(n,C)", "params": ["n"], "name": "so({n},C)",
      "diagram": "complex_BD", "classical": true, "realization": "so_complex",
      "valid": {"ge": ["n", 5]},
      "flags": {"split": false, "compact": false, "complex": true,
                "inner_type": false, "hermitian": false}
    },
    {
      "family": "sp(m,R)", "params": ["m"], "name": "sp({m},R)",
      "diagram": "CI", "classical": true, "realization": "sp_real",
      "valid": {"and": [{"even": "m"}, {"ge": ["m", 4]}]},
      "flags": {"split": true, "compact": false, "complex": false,
                "inner_type": true, "hermitian": true}
    },
    {
      "family": "sp(p,q)", "params": ["p", "q"], "name": "sp({p},{q})",
      "diagram": "CII", "classical": true, "realization": "sp_indefinite",
      "valid": {"and": [{"ge": ["p", 1]}, {"le": ["p", "q"]}]},
      "flags": {"split": false, "compact": false, "complex": false,
                "inner_type": true, "hermitian": false}
    },
    {
      "family": "sp(n)", "params": ["n"], "name": "sp({n})",
      "diagram": "compact_C", "classical": true, "realization": "sp_compact",
      "valid": {"ge": ["n", 2]},
      "flags": {"split": false, "compact": true, "complex": false,
                "inner_type": true, "hermitian": false}
    },
    {
      "family": "sp(m,C)", "params": ["m"], "name": "sp({m},C)",
      "diagram": "complex_C", "classical": true, "realization": "sp_complex",
      "valid": {"and": [{"even": "m"}, {"ge": ["m", 4]}]},
      "flags": {"split": false, "compact": false, "complex": true,
                "inner_type": false, "hermitian": false}
    },
    {
      "family": "so*(m)", "params": ["m"], "name": "so*({m})",
      "diagram": "DIII", "classical": true, "realization": "so_star",
      "valid": {"and": [{"even": "m"}, {"ge": ["m", 6]}]},
      "flags": {"split": false, "compact": false, "complex": false,
                "inner_type": true, "hermitian": true}
    }
  ],
  "exceptional": [
    {"name": "EI",    "series": "E", "rank": 6, "black": [], "arrows": [],
     "flags": {"split": true,  "compact": false, "complex": false, "inner_type": false, "hermitian": false}},
    {"name": "EII",   "series": "E", "rank": 6, "black": [], "arrows": [[1, 6], [3, 5]],
     "flags": {"split": false, "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "EIII",  "series": "E", "rank": 6, "black": [3, 4, 5], "arrows": [[1, 6]],
     "flags": {"split": false, "compact": false, "complex": false, "inner_type": true,  "hermitian": true}},
    {"name": "EIV",   "series": "E", "rank": 6, "black": [2, 3, 4, 5], "arrows": [],
     "flags": {"split": false, "compact": false, "complex": false, "inner_type": false, "hermitian": false}},
    {"name": "EV",    "series": "E", "rank": 7, "black": [], "arrows": [],
     "flags": {"split": true,  "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "EVI",   "series": "E", "rank": 7, "black": [2, 5, 7], "arrows": [],
     "flags": {"split": false, "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "EVII",  "series": "E", "rank": 7, "black": [2, 3, 4, 5], "arrows": [],
     "flags": {"split": false, "compact": false, "complex": false, "inner_type": true,  "hermitian": true}},
    {"name": "EVIII", "series": "E", "rank": 8, "black": [], "arrows": [],
     "flags": {"split": true,  "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "EIX",   "series": "E", "rank": 8, "black": [2, 3, 4, 5], "arrows": [],
     "flags": {"split": false, "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "FI",    "series": "F", "rank": 4, "black": [], "arrows": [],
     "flags": {"split": true,  "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "FII",   "series": "F", "rank": 4, "black": [1, 2, 3], "arrows": [],
     "flags": {"split": false, "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "G",     "series": "G", "rank": 2, "black": [], "arrows": [],
     "flags": {"split": true,  "compact": false, "complex": false, "inner_type": true,  "hermitian": false}},
    {"name": "e6", "series": "E", "rank": 6, "black": "all", "arrows": [],
     "flags": {"split": false, "compact": true, "complex": false, "inner_type": true, "hermitian": false}},
    {"name": "e7", "series": "E", "rank": 7, "black": "all", "arrows": [],
     "flags": {"split": false, "compact": true, "complex": false, "inner_type": true, "hermitian": false}},
    {"name": "e8", "series": "E", "rank": 8, "black": "all", "arrows": [],
     "flags": {"split": false, "compact": true, "complex": false, "inner_type": true, "hermitian": false}},
    {"name": "f4", "series": "F", "rank": 4, "black": "all", "arrows": [],
     "flags": {"split": false, "compact": true, "complex": false, "inner_type": true, "hermitian": false}},
    {"name": "g2", "series": "G", "rank": 2, "black": "all", "arrows": [],
     "flags": {"split": false, "compact": true, "complex": false, "inner_type": true, "hermitian": false}},
    {"name": "E6(C)", "series": "E", "rank": 6, "complex": true,
     "flags": {"split": false, "compact": false, "complex": true, "inner_type": false, "hermitian": false}},
    {"name": "E7(C)", "series": "E", "rank": 7, "complex": true,
     "flags": {"split": false, "compact": false, "complex": true, "inner_type": false, "hermitian": false}},
    {"name": "E8(C)", "series": "E", "rank": 8, "complex": true,
     "flags": {"split": false, "compact": false, "complex": true, "inner_type": false, "hermitian": false}},
    {"name": "F4(C)", "series": "F", "rank": 4, "complex": true,
     "flags": {"split": false, "compact": false, "complex": true, "inner_type": false, "hermitian": false}},
    {"name": "G2(C)", "series": "G", "rank": 2, "complex": true,
     "flags": {"split": false, "compact": false, "complex": true, "inner_type": false, "hermitian": false}}
  ],
  "aliases": [
    {"name": "sl(1,H)",  "canonical": "su(2)"},
    {"name": "so(3)",    "canonical": "su(2)"},
    {"name": "sp(1)",    "canonical": "su(2)"},
    {"name": "so(1,2)",  "canonical": "sl(2,R)"},
    {"name": "sp(2,R)",  "canonical": "sl(2,R)"},
    {"name": "so(1,3)",  "canonical": "sl(2,C)"},
    {"name": "so(3,C)",  "canonical": "sl(2,C)"},
    {"name": "sp(2,C)",  "canonical": "sl(2,C)"},
    {"name": "su(1,1)",  "canonical": "sl(2,R)"},
    {"name": "so(2,3)",  "canonical": "sp(4,R)"},
    {"name": "so(1,4)",  "canonical": "sp(1,1)"},
    {"name": "so(5)",    "canonical": "sp(2)"},
    {"name": "so(5,C)",  "canonical": "sp(4,C)"},
    {"name": "so(3,3)",  "canonical": "sl(4,R)"},
    {"name": "so(2,4)",  "canonical": "su(2,2)"},
    {"name": "so(1,5)",  "canonical": "sl(2,H)"},
    {"name": "so(6)",    "canonical": "su(4)"},
    {"name": "so(6,C)",  "canonical": "sl(4,C)"},
    {"name": "so*(6)",   "canonical": "su(1,3)"},
    {"name": "so*(8)",   "canonical": "so(2,6)"}
  ]
}
)json";

}  // namespace commap::detail
