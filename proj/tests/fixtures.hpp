#pragma once

// Worked examples: grids, biwords and tableaux checked by hand.
// Rows are listed top to bottom.

#include <string>
#include <vector>

#include "bpdkit/bpd.hpp"
#include "bpdkit/pipedream.hpp"
#include "bpdkit/tableau.hpp"

namespace fixtures {

using Grid = std::vector<std::string>;

inline bpdkit::BumplessPipeDream bpd(const Grid& g) { return bpdkit::BumplessPipeDream(g); }

// The five elements of BPD(1432).
inline const std::vector<Grid> kBpd1432{
    {"r---", "|..r", "|.r+", "|r++"},
    {".r--", "rj.r", "|.r+", "|r++"},
    {".r--", ".|.r", "rjr+", "|r++"},
    {"..r-", "r-jr", "|.r+", "|r++"},
    {"..r-", ".rjr", "rjr+", "|r++"},
};

// Example of a BPD (permutation 21453) and the non-example where the
// circled pipes cross twice.
inline const Grid kBpdExample{"..r--", ".r+--", "rj|r-", "|rj|r", "||r++"};
inline const Grid kBpdNonExample{"..r--", ".r+--", ".||r-", "r+j|r", "||r++"};

// The worked BPD for 12587634 and its images.
inline const Grid kLarge{"..r-----", "r-j.r---", "|...|.r-", "|r--jrjr",
                        "||..rjr+", "||..|r++", "||r-++++", "|||r++++"};
// As printed next to the pipe dream; its letters multiply to 12685734.
inline const bpdkit::CompatibleSequence kLargeBiwordPrinted{{1, 1, 2, 3, 3, 3, 3, 5, 5, 6, 6},
                                                           {5, 4, 3, 7, 6, 5, 4, 6, 5, 7, 6}};
// phi of the grid above; only the first letter differs from the printed one.
inline const bpdkit::CompatibleSequence kLargeBiword{{1, 1, 2, 3, 3, 3, 3, 5, 5, 6, 6},
                                                    {6, 4, 3, 7, 6, 5, 4, 6, 5, 7, 6}};
inline const bpdkit::Tableau kLargeTableau{{{1, 1, 2, 3}, {3, 3, 3}, {5, 5}, {6, 6}}};

// The Gao-Huang chain B, nabla B, nabla^2 B, nabla^3 B with pops
// (1;3), (1;1), (2;4), (3;3).
inline const std::vector<Grid> kGaoHuangChain{
    {"..r--", ".r+--", "rj|.r", "|rjr+", "||r++"},
    {".r---", ".|r--", "r+j.r", "||r-+", "|||r+"},
    {"r----", "|.r--", "|rj.r", "||r-+", "|||r+"},
    {"r----", "|r---", "||.r-", "||r+-", "||||r"},
    {"r----", "|r---", "||r--", "|||r-", "||||r"},
};
inline const std::vector<std::pair<int, int>> kGaoHuangPops{{1, 3}, {1, 1}, {2, 4}, {3, 3}};
inline const bpdkit::CompatibleSequence kGaoHuangBiword{{1, 1, 2, 3}, {3, 1, 4, 3}};

// Grassmannian chain illustrating jdt(gamma(B)) = gamma(nabla B).
inline const std::vector<Grid> kGrassChain{
    {"..r----", ".rj.r--", ".|..|r-", ".|.rj|r", "r+-+-++", "||r+-++", "||||r++"},
    {".r-----", ".|.r---", ".|.|.r-", ".|.|rjr", "r+-++-+", "||r++-+", "|||||r+"},
    {"r------", "|..r---", "|..|.r-", "|..|rjr", "|r-++-+", "||r++-+", "|||||r+"},
};
inline const std::vector<std::pair<int, int>> kGrassChainPops{{1, 5}, {1, 1}};
inline const std::vector<bpdkit::Tableau> kGrassChainTableaux{
    bpdkit::Tableau{{{1, 1, 2}, {2, 3, 3}, {3, 4}, {4}}},
    bpdkit::Tableau{{{1, 2, 3}, {2, 3}, {3, 4}, {4}}},
    bpdkit::Tableau{{{2, 2, 3}, {3, 3}, {4, 4}}},
};

// The Huang bump H_34 on a BPD of 1432 after enlarging the grid by one.
inline const Grid kHuangStart{".r--", "rj.r", "|.r+", "|r++"};
inline const Grid kHuangEmbedded{".r---", "rj.r-", "|.r+-", "|r++-", "||||r"};
inline const Grid kHuangResult{".r---", "rj.r-", "|.rjr", "|r+-+", "|||r+"};

// Edelman-Greene worked example.
inline const bpdkit::CompatibleSequence kEgBiword{{1, 1, 2, 2}, {4, 2, 3, 2}};

// Jeu de taquin worked example.
inline const bpdkit::Tableau kJdtInput{{{1, 1, 3, 4}, {2, 4, 4, 5}, {3, 5}}};
inline const bpdkit::Tableau kJdtOutput{{{1, 3, 4, 4}, {2, 4, 5}, {3, 5}}};

}  // namespace fixtures
