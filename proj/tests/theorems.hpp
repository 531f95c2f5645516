#pragma once

// Published closed forms E_k(n) = A_k(n) + B_k(n) E_1(n) at a = 1, k = 2..6.
// Coefficients are listed from the highest power of n down to n^0.

#include <string>
#include <vector>

#include "parking/exactalg.hpp"

namespace parking::testdata {

struct TheoremPair {
  unsigned k;
  std::vector<std::string> a_coeffs;
  std::vector<std::string> b_coeffs;
};

inline const std::vector<TheoremPair>& theorems() {
  static const std::vector<TheoremPair> t{
      {2, {"5/12", "-1/12", "-1/3", "0"}, {"-7/3", "-7/3"}},
      {3, {"-175/192", "-283/192", "199/192", "259/192", "0"}, {"15/32", "521/96", "1219/96", "743/96"}},
      {4,
       {"221/1008", "63737/30240", "101897/15120", "22217/5040", "-1375/189", "-187463/30240", "0"},
       {"-35/16", "-449/27", "-130243/2520", "-7409/105", "-503803/15120"}},
      {5,
       {"-105845/110592", "-2170159/290304", "-99955651/3870720", "-30773609/725760", "-94846903/11612160",
        "24676991/483840", "392763901/11612160", "0"},
       {"565/2048", "1005/128", "9832585/165888", "1111349/5184", "826358527/1935360", "159943787/362880",
        "1024580441/5806080"}},
      {6,
       {"82825/576576", "373340075/110702592", "9401544029/332107776", "14473244813/127733760",
        "414139396709/1660538880", "88215445651/332107776", "-18783816473/332107776", "-643359542029/1660538880",
        "-358936540409/1660538880", "0"},
       {"-3955/2048", "-186349/6144", "-259283273/1161216", "-119912501/129024", "-149860633081/63866880",
        "-601794266581/166053888", "-864000570107/276756480", "-921390308389/830269440"}},
  };
  return t;
}

inline SymPoly poly_in_n(const std::vector<std::string>& descending) {
  SymPoly p({"n"});
  const unsigned deg = static_cast<unsigned>(descending.size()) - 1;
  for (unsigned i = 0; i <= deg; ++i) p.add_term({deg - i}, parse_rat(descending[i]));
  return p;
}

}  // namespace parking::testdata
