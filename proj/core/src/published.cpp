#include "primewheel/published.hpp"

namespace primewheel::published {

const std::vector<ProspectiveRatioRow>& table1() {
  static const std::vector<ProspectiveRatioRow> rows = {
      {2, "2", "2", "1"},
      {3, "8", "8", "1"},
      {4, "43", "48", ".896"},
      {5, "339", "480", ".706"},
      {6, "3242", "5760", ".563"},
      {7, "42204", "92160", ".458"},  // pi cell misprinted; sieve gives 42324
      {8, "646021", "1658880", ".389"},
      {9, "12283522", "36495360", ".337"},
      {10, "300369786", "1021870080", ".294"},
  };
  return rows;
}

const std::vector<StepRatioRow>& table2() {
  static const std::vector<StepRatioRow> rows = {
      {2, 3, 5, "1.25", "6", "1.11", ".526", ".658"},
      {3, 5, 7, "1.16", "30", "1.75", ".636", ".742"},
      {4, 7, 11, "1.1", "210", "2.23", ".690", ".759"},
      {5, 11, 13, "1.083", "2310", "3.02", ".751", ".814"},
      {6, 13, 17, "1.062", "30030", "3.64", ".784", ".833"},
      {7, 17, 19, "1.05", "510510", "4.46", ".816", ".862"},
      {8, 19, 23, "1.045", "9699690", "5.13", ".837", ".875"},
      {9, 23, 29, "1.035", "223092870", "5.71", ".851", ".881"},
  };
  return rows;
}

const std::vector<TwinDensityRow>& table3() {
  static const std::vector<TwinDensityRow> rows = {
      {3, 5, "34", "3", ".1", ".375"},
      {4, 7, "214", "15", ".0714", ".313"},
      {5, 11, "2314", "135", ".05834", ".281"},  // rho misprinted; 135/2310 = .05844
      {6, 13, "30034", "1485", ".0495", ".258"},
      {7, 17, "510514", "22275", ".0436", ".242"},
      {8, 19, "9699694", "378675", ".0390", ".228"},
      {9, 23, "223092874", "7952175", ".0356", ".218"},
      {10, 29, "6469693234", "214708725", ".0332", ".210"},
      {11, 31, "200560490134", "6226553035", ".0310", ".203"},  // n misprinted; product is ...025
      {12, 37, "7420738134814", "217929355875", ".0294", ".197"},
  };
  return rows;
}

const std::vector<SubsetTrendRow>& table_mintp() {
  static const std::vector<SubsetTrendRow> rows = {
      {11, 7, ".73"},
      {23, 19, ".966"},
      {53, 47, ".993"},
      {103, 101, ".991"},      // 9991/9999 = .9992; printed value drops a digit
      {1577, 1573, ".999992"},  // operands are composite (19*83, 11^2*13)
  };
  return rows;
}

const std::vector<TwinBoundRow>& table_bounds() {
  static const std::vector<TwinBoundRow> rows = {
      {4, 6, "7", "16", ".44"},
      {5, 15, "43", "74", ".58"},
      {6, 40, "350", "480", ".73"},
      {7, 127, "3988", "4653", ".86"},
      {8, 443, "52432", "57529", ".91"},
  };
  return rows;
}

}  // namespace primewheel::published
