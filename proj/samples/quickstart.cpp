// Copyright 2026 The eisrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints a few coefficients of 1/E_6, the zero of E_16 nearest to i and the
// first rows of the successive-quotient table.

#include <iostream>

#include "eisrec.hpp"

int main() {
  using namespace eisrec;

  const auto t = beta_table(Weight(6), 5);
  std::cout << "1/E_6 =";
  for (std::size_t n = 0; n < t.betas.size(); ++n) std::cout << ' ' << format_rational(t.betas[n]);
  std::cout << " + ...\n";

  const auto z = largest_imag_zero(Weight(16));
  std::cout << "z_16 = " << z.z.re().value().fixed(12) << " + " << z.z.im().value().fixed(12) << " i\n";

  const auto r = ratio_limit_check(Weight(6), 21);
  std::cout << "beta_6(20)/beta_6(21) = " << r.rows.back().ratio->value().sci(12) << ", e^{-2 pi} = "
            << r.target.value().sci(12) << '\n';

  const auto tab = table1();
  std::cout << "successive quotients: " << tab.cells_compared << " published cells, "
            << tab.mismatches.size() << " mismatches\n";
  return tab.pass() ? 0 : 1;
}
