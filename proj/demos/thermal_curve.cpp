// Copyright 2026 The bea Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Prints the thermal (Gibbs) curve of three Bell operators next to the
// von Neumann boundary. Only the operator with ξ₁ = 2√2 touches it.

#include <cstdio>
#include <vector>

#include "bea/extremal.hpp"
#include "bea/regions.hpp"

int main() {
  const std::vector<double> xis = {bea::kTsirelson, 2.4, 2.0};
  std::vector<double> lambdas;
  for (int i = 0; i <= 10; ++i) lambdas.push_back(0.25 * i);

  std::printf("%8s %6s %10s %10s %10s\n", "xi1", "lambda", "beta", "S12", "gap");
  for (double xi1 : xis) {
    for (const bea::CurvePoint& p : bea::gibbs_curve(xi1, lambdas)) {
      const double bound = bea::upper_bound(bea::RegionId::VnTotal, p.beta);
      std::printf("%8.4f %6.2f %10.6f %10.6f %10.2e\n", xi1, p.lambda, p.beta, p.entropy,
                  bound - p.entropy);
    }
  }
  return 0;
}
