// Copyright 2026 The Dicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Prints the expansion of a spin-1 Dicke state, checks it against the
// ladder construction and reports the negativity of two particles.
//
//   dicke_walkthrough [N] [M]

#include <cstdio>
#include <cstdlib>

#include "dicke/dicke.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 10;
  const dicke::Magnetization m = dicke::Magnetization::parse(argc > 2 ? argv[2] : "-1");
  const dicke::SpinSpecies spin1(2);

  const auto closed = dicke::dicke_expansion(spin1, n, m);
  const auto ladder = dicke::oracle_expansion(spin1, n, m);
  std::printf("|J=%d, M=%s> for %d spin-1 particles\n", n, m.str().c_str(), n);
  double worst = 0.0;
  for (const auto& t : closed.terms) {
    const double other = ladder.amplitude(t.occupation);
    worst = std::max(worst, std::abs(t.amplitude - other));
    std::printf("  %+.6f |%s>\n", t.amplitude, t.occupation.str().c_str());
  }
  std::printf("largest difference from the ladder construction: %.2e\n", worst);

  const auto rho = dicke::dicke_two_particle_rdm(closed);
  std::printf("two-particle negativity: %.6f\n", dicke::negativity(rho).value);
  return 0;
}
