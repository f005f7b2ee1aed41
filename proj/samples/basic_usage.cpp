// Copyright 2026 The choi Authors
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

// Builds the amplitude-damping channel from Kraus operators and prints a few
// of its properties.
#include <cmath>
#include <iostream>

#include "choi/choi.hpp"

int main() {
  using namespace choi;
  const double g = 0.3;
  Matrix a0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - g)}};
  Matrix a1{{0.0, std::sqrt(g)}, {0.0, 0.0}};
  const Channel c = channel_from_kraus(KrausSet({a0, a1}));

  const ChannelVerdict v = classify(c);
  std::cout << "completely positive: " << std::boolalpha << v.completely_positive << "\n"
            << "trace preserving:    " << v.trace_preserving << "\n"
            << "unital:              " << v.unital << "\n"
            << "Kraus rank:          " << v.higher_rank << "\n";

  const Matrix excited = Matrix::unit(2, 2, 1, 1);
  const Matrix out = apply(c, excited);
  std::cout << "image of |1><1|:\n";
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) std::cout << "  " << out(i, j).real();
    std::cout << "\n";
  }

  const KrausSet back = kraus_from_channel(c);
  std::cout << "recovered " << back.size() << " Kraus operators\n";
  return 0;
}
