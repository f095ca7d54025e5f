// Copyright 2026 The effectalg Authors
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


#include <catch_amalgamated.hpp>

#include "effectalg/suites.hpp"

using namespace effectalg;

namespace {

void require_clean(ModelKind model, std::size_t dim) {
  SuiteRequest req;
  req.suite = "all";
  req.model = model;
  req.dim = dim;
  req.trials = 1000;
  req.seed = 42;
  req.threads = 0;
  const auto r = run_suite(req);
  INFO(to_string(model) << " dim " << dim << "\n" << report_text(r));
  CHECK(r.trials >= 1000);
  CHECK(r.clean());
}

} // namespace

TEST_CASE("all suites, hilbert d = 2..4") {
  for (std::size_t d = 2; d <= 4; ++d)
    require_clean(ModelKind::Hilbert, d);
}

TEST_CASE("all suites, classical n = 2..8") {
  for (std::size_t n = 2; n <= 8; ++n)
    require_clean(ModelKind::Classical, n);
}
