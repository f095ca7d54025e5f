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

/// @file Umbrella header.

#pragma once

#include "effectalg/axioms.hpp"
#include "effectalg/classical.hpp"
#include "effectalg/contexts.hpp"
#include "effectalg/effect.hpp"
#include "effectalg/error.hpp"
#include "effectalg/generate.hpp"
#include "effectalg/hilbert.hpp"
#include "effectalg/io.hpp"
#include "effectalg/numeric.hpp"
#include "effectalg/properties.hpp"
#include "effectalg/report.hpp"
#include "effectalg/rng.hpp"
#include "effectalg/sequential.hpp"
#include "effectalg/suites.hpp"
