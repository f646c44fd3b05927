// Copyright 2026 The Authors.
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

#pragma once

#include "orthomatroid/axioms.hpp"
#include "orthomatroid/closed_sets.hpp"
#include "orthomatroid/components.hpp"
#include "orthomatroid/error.hpp"
#include "orthomatroid/generators.hpp"
#include "orthomatroid/io.hpp"
#include "orthomatroid/isomorphism.hpp"
#include "orthomatroid/lattice.hpp"
#include "orthomatroid/laws.hpp"
#include "orthomatroid/orthoset.hpp"
#include "orthomatroid/rays.hpp"
#include "orthomatroid/roundtrip.hpp"
#include "orthomatroid/subset.hpp"
