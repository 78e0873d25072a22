/*
 * Copyright 2026 The Ortholog Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "ortholog/canon.hpp"
#include "ortholog/geo.hpp"
#include "ortholog/loglattice.hpp"
#include "ortholog/matcore.hpp"
#include "ortholog/matio.hpp"
#include "ortholog/plog.hpp"
#include "ortholog/random.hpp"
#include "ortholog/skewsvd.hpp"
#include "ortholog/types.hpp"
