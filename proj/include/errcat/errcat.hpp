// Copyright 2026 The errcat Authors
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

// Umbrella header.

#ifndef ERRCAT_ERRCAT_HPP
#define ERRCAT_ERRCAT_HPP

#include "errcat/categorizer.hpp"
#include "errcat/category.hpp"
#include "errcat/cli.hpp"
#include "errcat/corpus.hpp"
#include "errcat/error.hpp"
#include "errcat/fixtures.hpp"
#include "errcat/lexicon.hpp"
#include "errcat/metrics.hpp"
#include "errcat/parallel.hpp"
#include "errcat/report.hpp"
#include "errcat/shift.hpp"
#include "errcat/text.hpp"

#endif  // ERRCAT_ERRCAT_HPP
