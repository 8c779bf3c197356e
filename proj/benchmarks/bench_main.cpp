// SPDX-License-Identifier: Apache-2.0
//
// vlcnoma: NOMA link-level toolkit for mobile VLC users with random orientation
// Copyright (C) 2026 The vlcnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

// Defined here rather than linking benchmark_main, whose static archive is not portable
// across compiler versions on some distributions.
BENCHMARK_MAIN();
