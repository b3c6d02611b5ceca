// Copyright 2026 The f2ap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef F2AP_F2AP_HPP_
#define F2AP_F2AP_HPP_

#include "f2ap/bogolyubov_algo.hpp"
#include "f2ap/f2core.hpp"
#include "f2ap/fourier.hpp"
#include "f2ap/generators.hpp"
#include "f2ap/goldreich_levin.hpp"
#include "f2ap/oracle.hpp"
#include "f2ap/parallel.hpp"
#include "f2ap/periodicity.hpp"
#include "f2ap/point_set.hpp"
#include "f2ap/random.hpp"
#include "f2ap/sampling.hpp"
#include "f2ap/schedule.hpp"
#include "f2ap/sumset_subspace.hpp"

#endif  // F2AP_F2AP_HPP_
