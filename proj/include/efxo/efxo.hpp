//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/generate.hpp"
#include "efxo/instance.hpp"
#include "efxo/near_bipartite.hpp"
#include "efxo/one_forest.hpp"
#include "efxo/orientation.hpp"
#include "efxo/preprocess.hpp"
#include "efxo/rational.hpp"
#include "efxo/reductions.hpp"
#include "efxo/rng.hpp"
#include "efxo/rooting.hpp"
#include "efxo/solvers.hpp"
#include "efxo/structure.hpp"
#include "efxo/twosat.hpp"
#include "efxo/verify.hpp"
