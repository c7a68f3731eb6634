// Copyright 2026 The eisrec Authors
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

#include "eisrec/analytic.hpp"
#include "eisrec/asymptotics.hpp"
#include "eisrec/bounds.hpp"
#include "eisrec/certified.hpp"
#include "eisrec/eisenstein.hpp"
#include "eisrec/errors.hpp"
#include "eisrec/format.hpp"
#include "eisrec/qseries.hpp"
#include "eisrec/quadratic.hpp"
#include "eisrec/real.hpp"
#include "eisrec/tables.hpp"
#include "eisrec/verify.hpp"
#include "eisrec/zeros.hpp"
