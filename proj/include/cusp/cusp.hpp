/*
   Copyright 2026 The cusp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CUSP_CUSP_HPP
#define CUSP_CUSP_HPP

#include "cusp/abelian.hpp"
#include "cusp/classical.hpp"
#include "cusp/errors.hpp"
#include "cusp/existence.hpp"
#include "cusp/integer.hpp"
#include "cusp/matrix.hpp"
#include "cusp/padic.hpp"
#include "cusp/poly.hpp"
#include "cusp/report.hpp"
#include "cusp/rootdatum.hpp"
#include "cusp/toruschar.hpp"
#include "cusp/weyl.hpp"
#include "cusp/zsygmondy.hpp"

#endif
