/*
 *   Copyright 2026 The weilcat Authors
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

// Everything in one include.

#ifndef WEILCAT_WEILCAT_HPP
#define WEILCAT_WEILCAT_HPP

#include "cli.hpp"
#include "dsl.hpp"
#include "errors.hpp"
#include "instances.hpp"
#include "json.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "natural.hpp"
#include "random.hpp"
#include "space.hpp"
#include "tangent.hpp"
#include "text.hpp"
#include "weil.hpp"

#endif
