/*
 * Copyright 2026 The HIM Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/** \file him.hpp
 * Umbrella header: the whole public interface of the HIM library.
 */

#ifndef HIM_HIM_HPP
#define HIM_HIM_HPP

#include "him/bench.hpp"
#include "him/bootstrap.hpp"
#include "him/cipher.hpp"
#include "him/digest.hpp"
#include "him/errors.hpp"
#include "him/eval.hpp"
#include "him/keys.hpp"
#include "him/log.hpp"
#include "him/mask.hpp"
#include "him/matrix.hpp"
#include "him/numbers.hpp"
#include "him/params.hpp"
#include "him/prime.hpp"
#include "him/rng.hpp"
#include "him/serialize.hpp"

#endif  // HIM_HIM_HPP
