/*
   Copyright 2026 The cyclo Authors

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

#ifndef CYCLO_CYCLO_HPP
#define CYCLO_CYCLO_HPP

#include "cosets.hpp"
#include "equal_difference.hpp"
#include "fields.hpp"
#include "leaders.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"

#endif  // CYCLO_CYCLO_HPP
