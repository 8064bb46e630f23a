/*
* Copyright (C) 2026 The nestedepi Authors
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
#ifndef NESTEDEPI_EXECUTION_HPP
#define NESTEDEPI_EXECUTION_HPP

namespace nestedepi
{

/// serial is the reference path; parallel spreads independent evaluations
/// over OpenMP threads and must produce identical results.
enum class Execution
{
    serial,
    parallel,
};

} // namespace nestedepi

#endif // NESTEDEPI_EXECUTION_HPP
