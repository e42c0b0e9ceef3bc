// Copyright 2026 The qorder Authors
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

#include <string>

#include "qorder/measure.hpp"

namespace qorder {

struct InterfaceDims {
  long in1 = 2, out1 = 2, in2 = 2, out2 = 2;
};

// Throws InvalidArgument unless every dimension is at least 1.
void validate_dims(const InterfaceDims& d);

long quotient_dim(const InterfaceDims& d);

// Number of (setting, outcome) labels per side, with the idle setting
// contributing one dummy outcome, squared over both sides. An upper bound on
// the number of linearly independent accessible tensors.
long accessible_count(const ProjectiveFamily& f1, const ProjectiveFamily& f2);

struct CountReport {
  long accessible = 0;
  long quotient = 0;
  bool impossible = false;
  std::string text;
};

CountReport count_report(const ProjectiveFamily& f1, const ProjectiveFamily& f2,
                         const InterfaceDims& d);
nlohmann::ordered_json count_report_to_json(const CountReport& r, const InterfaceDims& d);

}  // namespace qorder
