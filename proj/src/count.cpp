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


#include "qorder/count.hpp"

namespace qorder {

void validate_dims(const InterfaceDims& d) {
  if (d.in1 < 1 || d.out1 < 1 || d.in2 < 1 || d.out2 < 1)
    throw Error(ErrorKind::InvalidArgument, "interface dimensions must be at least 1");
}

long quotient_dim(const InterfaceDims& d) {
  validate_dims(d);
  const long a = d.in1 * d.in1, b = d.out1 * d.out1;
  const long c = d.in2 * d.in2, e = d.out2 * d.out2;
  return a * c * (b + e - 1) - c * (e - 1) - a * (b - 1);
}

namespace {

long labels(const ProjectiveFamily& f) {
  long n = 1;  // idle setting
  for (int s = 0; s < f.num_settings(); ++s) n += f.num_outcomes(s);
  return n;
}

}  // namespace

long accessible_count(const ProjectiveFamily& f1, const ProjectiveFamily& f2) {
  return labels(f1) * labels(f2);
}

CountReport count_report(const ProjectiveFamily& f1, const ProjectiveFamily& f2,
                         const InterfaceDims& d) {
  CountReport r;
  r.accessible = accessible_count(f1, f2);
  r.quotient = quotient_dim(d);
  r.impossible = r.accessible < r.quotient;
  r.text = std::to_string(r.accessible) + (r.impossible ? " < " : " >= ") +
           std::to_string(r.quotient) +
           (r.impossible ? ": reconstruction impossible"
                         : ": counting does not rule out reconstruction");
  return r;
}

nlohmann::ordered_json count_report_to_json(const CountReport& r, const InterfaceDims& d) {
  nlohmann::ordered_json j;
  j["dims"] = {d.in1, d.out1, d.in2, d.out2};
  j["quotient_dim"] = r.quotient;
  j["accessible_count"] = r.accessible;
  j["impossible"] = r.impossible;
  j["summary"] = r.text;
  return j;
}

}  // namespace qorder
