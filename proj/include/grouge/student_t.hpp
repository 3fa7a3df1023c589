// Copyright 2026 The GRouge Authors.
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

namespace grouge {

// I_x(a, b), evaluated by Lentz's continued fraction. Accurate to ~1e-13 for
// the moderate parameters used here.
double regularized_incomplete_beta(double a, double b, double x);

// P(T > t) for Student's t with `dof` degrees of freedom.
double student_t_upper_tail(double t, double dof);

}  // namespace grouge
