// Copyright 2026 The coregauge Authors
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

/* Compiles the public header as C and exercises a few calls. */
#include <stdio.h>

#include "coregauge/coregauge.h"

int main(void) {
  cg_instance* inst = NULL;
  cg_vector* x = NULL;
  double value = 0.0;
  if (cg_generate("path", CG_GAME_MATCHING, 5, 0.1, 0, 0.5, 10.0, &inst, NULL) != CG_OK) return 1;
  if (cg_char_value(inst, 0x1f, &value) != CG_OK || value != 2.0) return 1;
  if (cg_allocate_matching(inst, 0.25, &x) != CG_OK || cg_vector_size(x) != 5) return 1;
  cg_vector_free(x);
  cg_instance_free(inst);
  printf("coregauge %s\n", cg_version());
  return 0;
}
