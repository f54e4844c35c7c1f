// Copyright 2026 The hodge-bounds Authors
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


/* Compiles the public header as C and runs one round trip. */
#include <stdio.h>
#include <string.h>

#include "hodge_bounds/hodge_bounds.h"

int main(void) {
  hb_profile* pf = NULL;
  hb_catalog* cat = NULL;
  hb_catalog_options opts;
  char* out = NULL;
  int ok;
  if (hb_profile_new(2, 5, "2", &pf) != HB_OK) return 1;
  hb_catalog_options_default(&opts);
  if (hb_catalog_generate(pf, &opts, &cat) != HB_OK) return 1;
  if (hb_minimize(cat, "h02", NULL, NULL, HB_FORMAT_TEXT, &out) != HB_OK) return 1;
  ok = strncmp(out, "h02 >= 7 ", 9) == 0;
  printf("%s", out);
  hb_string_free(out);
  hb_catalog_free(cat);
  hb_profile_free(pf);
  return ok ? 0 : 1;
}
