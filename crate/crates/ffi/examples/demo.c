#include <stdio.h>
#include "hlzeta.h"
int main(void) {
  HlzComplex out;
  HlzComplex z = {0.5, 0}, s = {2, 0}, v = {1, 0};
  if (hlz_lerch_phi(NULL, z, s, v, &out) != HLZ_STATUS_OK) return 1;
  printf("%.17g %.17g\n", out.re, out.im);
  HlzComplex one = {1, 0};
  HlzStatus st = hlz_lerch_phi(NULL, one, s, v, &out);
  printf("%d %s\n", st, hlz_last_error());
  return 0;
}
