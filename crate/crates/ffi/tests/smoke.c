#include <stdio.h>
#include <string.h>

#include "liesymp.h"

static const char *N4_1 =
    "algebra n4_1\nbasis e1 e2 e3 e4\n[e2,e4] = e1\n[e3,e4] = e2\n"
    "torus e5 e6\n[e5,e1] = e1\n[e5,e3] = -e3\n[e5,e4] = e4\n"
    "[e6,e2] = e2\n[e6,e3] = 2*e3\n[e6,e4] = -e4\n";

int main(void) {
    LsAlgebra *g = NULL;
    if (ls_algebra_parse(N4_1, &g) != LS_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", ls_last_error());
        return 1;
    }
    LsVerdict *v = NULL;
    if (ls_decide_symplectic(g, &v) != LS_STATUS_OK) {
        fprintf(stderr, "decide: %s\n", ls_last_error());
        return 1;
    }
    LsExistence e;
    size_t z2 = 0;
    ls_verdict_existence(v, &e);
    ls_verdict_z2_dim(v, &z2);
    char *json = NULL;
    ls_verdict_json(v, &json);
    printf("dim=%zu existence=%d z2=%zu json=%s\n", ls_algebra_dim(g), (int)e, z2, strstr(json, "\"algebra\":\"n4_1\"") ? "ok" : "bad");
    ls_string_free(json);
    ls_verdict_free(v);
    ls_algebra_free(g);

    LsAlgebra *bad = NULL;
    LsStatus s = ls_algebra_parse("algebra x\nbasis e1\n[e1", &bad);
    printf("bad=%d null=%d\n", (int)s, bad == NULL);
    return 0;
}
